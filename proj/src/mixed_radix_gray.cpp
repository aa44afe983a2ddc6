#include "treegray/mixed_radix_gray.hpp"

#include <limits>

#include "treegray/parent_forest.hpp"

namespace treegray {

void MixedRadixGray::reset(std::span<const int> maxvals, std::span<const int> start) {
  if (maxvals.size() != start.size()) throw DomainError("maxvals and start string differ in length");
  if (maxvals.empty()) throw DomainError("empty string");
  const std::size_t n = maxvals.size();

  maxvals_.assign(maxvals.begin(), maxvals.end());
  digits_.assign(start.begin(), start.end());
  dir_.resize(n);
  sum_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (maxvals_[i] < 0) throw DomainError("negative maximum digit at position " + std::to_string(i));
    if (digits_[i] < 0 || digits_[i] > maxvals_[i]) {
      throw DomainError("start digit " + std::to_string(digits_[i]) + " at position " + std::to_string(i) +
                        " exceeds its maximum " + std::to_string(maxvals_[i]));
    }
    dir_[i] = digits_[i] == 1 ? -1 : 1;
    sum_ += digits_[i];
  }
  if (sum_ == 0) throw DomainError("start string must not be all zero");

  // Full nesting order first (the swap is defined over all positions), then
  // drop the fixed positions.
  std::vector<std::size_t> full(n);
  for (std::size_t i = 0; i < n; ++i) full[i] = i;
  for (std::size_t i = n; i-- > 0;) {
    if (maxvals_[i] > 1) {
      std::swap(full[i], full[n - 1]);
      break;
    }
  }
  order_.clear();
  for (std::size_t p : full)
    if (maxvals_[p] > 0) order_.push_back(p);

  round_.assign(order_.size(), 0);
  delta_.clear();
  depth_ = 0;
  mode_ = Mode::Enter;
  exhausted_ = false;
  clear_delta_ = false;
  work_ = 0;
}

bool MixedRadixGray::next() {
  if (exhausted_) return false;
  if (clear_delta_) {
    delta_.clear();
    clear_delta_ = false;
  }
  const std::size_t innermost = order_.size() - 1;
  for (;;) {
    ++work_;
    switch (mode_) {
      case Mode::Enter:
        if (depth_ == innermost) {
          mode_ = Mode::AfterLeaf;
          if (sum_ != 0) {
            if (delta_.size() > 1 && delta_[0] == delta_[1]) delta_.pop_back();
            clear_delta_ = true;
            return true;
          }
        } else {
          ++depth_;
          round_[depth_] = 0;
        }
        continue;
      case Mode::AfterChild: {
        const std::size_t child = order_[depth_ + 1];
        dir_[child] = digits_[child] == maxvals_[child] ? 1 : -dir_[child];
        [[fallthrough]];
      }
      case Mode::AfterLeaf: {
        const std::size_t p = order_[depth_];
        const int k = maxvals_[p];
        if (round_[depth_] < k) {
          const int updated = (digits_[p] + dir_[p] + k + 1) % (k + 1);
          sum_ += updated - digits_[p];
          digits_[p] = updated;
          delta_.push_back(p);
        }
        if (++round_[depth_] <= k) {
          mode_ = Mode::Enter;
          continue;
        }
        if (depth_ == 0) {
          exhausted_ = true;
          return false;
        }
        --depth_;
        mode_ = Mode::AfterChild;
        continue;
      }
    }
  }
}

std::uint64_t MixedRadixGray::listing_size() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (int k : maxvals_) {
    const auto base = static_cast<std::uint64_t>(k) + 1;
    if (total > kMax / base) return kMax;
    total *= base;
  }
  return total - 1;
}

std::vector<std::string> gray_listing(std::span<const int> maxvals, std::span<const int> start) {
  MixedRadixGray gen(maxvals, start);
  std::vector<std::string> out;
  while (gen.next()) {
    std::string s;
    for (int d : gen.digits()) s.push_back(digit_char(d));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace treegray
