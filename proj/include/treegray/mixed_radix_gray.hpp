#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace treegray {

/// Start string or digit bounds outside the generator's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Resumable reflectable Gray code over mixed-radix strings, skipping the
/// all-zero string.
///
/// Position i holds digits 0..maxvals[i] (maxvals is the largest digit, not
/// the base). The listing starts at the given string and visits every other
/// non-zero string exactly once; consecutive strings differ in one digit, or
/// (all-binary case only, where the skipped all-zero string sat between them)
/// by moving the single 1 to another position.
///
/// Nesting: positions are nested in index order, except that the
/// highest-index position with maxval > 1 is swapped into the innermost
/// slot. Directions start at -1 for digits equal to 1 and +1 otherwise; when
/// a nested position finishes its sweep its direction resets to +1 if its
/// digit sits at its maximum and is reversed otherwise.
///
/// Positions with maxval 0 are dropped from the nesting entirely (they hold 0
/// throughout), so every recursion node branches at least twice and next()
/// runs in amortized O(1).
class MixedRadixGray {
 public:
  MixedRadixGray() = default;
  MixedRadixGray(std::span<const int> maxvals, std::span<const int> start) { reset(maxvals, start); }

  /// Reinitialises in place, reusing storage. Throws DomainError when the
  /// lengths differ, the start string is all zero, or a digit is out of range.
  void reset(std::span<const int> maxvals, std::span<const int> start);

  /// Advances to the next string. The first call yields the start string
  /// with an empty delta. Returns false once every string has been emitted
  /// (and on every call after that).
  bool next();

  bool exhausted() const { return exhausted_; }

  /// Current string (valid after a successful next()).
  std::span<const int> digits() const { return digits_; }
  int digit(std::size_t position) const { return digits_[position]; }
  /// Positions changed since the previous emission: empty on the first
  /// emission, one entry for a single-digit change, two for a 0/1 swap.
  std::span<const std::size_t> delta() const { return delta_; }

  std::size_t length() const { return digits_.size(); }
  /// Number of strings the full listing contains: prod(maxval + 1) - 1.
  /// Saturates at UINT64_MAX.
  std::uint64_t listing_size() const;

  /// Primitive steps performed so far (loop iterations of the nesting).
  std::uint64_t work() const { return work_; }

 private:
  enum class Mode : std::uint8_t { Enter, AfterLeaf, AfterChild };

  std::vector<int> maxvals_;
  std::vector<int> digits_;
  std::vector<int> dir_;
  std::vector<std::size_t> order_;  // nesting slot -> position (only maxval > 0)
  std::vector<int> round_;          // per nesting slot loop counter
  std::vector<std::size_t> delta_;
  long long sum_ = 0;
  std::size_t depth_ = 0;
  Mode mode_ = Mode::Enter;
  bool exhausted_ = true;
  bool clear_delta_ = false;
  std::uint64_t work_ = 0;
};

/// Full listing as strings (digits rendered with the compact alphabet).
std::vector<std::string> gray_listing(std::span<const int> maxvals, std::span<const int> start);

}  // namespace treegray
