#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "support.hpp"
#include "treegray/mixed_radix_gray.hpp"

using namespace treegray;
using namespace testsupport;

namespace {

struct Step {
  std::vector<int> digits;
  std::vector<std::size_t> delta;
};

/// Direct recursive nested-loop formulation over all positions (fixed
/// positions included), used as the oracle for the iterative generator.
std::vector<Step> oracle_listing(const std::vector<int>& k, std::vector<int> a) {
  const std::size_t n = k.size();
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i] == 1 ? -1 : 1;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i-- > 0;) {
    if (k[i] > 1) {
      std::swap(order[i], order[n - 1]);
      break;
    }
  }
  int sum = 0;
  for (int x : a) sum += x;
  std::vector<std::size_t> changed;
  std::vector<Step> out;

  std::function<void(std::size_t)> rec = [&](std::size_t slot) {
    const std::size_t p = order[slot];
    for (int r = 0; r <= k[p]; ++r) {
      if (slot == n - 1) {
        if (sum != 0) {
          if (changed.size() > 1 && changed[0] == changed[1]) changed.pop_back();
          out.push_back({a, changed});
          changed.clear();
        }
      } else {
        rec(slot + 1);
        const std::size_t q = order[slot + 1];
        d[q] = a[q] == k[q] ? 1 : -d[q];
      }
      if (r < k[p]) {
        const int b = (a[p] + d[p] + k[p] + 1) % (k[p] + 1);
        sum += b - a[p];
        a[p] = b;
        changed.push_back(p);
      }
    }
  };
  rec(0);
  return out;
}

std::vector<Step> run(const std::vector<int>& k, const std::vector<int>& a) {
  MixedRadixGray g(k, a);
  std::vector<Step> out;
  while (g.next()) {
    out.push_back({std::vector<int>(g.digits().begin(), g.digits().end()),
                   std::vector<std::size_t>(g.delta().begin(), g.delta().end())});
  }
  return out;
}

std::vector<int> digits_of(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(char_digit(c));
  return out;
}

std::string text(const std::vector<int>& digits) {
  std::string s;
  for (int d : digits) s.push_back(digit_char(d));
  return s;
}

/// Legal step: one digit changes, or a single 1 moves (0/1 swap).
bool one_gray(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) diff.push_back(i);
  if (diff.size() == 1) return true;
  if (diff.size() != 2) return false;
  const auto nonzero = [](const std::vector<int>& v) { return std::count_if(v.begin(), v.end(), [](int d) { return d != 0; }); };
  return nonzero(x) == 1 && nonzero(y) == 1 && x[diff[0]] + x[diff[1]] == y[diff[0]] + y[diff[1]];
}

/// Calls f(maxvals) for every vector of length 1..max_len with entries 0..max_digit.
void for_each_shape(int max_len, int max_digit, const std::function<void(const std::vector<int>&)>& f) {
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> k(static_cast<std::size_t>(len), 0);
    for (;;) {
      f(k);
      int i = len - 1;
      while (i >= 0 && k[static_cast<std::size_t>(i)] == max_digit) k[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++k[static_cast<std::size_t>(i)];
    }
  }
}

/// Every string with digits bounded by k, in lexicographic order.
std::vector<std::vector<int>> all_strings(const std::vector<int>& k) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(k.size(), 0);
  for (;;) {
    out.push_back(a);
    int i = static_cast<int>(k.size()) - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == k[static_cast<std::size_t>(i)]) a[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

TEST_CASE("ternary listing from 0120") {
  const auto expected = read_tokens("ternary_0120.txt");
  REQUIRE(expected.size() == 80);
  CHECK(gray_listing(std::vector<int>{2, 2, 2, 2}, digits_of("0120")) == expected);
}

TEST_CASE("small listings") {
  CHECK(gray_listing(std::vector<int>{1}, std::vector<int>{1}) == std::vector<std::string>{"1"});
  CHECK(gray_listing(std::vector<int>{1, 1, 1}, digits_of("100")) ==
        std::vector<std::string>{"100", "101", "111", "110", "010", "011", "001"});
  CHECK(gray_listing(std::vector<int>{1, 1}, digits_of("10")) == std::vector<std::string>{"10", "11", "01"});

  // Nested-loop order from 11: the inner position moves first.
  MixedRadixGray g(std::vector<int>{1, 1}, digits_of("11"));
  REQUIRE(g.next());
  CHECK(g.delta().empty());
  REQUIRE(g.next());
  CHECK(text({g.digits().begin(), g.digits().end()}) == "10");
  CHECK(g.delta().size() == 1);
  REQUIRE(g.next());
  CHECK(text({g.digits().begin(), g.digits().end()}) == "01");
  CHECK(g.delta().size() == 2);  // 00 skipped: the 1 moved
  CHECK_FALSE(g.next());
  CHECK(g.exhausted());
  CHECK_FALSE(g.next());  // idempotent
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(MixedRadixGray(std::vector<int>{1, 1}, std::vector<int>{0, 0}), DomainError);
  CHECK_THROWS_AS(MixedRadixGray(std::vector<int>{1, 1}, std::vector<int>{2, 0}), DomainError);
  CHECK_THROWS_AS(MixedRadixGray(std::vector<int>{1, 1}, std::vector<int>{1}), DomainError);
  CHECK_THROWS_AS(MixedRadixGray(std::vector<int>{}, std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(MixedRadixGray(std::vector<int>{0, 0}, std::vector<int>{0, 0}), DomainError);
  CHECK_THROWS_AS(MixedRadixGray(std::vector<int>{2}, std::vector<int>{-1}), DomainError);
}

TEST_CASE("listing size and reuse") {
  MixedRadixGray g(std::vector<int>{2, 0, 3}, std::vector<int>{0, 0, 1});
  CHECK(g.listing_size() == 11);
  std::uint64_t emitted = 0;
  while (g.next()) ++emitted;
  CHECK(emitted == 11);
  CHECK(g.work() > 0);

  g.reset(std::vector<int>{1, 1}, std::vector<int>{1, 0});
  CHECK_FALSE(g.exhausted());
  CHECK(g.listing_size() == 3);
  emitted = 0;
  while (g.next()) ++emitted;
  CHECK(emitted == 3);

  const std::vector<int> huge(70, 1);
  std::vector<int> start(70, 0);
  start[0] = 1;
  CHECK(MixedRadixGray(huge, start).listing_size() == UINT64_MAX);
}

TEST_CASE("iterative generator equals the recursive formulation") {
  std::size_t cases = 0;
  for_each_shape(4, 3, [&](const std::vector<int>& k) {
    for (const auto& start : all_strings(k)) {
      if (std::all_of(start.begin(), start.end(), [](int d) { return d == 0; })) continue;
      const auto expect = oracle_listing(k, start);
      const auto got = run(k, start);
      REQUIRE(got.size() == expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].digits == expect[i].digits);
        CHECK(got[i].delta == expect[i].delta);
      }
      ++cases;
    }
  });
  CHECK(cases > 10000);
}

TEST_CASE("completeness, 1-Gray steps and fixed positions") {
  for_each_shape(5, 3, [&](const std::vector<int>& k) {
    const auto strings = all_strings(k);
    if (strings.size() > 150) return;
    for (const auto& start : strings) {
      if (std::all_of(start.begin(), start.end(), [](int d) { return d == 0; })) continue;
      const auto got = run(k, start);
      // Every non-zero string exactly once.
      std::set<std::vector<int>> seen;
      for (const auto& s : got) seen.insert(s.digits);
      CHECK(seen.size() == got.size());
      CHECK(got.size() == strings.size() - 1);
      CHECK(got.front().digits == start);
      CHECK(got.front().delta.empty());
      bool steps_ok = true;
      for (std::size_t i = 1; i < got.size(); ++i) {
        steps_ok = steps_ok && one_gray(got[i - 1].digits, got[i].digits);
        steps_ok = steps_ok && (got[i].delta.size() == 1 || got[i].delta.size() == 2);
        for (std::size_t p : got[i].delta) steps_ok = steps_ok && k[p] > 0;
        int sum = 0;
        for (int d : got[i].digits) sum += d;
        steps_ok = steps_ok && sum > 0;
      }
      CHECK(steps_ok);
    }
  });
}

TEST_CASE("binary listings are cyclic") {
  for (int len = 1; len <= 8; ++len) {
    const std::vector<int> k(static_cast<std::size_t>(len), 1);
    for (const auto& start : all_strings(k)) {
      if (std::all_of(start.begin(), start.end(), [](int d) { return d == 0; })) continue;
      const auto got = run(k, start);
      if (got.size() > 1) CHECK(one_gray(got.back().digits, got.front().digits));
    }
  }
}

TEST_CASE("exhaustive sweep up to a million strings") {
  // One large shape per radix mix; a single start each keeps this fast.
  const std::vector<std::vector<int>> shapes = {{9, 9, 9, 9, 9, 9}, {1, 4, 0, 7, 3, 2, 9, 5}, {3, 3, 3, 3, 3, 3, 3, 3, 3, 3}};
  for (const auto& k : shapes) {
    std::vector<int> start(k.size(), 0);
    start[1] = 1;
    MixedRadixGray g(k, start);
    std::uint64_t count = 0;
    std::vector<int> prev;
    std::vector<char> seen(static_cast<std::size_t>(g.listing_size()) + 1, 0);
    bool steps_ok = true;
    while (g.next()) {
      std::vector<int> cur(g.digits().begin(), g.digits().end());
      std::size_t rank = 0;
      for (std::size_t i = 0; i < k.size(); ++i) rank = rank * static_cast<std::size_t>(k[i] + 1) + static_cast<std::size_t>(cur[i]);
      CHECK_FALSE(seen[rank]);
      seen[rank] = 1;
      if (!prev.empty() && !one_gray(prev, cur)) steps_ok = false;
      prev = std::move(cur);
      ++count;
    }
    CHECK(steps_ok);
    CHECK(count == g.listing_size());
  }
}
