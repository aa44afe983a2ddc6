#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treegray/graph.hpp"
#include "treegray/parent_forest.hpp"

namespace treegray {

using BigInt = boost::multiprecision::cpp_int;

/// Brute-force enumeration refused because the search space is too large.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of spanning trees: determinant of the Laplacian with row and
/// column 1 removed, by fraction-free (Bareiss) elimination. 1 for n = 1,
/// 0 for disconnected graphs.
BigInt count_matrix_tree(const Graph& g);

/// f(k, c) = k (k + c)^(c - 1), f(k, 0) = 1: rooted forests on k + c
/// labelled vertices whose roots are k given vertices. With `cross_check`
/// the recursive sum is also evaluated and a mismatch throws logic_error.
BigInt cayley_count(int k, int c, bool cross_check = false);

/// f(k, c) = sum_{i=1..c} C(c, i) k^i f(i, c - i), evaluated directly.
BigInt cayley_count_recursive(int k, int c);

/// Every spanning tree as a sorted edge list, from all (n-1)-edge subsets.
/// Throws CapacityError when n > 10 or C(|E|, n-1) > 10^7.
std::vector<std::vector<Edge>> brute_force_trees(const Graph& g);

enum class Transition { Identical, Pivot, EdgeExchange, Invalid };

const char* to_string(Transition t);

/// Compares undirected edge sets; edge orientation is ignored. Throws
/// InputError when the vertex counts differ.
Transition classify_transition(const ParentForest& a, const ParentForest& b);

enum class ListingMode { Pivot, EdgeExchange };

struct Violation {
  std::uint64_t index = 0;  // 0-based tree index where the problem shows
  std::string description;
};

struct ListingReport {
  std::uint64_t tree_count = 0;
  std::uint64_t distinct_count = 0;
  bool all_spanning = true;
  BigInt expected_count = 0;
  /// Indexed by Transition.
  std::array<std::uint64_t, 4> transitions{};
  /// 1-based index i of every transition i -> i+1 that is not a pivot.
  std::vector<std::uint64_t> non_pivot;
  std::optional<Violation> first_violation;
  ListingMode mode = ListingMode::EdgeExchange;

  std::uint64_t count(Transition t) const { return transitions[static_cast<std::size_t>(t)]; }
  bool passed() const { return !first_violation.has_value(); }
  /// Line-oriented "key: value" rendering.
  std::string to_text() const;
};

/// Streaming listing checker. Keeps a copy of the graph, the previous tree
/// and one digest per tree (16 bytes each for n <= 16), so memory grows
/// linearly with the listing; add() throws CapacityError past `max_trees`.
class ListingValidator {
 public:
  static constexpr std::uint64_t kDefaultMaxTrees = 50'000'000;

  ListingValidator(const Graph& g, ListingMode mode, std::uint64_t max_trees = kDefaultMaxTrees);

  void add(const ParentForest& tree);
  /// Runs the duplicate scan and count comparison; call once.
  ListingReport finish();

 private:
  void flag(std::uint64_t index, std::string description);

  Graph g_;
  std::uint64_t max_trees_;
  ListingReport report_;
  ParentForest prev_;
  bool packed_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> packed_digests_;
  std::vector<std::pair<std::string, std::uint64_t>> text_digests_;
};

ListingReport validate_listing(const Graph& g, const std::vector<ParentForest>& listing, ListingMode mode);

}  // namespace treegray
