#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "treegray/events.hpp"

namespace treegray {

/// Which spanning tree the general generator starts from.
enum class StartRule {
  Scan,  // initial_spanning_tree
  Dfs,   // dfs_spanning_tree
};

struct EdgeExchangeOptions {
  StartRule start = StartRule::Scan;
  /// Overrides `start` when set; must be a spanning tree of the graph.
  std::optional<ParentForest> start_tree;
};

/// Edge-exchange Gray code for the spanning trees of a connected graph.
///
/// Levels are peeled off from vertex 1: children still hanging below the
/// current parent set P are split into connected components, each
/// component gets a mixed-radix digit string (digit r > 0 = attached to its
/// r-th adjacent member of P), and the components are sequenced by a
/// two-dimensional recursion. Consecutive trees differ by one removed and
/// one added edge which need not share a vertex.
///
/// Throws ConnectivityError for a disconnected graph before emitting.
GenerationStats gen_edge_exchange(const Graph& g, const TreeVisitor& visit, const EdgeExchangeOptions& options = {});

/// Digit string, maximum digits and candidate parent lists of one component.
struct CandidateParents {
  std::vector<int> digits;
  std::vector<int> maxvals;
  std::vector<std::vector<Vertex>> parents;
};

/// For each child of `comp` (in order): its neighbours in `parents` (in
/// that order), the list length as maximum digit, and the 1-based position
/// of its current parent in the list or 0 if the parent lies elsewhere.
CandidateParents candidate_parents(std::span<const Vertex> parents, std::span<const Vertex> comp,
                                   const ParentForest& tree, const Graph& g);

/// Edge (a, b) of g with a in the subtree of v (restricted to comp) and b a
/// member of comp outside it. The subtree is listed breadth first through
/// children in comp order; the first adjacent pair is returned scanning
/// subtree vertices in the outer loop and the remaining comp vertices in the
/// inner loop. Throws std::logic_error when no such edge exists.
std::pair<Vertex, Vertex> find_reconnection(std::span<const Vertex> comp, Vertex v, const ParentForest& tree,
                                            const Graph& g);

/// Edge-exchange Gray code for K_{m,n} (parts {1..m}, {m+1..m+n}) in
/// constant amortized time.
///
/// Each level's parents lie in one part, so the pending children split into
/// the opposite part (candidates, adjacent to every parent) and the same
/// part (never attachable at this level). A child dropping to digit 0 with a
/// child x of its own is re-hung by turning x into its parent and attaching
/// x to any other child still attached at the level; a leaf is attached to
/// a same-part vertex instead. Per-vertex child lists make both O(1).
GenerationStats gen_bipartite(int m, int n, const TreeVisitor& visit);

}  // namespace treegray
