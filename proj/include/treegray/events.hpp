#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "treegray/graph.hpp"
#include "treegray/parent_forest.hpp"

namespace treegray {

/// One edge removed from the previous tree and one added.
struct EdgeSwap {
  Edge removed;
  Edge added;

  /// The two edges share an endpoint.
  bool is_pivot() const { return removed.shares_endpoint(added); }
  friend bool operator==(const EdgeSwap&, const EdgeSwap&) = default;
};

/// A single listing step. `tree` is a view of the generator's working tree
/// and is only valid during the callback; copy it to keep it. `change` is
/// empty for the first tree.
struct TransitionEvent {
  const ParentForest& tree;
  std::optional<EdgeSwap> change;
  std::uint64_t index = 0;  // 0-based position in the listing
};

/// Return false to stop the generator early.
using TreeVisitor = std::function<bool(const TransitionEvent&)>;

/// Totals for one run. `work` counts constant-cost primitive steps
/// (loop iterations, link rewrites, frame set-up per vertex) and excludes
/// the visitor.
struct GenerationStats {
  std::uint64_t trees = 0;
  std::uint64_t work = 0;
  bool stopped_early = false;

  double work_per_tree() const { return trees == 0 ? 0.0 : static_cast<double>(work) / static_cast<double>(trees); }
};

namespace detail {

/// Shared emission bookkeeping: buffers the change made since the last
/// emitted tree and forwards trees to the visitor.
class Emitter {
 public:
  Emitter(const ParentForest& tree, const TreeVisitor& visit) : tree_(tree), visit_(visit) {}

  void record(Edge removed, Edge added) { pending_ = EdgeSwap{removed, added}; }

  /// Returns false once the visitor asked to stop.
  bool emit() {
    TransitionEvent ev{tree_, pending_, stats.trees};
    pending_.reset();
    ++stats.trees;
    if (visit_ && !visit_(ev)) {
      stats.stopped_early = true;
      return false;
    }
    return true;
  }

  GenerationStats stats;

 private:
  const ParentForest& tree_;
  const TreeVisitor& visit_;
  std::optional<EdgeSwap> pending_;
};

}  // namespace detail

}  // namespace treegray
