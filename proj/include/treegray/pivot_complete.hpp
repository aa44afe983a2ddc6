#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "treegray/events.hpp"

namespace treegray {

/// Doubly linked chain over the indices 0..capacity-1 of one level's
/// children, recording which ones currently hang off the previous level.
///
/// Removing an element that is not the tail moves `last` to that element's
/// successor, and append() links the new element after whatever `last` is.
/// The pivot listing's case (b) attaches to `last`, so this exact discipline
/// fixes the published order of the complete-graph listing.
class ActiveChain {
 public:
  void reset(std::size_t capacity);

  void append(int index);
  void remove(int index);

  bool contains(int index) const { return member_[static_cast<std::size_t>(index)] != 0; }
  /// Most recently linked element, -1 when empty.
  int last() const { return last_; }
  int size() const { return size_; }

 private:
  std::vector<int> prev_;
  std::vector<int> next_;
  std::vector<char> member_;
  int last_ = -1;
  int size_ = 0;
};

/// Called when a recursion frame finishes with the number of parents |P|,
/// the number of children left unattached on entry, and the trees emitted
/// while the frame was live.
using PivotFrameHook = std::function<void(int parents, int pending, std::uint64_t trees)>;

struct PivotOptions {
  PivotFrameHook frame_hook;
};

/// Pivot Gray code for the spanning trees of K_n (n >= 1), starting from
/// the path 1-2-...-n. Each tree is visited once; consecutive trees differ
/// by one removed and one added edge with a shared endpoint.
/// Throws InputError for n < 1.
GenerationStats gen_pivot_complete(int n, const TreeVisitor& visit, const PivotOptions& options = {});

}  // namespace treegray
