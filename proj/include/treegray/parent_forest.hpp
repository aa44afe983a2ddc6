#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treegray/graph.hpp"

namespace treegray {

/// Compact string could not be decoded into a tree rooted at vertex 1.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rooted spanning tree stored as parent pointers; vertex 1 is the root and
/// has parent kNoVertex.
class ParentForest {
 public:
  ParentForest() = default;
  /// All parents unset.
  explicit ParentForest(int n) : parent_(static_cast<std::size_t>(n) + 1, kNoVertex) {}

  int order() const { return static_cast<int>(parent_.size()) - 1; }

  Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
  void set_parent(Vertex v, Vertex p) { parent_[static_cast<std::size_t>(v)] = p; }

  /// parent(v) for v = 0..n, index 0 unused.
  std::span<const Vertex> parents() const { return parent_; }

  /// Every non-root vertex reaches vertex 1 and the root has no parent.
  bool is_rooted_tree() const;
  /// Rooted tree whose edges all belong to g (and g has the same order).
  bool is_spanning_tree_of(const Graph& g) const;

  /// Undirected edge set, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const ParentForest&, const ParentForest&) = default;

 private:
  std::vector<Vertex> parent_;
};

/// Reverses every parent link strictly above v: if the chain from v was
/// v -> w_m -> ... -> w_0 (w_0 has no parent) then afterwards
/// parent(w_i) = w_{i+1} and parent(w_m) = v. parent(v) is left unchanged
/// for the caller to reassign. Returns the number of links rewritten.
int lift(ParentForest& f, Vertex v);

/// Deterministic first tree: candidate parents i = 1..n are scanned in order
/// and every still-unparented neighbour j of an already placed i gets
/// parent(j) = i. Unplaced vertices are skipped and the scan repeats until
/// every vertex is placed, so the result is always a tree.
/// Throws ConnectivityError when g is disconnected.
ParentForest initial_spanning_tree(const Graph& g);

/// Depth-first tree from vertex 1, neighbours tried in increasing order.
/// Throws ConnectivityError when g is disconnected.
ParentForest dfs_spanning_tree(const Graph& g);

/// Path 1-2-...-n.
ParentForest path_tree(int n);

/// a_1 ... a_{n-1}, a_i = parent of vertex i+1 as '1'-'9' then 'a' = 10,
/// 'b' = 11, ... (so vertices up to 35 are representable).
std::string compact_encode(const ParentForest& t);
ParentForest compact_decode(std::string_view text, int n);
inline ParentForest compact_decode(std::string_view text) {
  return compact_decode(text, static_cast<int>(text.size()) + 1);
}

/// Digit/character mapping shared by the compact codec and Gray-code output.
char digit_char(int value);
int char_digit(char c);  // -1 when c is not in [0-9a-z]

/// "1->-1; 2->1; 3->2; " style listing of every vertex's parent.
std::string format_parent_links(const ParentForest& t);

/// One undirected graph in Graphviz syntax, node labels = vertex numbers.
std::string format_dot(const ParentForest& t, std::string_view name = "T");

}  // namespace treegray
