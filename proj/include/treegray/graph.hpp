#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treegray {

/// Vertex label. Vertices are numbered 1..n; 0 is reserved as the
/// "no parent" marker of a ParentForest.
using Vertex = int;

inline constexpr Vertex kNoVertex = 0;

/// Malformed user input (edge lists, graph descriptors, compact strings).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generation operation was asked to span a disconnected graph.
class ConnectivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const { return touches(o.u) || touches(o.v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Simple undirected labelled graph with a dense adjacency matrix for O(1)
/// adjacency queries and sorted neighbour lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws InputError on out-of-range endpoints, self-loops or duplicates.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v)] != 0;
  }

  /// Neighbours of v in increasing label order.
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[static_cast<std::size_t>(v)]; }

  /// All edges, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool is_connected() const;

 private:
  void add_edge_unchecked(Vertex u, Vertex v);

  int n_ = 0;
  std::size_t stride_ = 1;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

Graph complete_graph(int n);
/// K_{m,n} with parts {1..m} and {m+1..m+n}.
Graph complete_bipartite_graph(int m, int n);
/// Path 2-3-...-n plus hub 1 adjacent to every other vertex.
Graph fan_graph(int n);
/// Fan graph plus the rim-closing edge {2, n}.
Graph wheel_graph(int n);
Graph petersen_graph();

/// Parses "u,v; u,v; ..." (whitespace ignored, empty items skipped).
std::vector<Edge> parse_edge_list(std::string_view text);

enum class GraphFamily { Complete, Bipartite, Fan, Wheel, Petersen, Custom };

/// A parsed graph descriptor such as "complete:5", "bipartite:2,3",
/// "fan:6", "wheel:5", "petersen" or "custom:7" (edges supplied separately).
struct GraphSpec {
  GraphFamily family = GraphFamily::Complete;
  int n = 0;
  int m = 0;  // first part size for Bipartite
  std::vector<Edge> edges;

  static GraphSpec parse(std::string_view descriptor, std::string_view edge_text = {});
  Graph build() const;
};

/// Partition of `subset` into connected components of the induced subgraph.
///
/// Components are discovered by scanning `subset` in the given order; each
/// is grown depth-first, and from every vertex the unvisited members of
/// `subset` are tried in list order. With a sorted subset this gives
/// components ordered by smallest vertex, each listed in DFS discovery order.
std::vector<std::vector<Vertex>> connected_components(const Graph& g, std::span<const Vertex> subset);

}  // namespace treegray
