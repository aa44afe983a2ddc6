#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "treegray/edge_exchange.hpp"
#include "treegray/pivot_complete.hpp"

namespace testsupport {

using namespace treegray;

inline std::string data_path(const std::string& name) { return std::string(TREEGRAY_TEST_DATA) + "/" + name; }

/// Whitespace-separated tokens of a data file.
inline std::vector<std::string> read_tokens(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing test data " + name);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::vector<std::string> read_lines(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing test data " + name);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

/// FNV-1a over each string followed by '\n'.
inline std::uint64_t fnv1a(const std::vector<std::string>& lines) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& s : lines) {
    for (unsigned char c : s + "\n") {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

struct Recorded {
  std::vector<ParentForest> trees;
  std::vector<std::optional<EdgeSwap>> changes;
  GenerationStats stats;

  std::vector<std::string> compact() const {
    std::vector<std::string> out;
    out.reserve(trees.size());
    for (const auto& t : trees) out.push_back(compact_encode(t));
    return out;
  }
};

inline TreeVisitor recorder(Recorded& r) {
  return [&r](const TransitionEvent& ev) {
    r.trees.push_back(ev.tree);
    r.changes.push_back(ev.change);
    return true;
  };
}

inline Recorded record_pivot(int n) {
  Recorded r;
  r.stats = gen_pivot_complete(n, recorder(r));
  return r;
}

inline Recorded record_general(const Graph& g, const EdgeExchangeOptions& options = {}) {
  Recorded r;
  r.stats = gen_edge_exchange(g, recorder(r), options);
  return r;
}

inline Recorded record_bipartite(int m, int n) {
  Recorded r;
  r.stats = gen_bipartite(m, n, recorder(r));
  return r;
}

inline std::vector<std::string> compact_pivot(int n) {
  std::vector<std::string> out;
  gen_pivot_complete(n, [&](const TransitionEvent& ev) {
    out.push_back(compact_encode(ev.tree));
    return true;
  });
  return out;
}

inline Graph graph_g() {
  return Graph::from_edges(7, parse_edge_list("1,2;1,4;1,6;1,7;2,3;3,4;3,5;4,5;6,7"));
}

/// Connected graph on n vertices: a random labelled tree (each vertex joins
/// an earlier one under a random relabelling) plus each remaining pair with
/// probability `density`.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double density) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    int a = perm[static_cast<std::size_t>(i)];
    int b = perm[static_cast<std::size_t>(pick(rng))];
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  std::bernoulli_distribution coin(density);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.emplace(u, v);
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.emplace_back(u, v);
  return Graph::from_edges(n, list);
}

/// Uniform-ish random spanning tree of g rooted at 1 (random-order DFS).
inline ParentForest random_spanning_tree(std::mt19937_64& rng, const Graph& g) {
  const int n = g.order();
  ParentForest t(n);
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> frontier{1};
  seen[1] = 1;
  while (!frontier.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const std::size_t at = pick(rng);
    const Vertex u = frontier[at];
    std::vector<Vertex> fresh;
    for (Vertex w : g.neighbors(u))
      if (!seen[static_cast<std::size_t>(w)]) fresh.push_back(w);
    if (fresh.empty()) {
      frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(at));
      continue;
    }
    std::uniform_int_distribution<std::size_t> choose(0, fresh.size() - 1);
    const Vertex w = fresh[choose(rng)];
    seen[static_cast<std::size_t>(w)] = 1;
    t.set_parent(w, u);
    frontier.push_back(w);
  }
  return t;
}

/// Undirected edge set difference a \ b.
inline std::vector<Edge> edge_difference(const ParentForest& a, const ParentForest& b) {
  const auto ea = a.edges();
  const auto eb = b.edges();
  std::vector<Edge> out;
  std::set_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
  return out;
}

/// Every recorded change equals the actual edge difference between
/// consecutive trees.
inline bool changes_match_trees(const Recorded& r) {
  if (r.trees.empty() || r.changes.front().has_value()) return r.trees.empty();
  for (std::size_t i = 1; i < r.trees.size(); ++i) {
    if (!r.changes[i]) return false;
    const auto removed = edge_difference(r.trees[i - 1], r.trees[i]);
    const auto added = edge_difference(r.trees[i], r.trees[i - 1]);
    if (removed.size() != 1 || added.size() != 1) return false;
    if (removed[0] != r.changes[i]->removed || added[0] != r.changes[i]->added) return false;
  }
  return true;
}

}  // namespace testsupport
