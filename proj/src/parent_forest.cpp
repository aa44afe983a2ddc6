#include "treegray/parent_forest.hpp"

#include <algorithm>

namespace treegray {

bool ParentForest::is_rooted_tree() const {
  const int n = order();
  if (n < 1) return false;
  if (parent(1) != kNoVertex) return false;
  // state: 0 unknown, 1 on current walk, 2 known to reach the root
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  state[1] = 2;
  std::vector<Vertex> walk;
  for (Vertex v = 2; v <= n; ++v) {
    walk.clear();
    Vertex u = v;
    while (state[static_cast<std::size_t>(u)] == 0) {
      state[static_cast<std::size_t>(u)] = 1;
      walk.push_back(u);
      Vertex p = parent(u);
      if (p < 1 || p > n || p == u) return false;
      u = p;
    }
    if (state[static_cast<std::size_t>(u)] == 1) return false;  // cycle
    for (Vertex w : walk) state[static_cast<std::size_t>(w)] = 2;
  }
  return true;
}

bool ParentForest::is_spanning_tree_of(const Graph& g) const {
  if (g.order() != order() || !is_rooted_tree()) return false;
  for (Vertex v = 2; v <= order(); ++v) {
    if (!g.adjacent(v, parent(v))) return false;
  }
  return true;
}

std::vector<Edge> ParentForest::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 1; v <= order(); ++v) {
    if (parent(v) != kNoVertex) out.emplace_back(v, parent(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int lift(ParentForest& f, Vertex v) {
  int rewritten = 0;
  Vertex below = v;
  Vertex cur = f.parent(v);
  while (cur != kNoVertex) {
    Vertex above = f.parent(cur);
    f.set_parent(cur, below);
    ++rewritten;
    below = cur;
    cur = above;
  }
  return rewritten;
}

ParentForest initial_spanning_tree(const Graph& g) {
  const int n = g.order();
  ParentForest t(n);
  std::vector<char> placed(static_cast<std::size_t>(n) + 1, 0);
  if (n >= 1) placed[1] = 1;
  int remaining = n - 1;
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (Vertex i = 1; i <= n; ++i) {
      if (!placed[static_cast<std::size_t>(i)]) continue;
      for (Vertex j : g.neighbors(i)) {
        if (!placed[static_cast<std::size_t>(j)]) {
          placed[static_cast<std::size_t>(j)] = 1;
          t.set_parent(j, i);
          --remaining;
          progress = true;
        }
      }
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (!placed[static_cast<std::size_t>(v)]) {
      throw ConnectivityError("graph is disconnected: vertex " + std::to_string(v) + " is unreachable from 1");
    }
  }
  return t;
}

ParentForest dfs_spanning_tree(const Graph& g) {
  const int n = g.order();
  ParentForest t(n);
  if (n < 1) return t;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::pair<Vertex, std::size_t>> stack{{1, 0}};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    auto nbrs = g.neighbors(u);
    if (next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    Vertex w = nbrs[next++];
    if (seen[static_cast<std::size_t>(w)]) continue;
    seen[static_cast<std::size_t>(w)] = 1;
    ++reached;
    t.set_parent(w, u);
    stack.emplace_back(w, 0);
  }
  if (reached != n) throw ConnectivityError("graph is disconnected");
  return t;
}

ParentForest path_tree(int n) {
  ParentForest t(n);
  for (Vertex v = 2; v <= n; ++v) t.set_parent(v, v - 1);
  return t;
}

char digit_char(int value) {
  if (value >= 0 && value <= 9) return static_cast<char>('0' + value);
  if (value >= 10 && value < 36) return static_cast<char>('a' + (value - 10));
  throw FormatError("value " + std::to_string(value) + " has no single-character encoding");
}

int char_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

std::string compact_encode(const ParentForest& t) {
  std::string out;
  out.reserve(static_cast<std::size_t>(std::max(0, t.order() - 1)));
  for (Vertex v = 2; v <= t.order(); ++v) out.push_back(digit_char(t.parent(v)));
  return out;
}

ParentForest compact_decode(std::string_view text, int n) {
  if (n < 1 || static_cast<int>(text.size()) != n - 1) {
    throw FormatError("compact tree for n = " + std::to_string(n) + " must have length " + std::to_string(n - 1));
  }
  ParentForest t(n);
  for (std::size_t i = 0; i < text.size(); ++i) {
    int p = char_digit(text[i]);
    if (p < 1 || p > n) {
      throw FormatError("invalid parent character '" + std::string(1, text[i]) + "' at position " +
                        std::to_string(i + 1));
    }
    t.set_parent(static_cast<Vertex>(i) + 2, p);
  }
  if (!t.is_rooted_tree()) throw FormatError("'" + std::string(text) + "' is not a tree rooted at 1");
  return t;
}

std::string format_parent_links(const ParentForest& t) {
  std::string out;
  for (Vertex v = 1; v <= t.order(); ++v) {
    out += std::to_string(v);
    out += "->";
    out += t.parent(v) == kNoVertex ? std::string("-1") : std::to_string(t.parent(v));
    out += "; ";
  }
  return out;
}

std::string format_dot(const ParentForest& t, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (Vertex v = 1; v <= t.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : t.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace treegray
