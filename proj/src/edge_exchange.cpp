#include "treegray/edge_exchange.hpp"

#include <stdexcept>

#include "treegray/mixed_radix_gray.hpp"

namespace treegray {

CandidateParents candidate_parents(std::span<const Vertex> parents, std::span<const Vertex> comp,
                                   const ParentForest& tree, const Graph& g) {
  CandidateParents out;
  out.digits.assign(comp.size(), 0);
  out.maxvals.assign(comp.size(), 0);
  out.parents.resize(comp.size());
  for (std::size_t c = 0; c < comp.size(); ++c) {
    auto& list = out.parents[c];
    for (Vertex p : parents) {
      if (!g.adjacent(p, comp[c])) continue;
      list.push_back(p);
      if (tree.parent(comp[c]) == p) out.digits[c] = static_cast<int>(list.size());
    }
    out.maxvals[c] = static_cast<int>(list.size());
  }
  return out;
}

std::pair<Vertex, Vertex> find_reconnection(std::span<const Vertex> comp, Vertex v, const ParentForest& tree,
                                            const Graph& g) {
  const std::size_t k = comp.size();
  const auto slot = [&](Vertex x) -> int {
    for (std::size_t i = 0; i < k; ++i)
      if (comp[i] == x) return static_cast<int>(i);
    return -1;
  };

  std::vector<std::vector<std::size_t>> kids(k);
  for (std::size_t i = 0; i < k; ++i) {
    const int p = slot(tree.parent(comp[i]));
    if (p >= 0) kids[static_cast<std::size_t>(p)].push_back(i);
  }

  const int root = slot(v);
  if (root < 0) throw std::logic_error("vertex " + std::to_string(v) + " is not in the component");
  std::vector<char> in_subtree(k, 0);
  std::vector<std::size_t> subtree{static_cast<std::size_t>(root)};
  in_subtree[static_cast<std::size_t>(root)] = 1;
  for (std::size_t head = 0; head < subtree.size(); ++head) {
    for (std::size_t child : kids[subtree[head]]) {
      if (!in_subtree[child]) {
        in_subtree[child] = 1;
        subtree.push_back(child);
      }
    }
  }

  for (std::size_t a : subtree) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!in_subtree[b] && g.adjacent(comp[a], comp[b])) return {comp[a], comp[b]};
    }
  }
  throw std::logic_error("no reconnection edge for vertex " + std::to_string(v));
}

namespace {

class GeneralRun {
 public:
  GeneralRun(const Graph& g, ParentForest start, const TreeVisitor& visit)
      : g_(g), tree_(std::move(start)), emitter_(tree_, visit), levels_(static_cast<std::size_t>(g.order()) + 1) {}

  GenerationStats run() {
    const int n = g_.order();
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    digits[0] = 1;
    level(0, all, digits);
    return emitter_.stats;
  }

 private:
  struct Component {
    std::vector<Vertex> members;
    CandidateParents cand;
    MixedRadixGray gen;
  };

  struct Level {
    std::vector<Vertex> parents;
    std::vector<Vertex> children;
    std::vector<Component> comps;
    std::vector<Vertex> next_vertices;
    std::vector<int> next_digits;
  };

  bool level(std::size_t depth, std::span<const Vertex> vertices, std::span<const int> digits) {
    Level& L = levels_[depth];
    L.parents.clear();
    L.children.clear();
    for (std::size_t i = 0; i < vertices.size(); ++i) (digits[i] > 0 ? L.parents : L.children).push_back(vertices[i]);
    emitter_.stats.work += vertices.size();
    if (L.children.empty()) return emitter_.emit();

    auto groups = connected_components(g_, L.children);
    L.comps.resize(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
      Component& comp = L.comps[i];
      comp.members = std::move(groups[i]);
      comp.cand = candidate_parents(L.parents, comp.members, tree_, g_);
      bool attached = false;
      for (int d : comp.cand.digits) attached = attached || d > 0;
      if (!attached) throw std::logic_error("component without an attachment to the previous level");
      emitter_.stats.work += comp.members.size() * (L.parents.size() + 1);
    }
    return subtree(depth, 0);
  }

  bool subtree(std::size_t depth, std::size_t i) {
    Level& L = levels_[depth];
    if (i >= L.comps.size()) {
      L.next_vertices.clear();
      L.next_digits.clear();
      for (const Component& comp : L.comps) {
        L.next_vertices.insert(L.next_vertices.end(), comp.members.begin(), comp.members.end());
        L.next_digits.insert(L.next_digits.end(), comp.cand.digits.begin(), comp.cand.digits.end());
      }
      emitter_.stats.work += L.next_vertices.size();
      return level(depth + 1, L.next_vertices, L.next_digits);
    }

    if (!subtree(depth, i + 1)) return false;

    Component& comp = L.comps[i];
    comp.gen.reset(comp.cand.maxvals, comp.cand.digits);
    comp.gen.next();
    bool keep_going = true;
    while (keep_going && comp.gen.next()) {
      const auto delta = comp.gen.delta();
      const auto now = comp.gen.digits();
      const Vertex c0 = comp.members[delta[0]];
      const Vertex old = tree_.parent(c0);
      if (delta.size() > 1) {
        const Vertex c1 = comp.members[delta[1]];
        const Vertex fresh = comp.cand.parents[delta[1]][static_cast<std::size_t>(now[delta[1]] - 1)];
        tree_.set_parent(c0, kNoVertex);
        emitter_.stats.work += static_cast<std::uint64_t>(lift(tree_, c1));
        tree_.set_parent(c1, fresh);
        emitter_.record(Edge(c0, old), Edge(c1, fresh));
      } else if (now[delta[0]] > 0) {
        const Vertex fresh = comp.cand.parents[delta[0]][static_cast<std::size_t>(now[delta[0]] - 1)];
        tree_.set_parent(c0, fresh);
        emitter_.record(Edge(c0, old), Edge(c0, fresh));
      } else {
        const auto [a, b] = find_reconnection(comp.members, c0, tree_, g_);
        tree_.set_parent(c0, kNoVertex);
        emitter_.stats.work += static_cast<std::uint64_t>(lift(tree_, a));
        tree_.set_parent(a, b);
        emitter_.record(Edge(c0, old), Edge(a, b));
        emitter_.stats.work += comp.members.size() * comp.members.size();
      }
      comp.cand.digits.assign(now.begin(), now.end());
      emitter_.stats.work += now.size();
      keep_going = subtree(depth, i + 1);
    }
    emitter_.stats.work += comp.gen.work();
    return keep_going;
  }

  const Graph& g_;
  ParentForest tree_;
  detail::Emitter emitter_;
  std::vector<Level> levels_;
};

}  // namespace

GenerationStats gen_edge_exchange(const Graph& g, const TreeVisitor& visit, const EdgeExchangeOptions& options) {
  if (g.order() < 1) throw InputError("graph needs at least one vertex");
  if (!g.is_connected()) throw ConnectivityError("graph is disconnected; it has no spanning tree");
  ParentForest start;
  if (options.start_tree) {
    if (!options.start_tree->is_spanning_tree_of(g)) throw InputError("start tree is not a spanning tree of the graph");
    start = *options.start_tree;
  } else {
    start = options.start == StartRule::Dfs ? dfs_spanning_tree(g) : initial_spanning_tree(g);
  }
  GeneralRun run(g, std::move(start), visit);
  return run.run();
}

}  // namespace treegray
