#include <stdexcept>

#include "treegray/edge_exchange.hpp"
#include "treegray/mixed_radix_gray.hpp"

namespace treegray {

namespace {

/// Parent forest plus intrusive child lists.
class TrackedTree {
 public:
  explicit TrackedTree(const ParentForest& start)
      : tree_(start.order()),
        first_(static_cast<std::size_t>(start.order()) + 1, kNoVertex),
        next_(first_.size(), kNoVertex),
        prev_(first_.size(), kNoVertex) {
    for (Vertex v = 2; v <= start.order(); ++v) set_parent(v, start.parent(v));
  }

  const ParentForest& tree() const { return tree_; }
  Vertex parent(Vertex v) const { return tree_.parent(v); }
  Vertex first_child(Vertex v) const { return first_[idx(v)]; }

  void set_parent(Vertex v, Vertex p) {
    const Vertex old = tree_.parent(v);
    if (old != kNoVertex) {
      if (prev_[idx(v)] != kNoVertex)
        next_[idx(prev_[idx(v)])] = next_[idx(v)];
      else
        first_[idx(old)] = next_[idx(v)];
      if (next_[idx(v)] != kNoVertex) prev_[idx(next_[idx(v)])] = prev_[idx(v)];
    }
    tree_.set_parent(v, p);
    prev_[idx(v)] = kNoVertex;
    next_[idx(v)] = kNoVertex;
    if (p != kNoVertex) {
      next_[idx(v)] = first_[idx(p)];
      if (first_[idx(p)] != kNoVertex) prev_[idx(first_[idx(p)])] = v;
      first_[idx(p)] = v;
    }
  }

  /// Same contract as the free lift(): links strictly above v are reversed.
  int lift(Vertex v) {
    int rewritten = 0;
    Vertex below = v;
    Vertex cur = parent(v);
    while (cur != kNoVertex) {
      const Vertex above = parent(cur);
      set_parent(cur, below);
      ++rewritten;
      below = cur;
      cur = above;
    }
    return rewritten;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  ParentForest tree_;
  std::vector<Vertex> first_;
  std::vector<Vertex> next_;
  std::vector<Vertex> prev_;
};

/// Set of small integers with O(1) insert, erase and "some member".
class IndexSet {
 public:
  void reset(std::size_t capacity) {
    where_.assign(capacity, -1);
    items_.clear();
  }
  bool contains(int i) const { return where_[static_cast<std::size_t>(i)] >= 0; }
  void insert(int i) {
    where_[static_cast<std::size_t>(i)] = static_cast<int>(items_.size());
    items_.push_back(i);
  }
  void erase(int i) {
    const int at = where_[static_cast<std::size_t>(i)];
    const int moved = items_.back();
    items_[static_cast<std::size_t>(at)] = moved;
    where_[static_cast<std::size_t>(moved)] = at;
    items_.pop_back();
    where_[static_cast<std::size_t>(i)] = -1;
  }
  int any() const { return items_.front(); }
  bool empty() const { return items_.empty(); }

 private:
  std::vector<int> where_;
  std::vector<int> items_;
};

class BipartiteRun {
 public:
  BipartiteRun(int m, const Graph& g, const TreeVisitor& visit)
      : m_(m),
        tracked_(initial_spanning_tree(g)),
        emitter_(tracked_.tree(), visit),
        index_in_p_(static_cast<std::size_t>(g.order()) + 1, 0),
        frames_(static_cast<std::size_t>(g.order()) + 1) {}

  GenerationStats run() {
    const int n = tracked_.tree().order();
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    digits[0] = 1;
    level(0, all, digits);
    return emitter_.stats;
  }

 private:
  struct Frame {
    std::vector<Vertex> parents;
    std::vector<Vertex> cand;   // opposite part: adjacent to every parent
    std::vector<Vertex> other;  // same part as the parents
    std::vector<int> digits;    // over cand
    std::vector<int> maxvals;
    IndexSet active;
    MixedRadixGray gen;
    std::vector<Vertex> next_vertices;
    std::vector<int> next_digits;
  };

  bool side(Vertex v) const { return v > m_; }

  void move(Vertex v, Vertex p) {
    emitter_.record(Edge(v, tracked_.parent(v)), Edge(v, p));
    tracked_.set_parent(v, p);
  }

  bool level(std::size_t depth, std::span<const Vertex> vertices, std::span<const int> digits) {
    Frame& f = frames_[depth];
    auto& work = emitter_.stats.work;
    f.parents.clear();
    f.cand.clear();
    f.other.clear();
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (digits[i] > 0) f.parents.push_back(vertices[i]);
    work += vertices.size();
    if (f.parents.size() == vertices.size()) return emitter_.emit();

    const bool parent_side = side(f.parents.front());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (digits[i] > 0) continue;
      (side(vertices[i]) == parent_side ? f.other : f.cand).push_back(vertices[i]);
    }
    if (f.cand.empty()) throw std::logic_error("pending vertices cannot reach the parent level");

    for (std::size_t i = 0; i < f.parents.size(); ++i)
      index_in_p_[static_cast<std::size_t>(f.parents[i])] = static_cast<int>(i) + 1;
    f.digits.resize(f.cand.size());
    f.active.reset(f.cand.size());
    for (std::size_t i = 0; i < f.cand.size(); ++i) {
      f.digits[i] = index_in_p_[static_cast<std::size_t>(tracked_.parent(f.cand[i]))];
      if (f.digits[i] > 0) f.active.insert(static_cast<int>(i));
    }
    for (Vertex p : f.parents) index_in_p_[static_cast<std::size_t>(p)] = 0;
    work += f.parents.size() + f.cand.size();
    if (f.active.empty()) throw std::logic_error("no vertex attached to the parent level");

    if (f.other.empty()) return spread(depth, 0);

    f.next_vertices.assign(f.cand.begin(), f.cand.end());
    f.next_vertices.insert(f.next_vertices.end(), f.other.begin(), f.other.end());
    f.next_digits.assign(f.next_vertices.size(), 0);
    std::copy(f.digits.begin(), f.digits.end(), f.next_digits.begin());
    work += f.next_vertices.size();
    if (!descend(depth)) return false;

    f.maxvals.assign(f.cand.size(), static_cast<int>(f.parents.size()));
    f.gen.reset(f.maxvals, f.digits);
    f.gen.next();
    bool keep_going = true;
    while (keep_going && f.gen.next()) {
      const auto delta = f.gen.delta();
      const auto now = f.gen.digits();
      const int d0 = static_cast<int>(delta[0]);
      const Vertex c0 = f.cand[delta[0]];
      if (delta.size() > 1) {
        const int d1 = static_cast<int>(delta[1]);
        const Vertex c1 = f.cand[delta[1]];
        const Vertex shared = tracked_.parent(c0);
        tracked_.set_parent(c0, kNoVertex);
        work += static_cast<std::uint64_t>(tracked_.lift(c1));
        tracked_.set_parent(c1, shared);
        emitter_.record(Edge(c0, shared), Edge(c1, shared));
        f.active.erase(d0);
        f.active.insert(d1);
      } else if (now[delta[0]] > 0) {
        move(c0, f.parents[static_cast<std::size_t>(now[delta[0]] - 1)]);
        if (!f.active.contains(d0)) f.active.insert(d0);
      } else {
        f.active.erase(d0);
        const Vertex x = tracked_.first_child(c0);
        if (x != kNoVertex) {
          const Vertex old = tracked_.parent(c0);
          const Vertex anchor = f.cand[static_cast<std::size_t>(f.active.any())];
          tracked_.set_parent(c0, kNoVertex);
          tracked_.lift(x);
          tracked_.set_parent(x, anchor);
          emitter_.record(Edge(c0, old), Edge(x, anchor));
        } else {
          move(c0, f.other.front());
        }
      }
      for (std::size_t p : delta) f.next_digits[p] = now[p];
      ++work;
      keep_going = descend(depth);
    }
    work += f.gen.work();
    return keep_going;
  }

  /// A single candidate leaves the next level fully forced (every
  /// same-part vertex hangs off it), so the tree is emitted directly.
  bool descend(std::size_t depth) {
    Frame& f = frames_[depth];
    if (f.cand.size() == 1) return emitter_.emit();
    return level(depth + 1, f.next_vertices, f.next_digits);
  }

  /// Every pending vertex is a lone candidate: step each through all
  /// parents in turn, nested by position.
  bool spread(std::size_t depth, std::size_t i) {
    Frame& f = frames_[depth];
    const int k = static_cast<int>(f.parents.size());
    if (k == 1 || i == f.cand.size()) return emitter_.emit();
    if (!spread(depth, i + 1)) return false;
    int r = f.digits[i];
    for (int step = 1; step < k; ++step) {
      r = r % k + 1;
      move(f.cand[i], f.parents[static_cast<std::size_t>(r - 1)]);
      f.digits[i] = r;
      ++emitter_.stats.work;
      if (!spread(depth, i + 1)) return false;
    }
    return true;
  }

  int m_;
  TrackedTree tracked_;
  detail::Emitter emitter_;
  std::vector<int> index_in_p_;
  std::vector<Frame> frames_;
};

}  // namespace

GenerationStats gen_bipartite(int m, int n, const TreeVisitor& visit) {
  const Graph g = complete_bipartite_graph(m, n);
  BipartiteRun run(m, g, visit);
  return run.run();
}

}  // namespace treegray
