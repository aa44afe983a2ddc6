#include "treegray/pivot_complete.hpp"

#include "treegray/mixed_radix_gray.hpp"

namespace treegray {

void ActiveChain::reset(std::size_t capacity) {
  prev_.assign(capacity, -1);
  next_.assign(capacity, -1);
  member_.assign(capacity, 0);
  last_ = -1;
  size_ = 0;
}

void ActiveChain::append(int index) {
  const auto i = static_cast<std::size_t>(index);
  prev_[i] = last_;
  next_[i] = -1;
  member_[i] = 1;
  if (last_ != -1) next_[static_cast<std::size_t>(last_)] = index;
  last_ = index;
  ++size_;
}

void ActiveChain::remove(int index) {
  const auto i = static_cast<std::size_t>(index);
  const int before = prev_[i];
  const int after = next_[i];
  if (before != -1) next_[static_cast<std::size_t>(before)] = after;
  if (after != -1) {
    prev_[static_cast<std::size_t>(after)] = before;
    last_ = after;
  } else {
    last_ = before;
  }
  member_[i] = 0;
  --size_;
}

namespace {

class PivotRun {
 public:
  PivotRun(int n, const TreeVisitor& visit, const PivotOptions& options)
      : n_(n),
        tree_(path_tree(n)),
        emitter_(tree_, visit),
        options_(options),
        index_in_p_(static_cast<std::size_t>(n) + 1, 0),
        frames_(static_cast<std::size_t>(n) + 1) {}

  GenerationStats run() {
    std::vector<Vertex> all(static_cast<std::size_t>(n_));
    std::vector<int> digits(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    digits[0] = 1;
    level(0, all, digits, n_ - 1);
    return emitter_.stats;
  }

 private:
  struct Frame {
    std::vector<Vertex> parents;   // P
    std::vector<Vertex> children;  // C
    std::vector<int> digits;
    std::vector<int> maxvals;
    ActiveChain active;
    MixedRadixGray gen;
  };

  void move(Vertex v, Vertex new_parent) {
    emitter_.record(Edge(v, tree_.parent(v)), Edge(v, new_parent));
    tree_.set_parent(v, new_parent);
  }

  bool level(std::size_t depth, std::span<const Vertex> vertices, std::span<const int> prev_digits, int pending) {
    if (pending == 0) return emitter_.emit();

    Frame& f = frames_[depth];
    const std::uint64_t trees_before = emitter_.stats.trees;
    std::uint64_t& work = emitter_.stats.work;

    f.parents.clear();
    f.children.clear();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      (prev_digits[i] > 0 ? f.parents : f.children).push_back(vertices[i]);
    }
    work += vertices.size();

    const auto& P = f.parents;
    const auto& C = f.children;
    const int width = static_cast<int>(C.size());

    for (std::size_t i = 0; i < P.size(); ++i) index_in_p_[static_cast<std::size_t>(P[i])] = static_cast<int>(i) + 1;
    f.digits.assign(C.size(), 0);
    f.active.reset(C.size());
    for (int i = 0; i < width; ++i) {
      const int r = index_in_p_[static_cast<std::size_t>(tree_.parent(C[static_cast<std::size_t>(i)]))];
      if (r > 0) {
        f.digits[static_cast<std::size_t>(i)] = r;
        f.active.append(i);
      }
    }
    for (Vertex p : P) index_in_p_[static_cast<std::size_t>(p)] = 0;
    work += P.size() + C.size();

    if (!level(depth + 1, C, f.digits, width - f.active.size())) return false;

    f.maxvals.assign(C.size(), static_cast<int>(P.size()));
    f.gen.reset(f.maxvals, f.digits);
    f.gen.next();
    bool keep_going = true;
    while (keep_going && f.gen.next()) {
      const auto delta = f.gen.delta();
      const auto digits = f.gen.digits();
      const int d0 = static_cast<int>(delta[0]);
      const Vertex c0 = C[delta[0]];
      if (delta.size() > 1) {
        // Only child d0 hung off the single parent; hand that slot to d1.
        const int d1 = static_cast<int>(delta[1]);
        const Vertex c1 = C[delta[1]];
        const Vertex shared = tree_.parent(c0);
        tree_.set_parent(c0, kNoVertex);
        work += static_cast<std::uint64_t>(lift(tree_, c1));
        tree_.set_parent(c1, shared);
        emitter_.record(Edge(c0, shared), Edge(c1, shared));
        f.active.append(d1);
        f.active.remove(d0);
      } else if (digits[delta[0]] > 0) {
        move(c0, P[static_cast<std::size_t>(digits[delta[0]] - 1)]);
        if (!f.active.contains(d0)) f.active.append(d0);
      } else {
        f.active.remove(d0);
        move(c0, C[static_cast<std::size_t>(f.active.last())]);
      }
      ++work;
      keep_going = level(depth + 1, C, digits, width - f.active.size());
    }
    work += f.gen.work();
    if (!keep_going) return false;

    if (options_.frame_hook) {
      options_.frame_hook(static_cast<int>(P.size()), pending, emitter_.stats.trees - trees_before);
    }
    return true;
  }

  int n_;
  ParentForest tree_;
  detail::Emitter emitter_;
  const PivotOptions& options_;
  std::vector<int> index_in_p_;
  std::vector<Frame> frames_;
};

}  // namespace

GenerationStats gen_pivot_complete(int n, const TreeVisitor& visit, const PivotOptions& options) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  PivotRun run(n, visit, options);
  return run.run();
}

}  // namespace treegray
