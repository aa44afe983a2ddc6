#include "treegray/verification.hpp"

#include <algorithm>
#include <numeric>

namespace treegray {

BigInt count_matrix_tree(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 1;
  const std::size_t dim = static_cast<std::size_t>(n) - 1;
  std::vector<std::vector<BigInt>> a(dim, std::vector<BigInt>(dim, 0));
  for (Vertex u = 2; u <= n; ++u) {
    const std::size_t row = static_cast<std::size_t>(u) - 2;
    a[row][row] = static_cast<long>(g.neighbors(u).size());
    for (Vertex v : g.neighbors(u))
      if (v >= 2) a[row][static_cast<std::size_t>(v) - 2] = -1;
  }

  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < dim && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == dim) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  BigInt det = a[dim - 1][dim - 1];
  return sign < 0 ? BigInt(-det) : det;
}

BigInt cayley_count(int k, int c, bool cross_check) {
  if (k < 1 || c < 0) throw InputError("cayley_count needs k >= 1 and c >= 0");
  BigInt closed = 1;
  if (c > 0) closed = BigInt(k) * boost::multiprecision::pow(BigInt(k + c), static_cast<unsigned>(c - 1));
  if (cross_check && cayley_count_recursive(k, c) != closed) {
    throw std::logic_error("recursive and closed forms disagree at k=" + std::to_string(k) + ", c=" + std::to_string(c));
  }
  return closed;
}

namespace {

BigInt binomial(int n, int r) {
  BigInt out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace

BigInt cayley_count_recursive(int k, int c) {
  if (k < 1 || c < 0) throw InputError("cayley_count needs k >= 1 and c >= 0");
  if (c == 0) return 1;
  BigInt sum = 0;
  for (int i = 1; i <= c; ++i) {
    sum += binomial(c, i) * boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(i)) *
           cayley_count_recursive(i, c - i);
  }
  return sum;
}

std::vector<std::vector<Edge>> brute_force_trees(const Graph& g) {
  const int n = g.order();
  if (n > 10) throw CapacityError("brute force is limited to 10 vertices");
  if (n <= 1) return {{}};
  const std::vector<Edge> all = g.edges();
  const int m = static_cast<int>(all.size());
  const int r = n - 1;
  if (m < r) return {};
  if (binomial(m, r) > 10'000'000) throw CapacityError("brute force would inspect more than 10^7 edge subsets");

  std::vector<std::vector<Edge>> trees;
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<Vertex> root(static_cast<std::size_t>(n) + 1);
  const auto find = [&](Vertex x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };

  for (;;) {
    std::iota(root.begin(), root.end(), 0);
    bool acyclic = true;
    for (int i : pick) {
      const Edge& e = all[static_cast<std::size_t>(i)];
      const Vertex a = find(e.u);
      const Vertex b = find(e.v);
      if (a == b) {
        acyclic = false;
        break;
      }
      root[static_cast<std::size_t>(a)] = b;
    }
    if (acyclic) {
      std::vector<Edge> tree;
      tree.reserve(pick.size());
      for (int i : pick) tree.push_back(all[static_cast<std::size_t>(i)]);
      trees.push_back(std::move(tree));
    }
    // Next combination in lexicographic order.
    int pos = r - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == m - r + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < r; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
  }
  return trees;
}

const char* to_string(Transition t) {
  switch (t) {
    case Transition::Identical:
      return "identical";
    case Transition::Pivot:
      return "pivot";
    case Transition::EdgeExchange:
      return "edge-exchange";
    case Transition::Invalid:
      return "invalid";
  }
  return "?";
}

namespace {

bool has_edge(const ParentForest& t, Vertex v, Vertex p) {
  return (v != kNoVertex && t.parent(v) == p) || (p != kNoVertex && t.parent(p) == v);
}

/// Parent-defined edges of `a` missing from `b`, stopping after `limit`.
std::vector<Edge> missing_edges(const ParentForest& a, const ParentForest& b, std::size_t limit) {
  std::vector<Edge> out;
  for (Vertex v = 1; v <= a.order() && out.size() < limit; ++v) {
    const Vertex p = a.parent(v);
    if (p != kNoVertex && !has_edge(b, v, p)) out.emplace_back(v, p);
  }
  return out;
}

}  // namespace

Transition classify_transition(const ParentForest& a, const ParentForest& b) {
  if (a.order() != b.order()) throw InputError("trees have different vertex counts");
  const auto removed = missing_edges(a, b, 2);
  const auto added = missing_edges(b, a, 2);
  if (removed.empty() && added.empty()) return Transition::Identical;
  if (removed.size() != 1 || added.size() != 1) return Transition::Invalid;
  return removed[0].shares_endpoint(added[0]) ? Transition::Pivot : Transition::EdgeExchange;
}

ListingValidator::ListingValidator(const Graph& g, ListingMode mode, std::uint64_t max_trees)
    : g_(g), max_trees_(max_trees), packed_(g.order() <= 16) {
  report_.mode = mode;
}

void ListingValidator::flag(std::uint64_t index, std::string description) {
  if (!report_.first_violation || index < report_.first_violation->index) {
    report_.first_violation = Violation{index, std::move(description)};
  }
}

void ListingValidator::add(const ParentForest& tree) {
  const std::uint64_t index = report_.tree_count;
  if (index >= max_trees_) throw CapacityError("listing exceeds " + std::to_string(max_trees_) + " trees");
  ++report_.tree_count;

  if (!tree.is_spanning_tree_of(g_)) {
    report_.all_spanning = false;
    flag(index, "tree " + std::to_string(index + 1) + " is not a spanning tree of the graph");
  }

  if (packed_) {
    std::uint64_t key = 0;
    for (Vertex v = 2; v <= tree.order(); ++v) key = (key << 4) | static_cast<std::uint64_t>((tree.parent(v) - 1) & 0xF);
    packed_digests_.emplace_back(key, index);
  } else {
    std::string key;
    key.reserve(static_cast<std::size_t>(tree.order()) * 2);
    for (Vertex v = 2; v <= tree.order(); ++v) {
      key.push_back(static_cast<char>(tree.parent(v) & 0xFF));
      key.push_back(static_cast<char>((tree.parent(v) >> 8) & 0xFF));
    }
    text_digests_.emplace_back(std::move(key), index);
  }

  if (index > 0) {
    if (prev_.order() != tree.order()) {
      ++report_.transitions[static_cast<std::size_t>(Transition::Invalid)];
      report_.non_pivot.push_back(index);
      flag(index, "tree " + std::to_string(index + 1) + " has a different vertex count");
    } else {
      const Transition t = classify_transition(prev_, tree);
      ++report_.transitions[static_cast<std::size_t>(t)];
      if (t != Transition::Pivot) report_.non_pivot.push_back(index);
      const bool bad = t == Transition::Identical || t == Transition::Invalid ||
                       (t == Transition::EdgeExchange && report_.mode == ListingMode::Pivot);
      if (bad) {
        flag(index, "transition " + std::to_string(index) + "->" + std::to_string(index + 1) + " is " + to_string(t));
      }
    }
  }
  prev_ = tree;
}

namespace {

template <typename Key>
std::uint64_t scan_duplicates(std::vector<std::pair<Key, std::uint64_t>>& digests,
                              std::optional<std::uint64_t>& first_repeat) {
  std::sort(digests.begin(), digests.end());
  std::uint64_t distinct = 0;
  for (std::size_t i = 0; i < digests.size(); ++i) {
    if (i > 0 && digests[i].first == digests[i - 1].first) {
      if (!first_repeat || digests[i].second < *first_repeat) first_repeat = digests[i].second;
    } else {
      ++distinct;
    }
  }
  return distinct;
}

}  // namespace

ListingReport ListingValidator::finish() {
  std::optional<std::uint64_t> repeat;
  report_.distinct_count =
      packed_ ? scan_duplicates(packed_digests_, repeat) : scan_duplicates(text_digests_, repeat);
  packed_digests_.clear();
  text_digests_.clear();
  if (repeat) flag(*repeat, "tree " + std::to_string(*repeat + 1) + " repeats an earlier tree");

  report_.expected_count = count_matrix_tree(g_);
  if (BigInt(report_.tree_count) != report_.expected_count) {
    flag(report_.tree_count, "listing has " + std::to_string(report_.tree_count) + " trees, expected " +
                                 report_.expected_count.str());
  }
  return report_;
}

std::string ListingReport::to_text() const {
  std::string out;
  const auto line = [&](const std::string& key, const std::string& value) { out += key + ": " + value + "\n"; };
  line("mode", mode == ListingMode::Pivot ? "pivot" : "edge-exchange");
  line("trees", std::to_string(tree_count));
  line("distinct", std::to_string(distinct_count));
  line("expected", expected_count.str());
  line("all_spanning", all_spanning ? "yes" : "no");
  for (Transition t : {Transition::Pivot, Transition::EdgeExchange, Transition::Identical, Transition::Invalid}) {
    line(std::string("transitions_") + to_string(t), std::to_string(count(t)));
  }
  std::string listed;
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < non_pivot.size() && i < kShown; ++i) {
    if (i > 0) listed += ", ";
    listed += std::to_string(non_pivot[i]) + "->" + std::to_string(non_pivot[i] + 1);
  }
  if (non_pivot.size() > kShown) listed += ", ... (" + std::to_string(non_pivot.size() - kShown) + " more)";
  line("non_pivot", listed.empty() ? "none" : listed);
  if (first_violation) line("first_violation", first_violation->description);
  line("result", passed() ? "PASS" : "FAIL");
  return out;
}

ListingReport validate_listing(const Graph& g, const std::vector<ParentForest>& listing, ListingMode mode) {
  ListingValidator validator(g, mode, std::max<std::uint64_t>(listing.size(), 1));
  for (const ParentForest& t : listing) validator.add(t);
  return validator.finish();
}

}  // namespace treegray
