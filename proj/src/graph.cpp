#include "treegray/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace treegray {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Graph::Graph(int n)
    : n_(n),
      stride_(static_cast<std::size_t>(n) + 1),
      adj_(stride_ * stride_, 0),
      nbrs_(stride_) {
  if (n < 0) throw InputError("vertex count must be non-negative");
}

void Graph::add_edge_unchecked(Vertex u, Vertex v) {
  adj_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v)] = 1;
  adj_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(u)] = 1;
  nbrs_[static_cast<std::size_t>(u)].push_back(v);
  nbrs_[static_cast<std::size_t>(v)].push_back(u);
  ++edge_count_;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n) {
      throw InputError("edge " + to_string(e) + " has an endpoint outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (g.adjacent(e.u, e.v)) throw InputError("duplicate edge " + to_string(e));
    g.add_edge_unchecked(e.u, e.v);
  }
  for (auto& list : g.nbrs_) std::sort(list.begin(), list.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(stride_, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_;
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw InputError("complete bipartite graph needs m, n >= 1");
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= m; ++a)
    for (Vertex b = m + 1; b <= m + n; ++b) edges.emplace_back(a, b);
  return Graph::from_edges(m + n, edges);
}

Graph fan_graph(int n) {
  if (n < 2) throw InputError("fan graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
  for (Vertex v = 2; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph wheel_graph(int n) {
  if (n < 4) throw InputError("wheel graph needs n >= 4");
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
  for (Vertex v = 2; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(2, n);
  return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
  // Outer 5-cycle 1-2-3-4-5, spokes 1-6, 2-7, 3-8, 4-9, 5-10,
  // inner pentagram 6-8, 6-9, 7-9, 7-10, 8-10.
  static constexpr int kEdges[15][2] = {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 7},
                                        {3, 4}, {3, 8}, {4, 5}, {4, 9}, {5, 10},
                                        {6, 8}, {6, 9}, {7, 9}, {7, 10}, {8, 10}};
  std::vector<Edge> edges;
  for (const auto& e : kEdges) edges.emplace_back(e[0], e[1]);
  return Graph::from_edges(10, edges);
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
  return out;
}

}  // namespace

std::vector<Edge> parse_edge_list(std::string_view text) {
  std::string compact = strip_spaces(text);
  std::vector<Edge> edges;
  std::string_view rest = compact;
  while (!rest.empty()) {
    auto semi = rest.find(';');
    std::string_view item = rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    if (item.empty()) continue;
    auto comma = item.find(',');
    if (comma == std::string_view::npos) {
      throw InputError("edge '" + std::string(item) + "' is not of the form u,v");
    }
    Vertex u = parse_int(item.substr(0, comma), "vertex");
    Vertex v = parse_int(item.substr(comma + 1), "vertex");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  return edges;
}

GraphSpec GraphSpec::parse(std::string_view descriptor, std::string_view edge_text) {
  GraphSpec spec;
  auto colon = descriptor.find(':');
  std::string_view name = descriptor.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : descriptor.substr(colon + 1);

  auto need_arg = [&] {
    if (arg.empty()) throw InputError("graph '" + std::string(name) + "' needs a size argument");
  };

  if (name == "complete") {
    need_arg();
    spec.family = GraphFamily::Complete;
    spec.n = parse_int(arg, "vertex count");
    if (spec.n < 1) throw InputError("complete graph needs n >= 1");
  } else if (name == "bipartite") {
    need_arg();
    spec.family = GraphFamily::Bipartite;
    auto comma = arg.find(',');
    if (comma == std::string_view::npos) throw InputError("bipartite graph needs M,N");
    spec.m = parse_int(arg.substr(0, comma), "part size");
    spec.n = parse_int(arg.substr(comma + 1), "part size");
    if (spec.m < 1 || spec.n < 1) throw InputError("bipartite graph needs M, N >= 1");
  } else if (name == "fan") {
    need_arg();
    spec.family = GraphFamily::Fan;
    spec.n = parse_int(arg, "vertex count");
    if (spec.n < 2) throw InputError("fan graph needs n >= 2");
  } else if (name == "wheel") {
    need_arg();
    spec.family = GraphFamily::Wheel;
    spec.n = parse_int(arg, "vertex count");
    if (spec.n < 4) throw InputError("wheel graph needs n >= 4");
  } else if (name == "petersen") {
    if (!arg.empty()) throw InputError("petersen takes no argument");
    spec.family = GraphFamily::Petersen;
    spec.n = 10;
  } else if (name == "custom") {
    need_arg();
    spec.family = GraphFamily::Custom;
    spec.n = parse_int(arg, "vertex count");
    if (spec.n < 1) throw InputError("custom graph needs n >= 1");
    spec.edges = parse_edge_list(edge_text);
    // Validate eagerly so malformed lists surface before any generation.
    (void)Graph::from_edges(spec.n, spec.edges);
  } else {
    throw InputError("unknown graph family '" + std::string(name) + "'");
  }
  if (spec.family != GraphFamily::Custom && !edge_text.empty()) {
    throw InputError("edge list is only valid with custom graphs");
  }
  return spec;
}

Graph GraphSpec::build() const {
  switch (family) {
    case GraphFamily::Complete:
      return complete_graph(n);
    case GraphFamily::Bipartite:
      return complete_bipartite_graph(m, n);
    case GraphFamily::Fan:
      return fan_graph(n);
    case GraphFamily::Wheel:
      return wheel_graph(n);
    case GraphFamily::Petersen:
      return petersen_graph();
    case GraphFamily::Custom:
      return Graph::from_edges(n, edges);
  }
  throw InputError("unknown graph family");
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g, std::span<const Vertex> subset) {
  std::vector<std::vector<Vertex>> components;
  const std::size_t k = subset.size();
  std::vector<char> visited(k, 0);
  // Explicit stack of (position in subset, next candidate position).
  std::vector<std::pair<std::size_t, std::size_t>> stack;

  for (std::size_t start = 0; start < k; ++start) {
    if (visited[start]) continue;
    visited[start] = 1;
    std::vector<Vertex> group{subset[start]};
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      auto& [cur, scan] = stack.back();
      bool descended = false;
      while (scan < k) {
        std::size_t cand = scan++;
        if (!visited[cand] && g.adjacent(subset[cur], subset[cand])) {
          visited[cand] = 1;
          group.push_back(subset[cand]);
          stack.emplace_back(cand, 0);
          descended = true;
          break;
        }
      }
      if (!descended) stack.pop_back();
    }
    components.push_back(std::move(group));
  }
  return components;
}

}  // namespace treegray
