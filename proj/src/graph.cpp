#include "xipoly/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "xipoly/error.hpp"

namespace xipoly {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_subset(const Multigraph& g, const EdgeSubset& s) {
  if (s.universe() != g.edge_count()) {
    throw invalid_subset("edge subset over " + std::to_string(s.universe()) +
                         " edges used with a graph of " + std::to_string(g.edge_count()) + " edges");
  }
}

// Vertices touched by the edges of s.
std::vector<bool> covered_vertices(const Multigraph& g, const EdgeSubset& s) {
  std::vector<bool> covered(g.vertex_count(), false);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (s.contains(i)) {
      covered[g.edge(i).u] = true;
      covered[g.edge(i).v] = true;
    }
  }
  return covered;
}

}  // namespace

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u >= n_ || edges_[i].v >= n_) {
      throw invalid_parameter("edge " + std::to_string(i) + " (" + std::to_string(edges_[i].u) + ", " +
                              std::to_string(edges_[i].v) + ") has an endpoint outside 0.." +
                              std::to_string(n_) + "-1");
    }
  }
}

EdgeSubset::EdgeSubset(std::size_t universe, std::initializer_list<std::size_t> indices)
    : EdgeSubset(universe, std::span<const std::size_t>(indices.begin(), indices.size())) {}

EdgeSubset::EdgeSubset(std::size_t universe, std::span<const std::size_t> indices)
    : member_(universe, false) {
  for (auto i : indices) insert(i);
}

void EdgeSubset::insert(std::size_t i) {
  if (i >= member_.size()) {
    throw invalid_subset("edge index " + std::to_string(i) + " out of range for " +
                         std::to_string(member_.size()) + " edges");
  }
  member_[i] = true;
}

std::size_t EdgeSubset::size() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

std::vector<std::size_t> EdgeSubset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(i);
  }
  return out;
}

std::size_t components_count(const Multigraph& g, const EdgeSubset& s) {
  check_subset(g, s);
  UnionFind uf(g.vertex_count());
  std::size_t count = g.vertex_count();
  for (auto i : s.indices()) {
    if (uf.unite(g.edge(i).u, g.edge(i).v)) --count;
  }
  return count;
}

std::size_t covered_components_count(const Multigraph& g, const EdgeSubset& s) {
  check_subset(g, s);
  const auto covered = covered_vertices(g, s);
  const auto uncovered = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), false));
  return components_count(g, s) - uncovered;
}

bool vertex_disjoint(const Multigraph& g, const EdgeSubset& a, const EdgeSubset& b) {
  check_subset(g, a);
  check_subset(g, b);
  const auto ca = covered_vertices(g, a);
  const auto cb = covered_vertices(g, b);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (ca[v] && cb[v]) return false;
  }
  return true;
}

Multigraph thicken(const Multigraph& g, std::size_t k) {
  if (k == 0) throw invalid_parameter("thickening factor must be at least 1");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * k);
  for (const auto& e : g.edges()) edges.insert(edges.end(), k, e);
  return Multigraph(g.vertex_count(), std::move(edges));
}

DoubledEdge double_edge(const Multigraph& g, std::size_t e) {
  if (e >= g.edge_count()) {
    throw invalid_parameter("edge index " + std::to_string(e) + " out of range for " +
                            std::to_string(g.edge_count()) + " edges");
  }
  std::vector<Edge> edges = g.edges();
  edges.push_back(g.edge(e));
  const std::size_t second = edges.size() - 1;
  return {Multigraph(g.vertex_count(), std::move(edges)), e, second};
}

Multigraph cone(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (std::size_t v = 0; v < n; ++v) edges.push_back({v, n});
  return Multigraph(n + 1, std::move(edges));
}

Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
  const std::size_t shift = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (const auto& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Multigraph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

std::vector<std::string> family_names() {
  return {"path", "cycle", "complete", "star", "bouquet", "edgeless"};
}

Multigraph generate_family(std::string_view name, std::size_t n) {
  auto require = [&](std::size_t min) {
    if (n < min) {
      throw invalid_parameter("family '" + std::string(name) + "' needs size >= " + std::to_string(min));
    }
  };
  std::vector<Edge> edges;
  if (name == "path") {
    // (0,1), (1,2), ..., (n-2,n-1)
    require(1);
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Multigraph(n, std::move(edges));
  }
  if (name == "cycle") {
    // path edges then the closing edge (0,n-1); n=1 is a loop, n=2 a doubled edge
    require(1);
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Multigraph(n, std::move(edges));
  }
  if (name == "complete") {
    // (i,j) for i < j, lexicographic
    require(1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return Multigraph(n, std::move(edges));
  }
  if (name == "star") {
    // n vertices, center 0, edges (0,i) for i = 1..n-1
    require(1);
    for (std::size_t i = 1; i < n; ++i) edges.push_back({0, i});
    return Multigraph(n, std::move(edges));
  }
  if (name == "bouquet") {
    // one vertex carrying n loops
    edges.assign(n, Edge{0, 0});
    return Multigraph(1, std::move(edges));
  }
  if (name == "edgeless") return Multigraph(n, {});
  throw invalid_parameter("unknown graph family '" + std::string(name) + "'");
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw parse_error(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw parse_error(line_no, "expected two integers, got " + std::to_string(tokens.size()) + " tokens");
    }
    const std::size_t a = parse_count(tokens[0], line_no);
    const std::size_t b = parse_count(tokens[1], line_no);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) {
      throw parse_error(line_no, "more edge lines than the declared " + std::to_string(m));
    }
    if (a >= n || b >= n) {
      throw parse_error(line_no, "endpoint out of range: vertices are 0.." + std::to_string(n) + "-1");
    }
    edges.push_back({a, b});
  }
  if (!have_header) throw parse_error(line_no, "missing 'n m' header");
  if (edges.size() != m) {
    throw parse_error(line_no, "declared " + std::to_string(m) + " edges but found " +
                                   std::to_string(edges.size()));
  }
  return Multigraph(n, std::move(edges));
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace xipoly
