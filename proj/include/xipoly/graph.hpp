#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xipoly {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
/// allowed; an edge is identified by its position in the edge list.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws invalid_parameter if an endpoint is >= n.
  Multigraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Set of edge indices of a graph with `universe` edges.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t universe) : member_(universe, false) {}
  /// Throws invalid_subset for an index >= universe.
  EdgeSubset(std::size_t universe, std::initializer_list<std::size_t> indices);
  EdgeSubset(std::size_t universe, std::span<const std::size_t> indices);

  std::size_t universe() const { return member_.size(); }
  bool contains(std::size_t i) const { return i < member_.size() && member_[i]; }
  void insert(std::size_t i);
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<std::size_t> indices() const;

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::vector<bool> member_;
};

/// k(S): components of the spanning subgraph (V, S).
std::size_t components_count(const Multigraph& g, const EdgeSubset& s);

/// k_cov(S): components of (V(S), S); zero for the empty set.
std::size_t covered_components_count(const Multigraph& g, const EdgeSubset& s);

/// True iff no vertex is an endpoint of an edge in `a` and of an edge in `b`.
bool vertex_disjoint(const Multigraph& g, const EdgeSubset& a, const EdgeSubset& b);

/// Replaces every edge by k parallel copies; copies of edge i get indices
/// i*k .. i*k+k-1. Throws invalid_parameter for k == 0.
Multigraph thicken(const Multigraph& g, std::size_t k);

struct DoubledEdge {
  Multigraph graph;
  std::size_t first;   // takes the slot of the original edge
  std::size_t second;  // appended last
};

/// Replaces edge e by two copies. Throws invalid_parameter for a bad index.
DoubledEdge double_edge(const Multigraph& g, std::size_t e);

/// Adds apex vertex n joined to every original vertex; apex edges (v, n)
/// are appended in vertex order.
Multigraph cone(const Multigraph& g);

/// Vertices of h are shifted by g.vertex_count(); edges of g come first.
Multigraph disjoint_union(const Multigraph& g, const Multigraph& h);

/// Families: path, cycle, complete, star, bouquet, edgeless.
/// Throws invalid_parameter for an unknown family or a size below the
/// family minimum.
Multigraph generate_family(std::string_view name, std::size_t n);

std::vector<std::string> family_names();

/// Edge-list text: '#' comment lines, then "n m", then m lines "u v".
/// Throws parse_error with the offending line number.
Multigraph parse_graph(std::string_view text);

std::string serialize_graph(const Multigraph& g);

}  // namespace xipoly
