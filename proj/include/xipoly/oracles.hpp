#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "xipoly/graph.hpp"
#include "xipoly/rational.hpp"
#include "xipoly/sparse_poly.hpp"

namespace xipoly::oracles {

/// Size limits for the brute-force oracles; exceeding one raises
/// oracle_too_large.
struct OracleCaps {
  std::size_t max_colors = 6;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 10;
};

/// Throws oracle_too_large when g has more vertices than the caps allow.
void check_vertex_cap(const Multigraph& g, const OracleCaps& caps);

/// x colors in total, of which colors 1..y are proper.
struct ColoringModel {
  std::size_t total_colors = 0;
  std::size_t proper_colors = 0;
};

/// Maps V -> {1..x} such that no non-loop edge joins two vertices sharing
/// a proper color and no loop vertex takes a proper color.
std::uint64_t count_generalized_colorings(const Multigraph& g, ColoringModel model,
                                          const OracleCaps& caps = {});

std::uint64_t count_proper_colorings(const Multigraph& g, std::size_t colors,
                                     const OracleCaps& caps = {});

/// profile[s] = number of independent vertex sets of size s. Loop vertices
/// are never independent.
std::vector<std::uint64_t> independent_set_profile(const Multigraph& g, const OracleCaps& caps = {});

/// ξ(G) by plain recursion over edges with covered-vertex masks carried
/// down and components recounted from scratch at every leaf.
MultiPoly3 xi_reference(const Multigraph& g, const OracleCaps& caps = {});

/// sum over A ⊆ E of q^k(A) v^|A| by plain 2^m subset iteration.
Rational potts_direct(const Multigraph& g, const Rational& q, const Rational& v,
                      const OracleCaps& caps = {});

}  // namespace xipoly::oracles
