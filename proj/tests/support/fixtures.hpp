#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "xipoly/graph.hpp"
#include "xipoly/rational.hpp"
#include "xipoly/sparse_poly.hpp"

namespace fixtures {

using xipoly::Edge;
using xipoly::Multigraph;
using xipoly::MultiPoly3;
using xipoly::Rational;

inline Multigraph k1() { return Multigraph(1, {}); }
inline Multigraph k2() { return Multigraph(2, {{0, 1}}); }
inline Multigraph loop() { return Multigraph(1, {{0, 0}}); }
inline Multigraph path3() { return Multigraph(3, {{0, 1}, {1, 2}}); }
inline Multigraph triangle() { return Multigraph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline Multigraph parallel_pair() { return Multigraph(2, {{0, 1}, {0, 1}}); }

inline MultiPoly3 poly(std::initializer_list<std::pair<std::array<std::uint32_t, 3>, long>> terms) {
  MultiPoly3 p;
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

// Sum over all 3^m role assignments, filtered through the public
// EdgeSubset predicates; shares nothing with the pruned walker.
template <class F>
void naive_pairs(const Multigraph& g, F&& f) {
  const std::size_t m = g.edge_count();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    xipoly::EdgeSubset a(m);
    xipoly::EdgeSubset b(m);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < m; ++i) {
      const auto d = c % 3;
      c /= 3;
      if (d == 1) a.insert(i);
      if (d == 2) b.insert(i);
    }
    if (xipoly::vertex_disjoint(g, a, b)) f(a, b);
  }
}

}  // namespace fixtures
