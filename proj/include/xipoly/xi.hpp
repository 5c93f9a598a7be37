#pragma once

#include <cstddef>
#include <vector>

#include "xipoly/enumerate.hpp"
#include "xipoly/graph.hpp"
#include "xipoly/rational.hpp"
#include "xipoly/sparse_poly.hpp"
#include "xipoly/unipoly.hpp"

namespace xipoly {

/// One y-weight per edge of a specific graph.
class EdgeWeights {
 public:
  EdgeWeights() = default;
  explicit EdgeWeights(std::vector<Rational> values) : values_(std::move(values)) {}

  static EdgeWeights uniform(std::size_t edge_count, const Rational& y) {
    return EdgeWeights(std::vector<Rational>(edge_count, y));
  }

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  Rational& operator[](std::size_t i) { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

  /// Throws invalid_parameter unless there is exactly one weight per edge.
  void check_matches(const Multigraph& g) const;

 private:
  std::vector<Rational> values_;
};

/// x^k(A∪B) * prod_{e in A∪B} y_e * z^k_cov(B). Throws contract_violation
/// when A and B share a vertex.
Rational term_weight(const Multigraph& g, const Rational& x, const EdgeWeights& w, const Rational& z,
                     const EdgeSubset& a, const EdgeSubset& b);

/// ψ(G; x, (y_e), z) summed over all vertex-disjoint pairs.
Rational psi_eval(const Multigraph& g, const Rational& x, const EdgeWeights& w, const Rational& z);
Rational psi_eval(const Multigraph& g, const Rational& x, const Rational& y, const Rational& z);

/// ξ(G; x, y, z) as a streaming sum over vertex-disjoint pairs.
Rational xi_eval(const Multigraph& g, const Rational& x, const Rational& y, const Rational& z);

inline constexpr std::size_t kMaxPartitionVertices = 16;

/// ψ(G; x, (y_e), z) by a sum over vertex sets W = V(B): the A-part on G - W
/// and the covering B-part on G[W] are both set-partition sums over
/// connected blocks. Runs in O(3^n) ring operations regardless of the edge
/// count, so it handles heavily thickened graphs. Throws precondition_error
/// when n > kMaxPartitionVertices.
Rational psi_eval_partition(const Multigraph& g, const Rational& x, const EdgeWeights& w,
                            const Rational& z);
Rational psi_eval_partition(const Multigraph& g, const Rational& x, const Rational& y,
                            const Rational& z);

/// ξ(G; x, y, z) through the same vertex-partition sum. Needs y != 0.
Rational xi_eval_partition(const Multigraph& g, const Rational& x, const Rational& y,
                           const Rational& z);

/// ξ(G; x, y, z) as a polynomial.
MultiPoly3 xi_polynomial(const Multigraph& g);

/// ψ(G; x, y, z) at uniform y, as a polynomial.
MultiPoly3 psi_polynomial(const Multigraph& g);

/// P(G; x, y) = ξ(G; x, -1, x - y).
Poly2 bivariate_chromatic(const Multigraph& g);

/// Diagonal P(G; y, y), i.e. the chromatic polynomial in y.
UniPoly chromatic_polynomial(const Multigraph& g);

/// z = 0 part of ξ: sum over A ⊆ E of x^k(A) y^|A|.
Poly2 potts_slice(const Multigraph& g);

}  // namespace xipoly
