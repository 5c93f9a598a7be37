#include "xipoly/unipoly.hpp"

#include "xipoly/error.hpp"

namespace xipoly {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UniPoly lagrange_interpolate(std::span<const Sample> samples) {
  const std::size_t n = samples.size();
  if (n == 0) throw invalid_nodes("interpolation needs at least one sample");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (samples[i].node == samples[j].node) {
        throw invalid_nodes("duplicate interpolation node " + samples[i].node.to_string());
      }
    }
  }

  // master(t) = prod_j (t - node_j), degree n
  std::vector<Rational> master(n + 1);
  master[0] = Rational(1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t d = j + 1; d > 0; --d) master[d] = master[d - 1] - samples[j].node * master[d];
    master[0] = -samples[j].node * master[0];
  }

  std::vector<Rational> result(n);
  std::vector<Rational> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    // basis(t) = master(t) / (t - node_i), by synthetic division
    const Rational& xi = samples[i].node;
    Rational carry = master[n];
    for (std::size_t d = n; d > 0; --d) {
      basis[d - 1] = carry;
      carry = master[d - 1] + xi * carry;
    }
    Rational denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= xi - samples[j].node;
    }
    const Rational scale = samples[i].value / denom;
    for (std::size_t d = 0; d < n; ++d) result[d] += scale * basis[d];
  }
  return UniPoly(std::move(result));
}

}  // namespace xipoly
