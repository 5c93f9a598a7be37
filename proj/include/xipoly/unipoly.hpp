#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "xipoly/rational.hpp"

namespace xipoly {

/// Dense univariate polynomial, lowest degree first, trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  /// Horner evaluation.
  Rational evaluate(const Rational& t) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct Sample {
  Rational node;
  Rational value;
};

/// Unique polynomial of degree < samples.size() through every sample.
/// Throws invalid_nodes on an empty sample set or a repeated node.
UniPoly lagrange_interpolate(std::span<const Sample> samples);

}  // namespace xipoly
