#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xipoly/rational.hpp"

namespace xipoly {

/// Sparse polynomial in N variables over Rational. Terms are kept in
/// descending lexicographic order of their exponent vectors and no zero
/// coefficient is ever stored.
template <std::size_t N>
class SparsePoly {
 public:
  using Exponent = std::array<std::uint32_t, N>;
  using TermMap = std::map<Exponent, Rational, std::greater<>>;

  SparsePoly() = default;

  static SparsePoly constant(const Rational& c) {
    SparsePoly p;
    p.add_term(Exponent{}, c);
    return p;
  }

  static SparsePoly monomial(const Exponent& exp, const Rational& c = Rational(1)) {
    SparsePoly p;
    p.add_term(exp, c);
    return p;
  }

  static SparsePoly variable(std::size_t index) {
    Exponent e{};
    e.at(index) = 1;
    return monomial(e);
  }

  void add_term(const Exponent& exp, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Largest exponent of variable `var`; 0 for the zero polynomial.
  std::uint32_t degree(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) {
      std::uint64_t s = 0;
      for (auto v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  /// Exact evaluation, 0^0 = 1.
  Rational evaluate(const std::array<Rational, N>& point) const {
    std::array<std::vector<Rational>, N> powers;
    for (std::size_t i = 0; i < N; ++i) {
      powers[i].push_back(Rational(1));
      const std::uint32_t d = degree(i);
      for (std::uint32_t k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    Rational sum;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] != 0) t *= powers[i][e[i]];
      }
      sum += t;
    }
    return sum;
  }

  SparsePoly& operator+=(const SparsePoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  SparsePoly operator-() const {
    SparsePoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly p;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    }
    return p;
  }

  SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// Trivariate polynomial in (x, y, z).
using MultiPoly3 = SparsePoly<3>;
/// Bivariate polynomial in (x, y).
using Poly2 = SparsePoly<2>;

/// Maps each monomial x^a y^b z^c to x^(a-c) y^(b-c) z^c. Throws
/// exponent_underflow when a < c or b < c for some stored term.
MultiPoly3 shift_psi_to_xi(const MultiPoly3& psi);

/// Maps each monomial x^a y^b z^c to x^(a+c) y^(b+c) z^c.
MultiPoly3 shift_xi_to_psi(const MultiPoly3& xi);

}  // namespace xipoly
