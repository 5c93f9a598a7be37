#include "xipoly/xi.hpp"

#include <bit>
#include <cstdint>

#include "xipoly/error.hpp"

namespace xipoly {

namespace {

// Dense histogram of pairs by (n - k(A∪B), k_cov(B), |A|+|B|); each index
// is at most m.
class PairHistogram {
 public:
  explicit PairHistogram(const Multigraph& g)
      : n_(g.vertex_count()), side_(g.edge_count() + 1), counts_(side_ * side_ * side_, 0) {
    for_each_disjoint_pair(g, *this);
  }

  void leaf(std::span<const EdgeRole>, const PairStats& s) {
    ++counts_[index(n_ - s.components, s.covered_components, s.edges_used)];
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t merged = 0; merged < side_; ++merged) {
      for (std::size_t cov = 0; cov < side_; ++cov) {
        for (std::size_t used = 0; used < side_; ++used) {
          const std::uint64_t c = counts_[index(merged, cov, used)];
          if (c != 0) f(n_ - merged, cov, used, c);
        }
      }
    }
  }

 private:
  std::size_t index(std::size_t merged, std::size_t cov, std::size_t used) const {
    return (merged * side_ + cov) * side_ + used;
  }

  std::size_t n_;
  std::size_t side_;
  std::vector<std::uint64_t> counts_;
};

std::vector<Rational> power_table(const Rational& base, std::size_t max_exp) {
  std::vector<Rational> p;
  p.reserve(max_exp + 1);
  p.push_back(Rational(1));
  for (std::size_t i = 1; i <= max_exp; ++i) p.push_back(p.back() * base);
  return p;
}

Rational from_count(std::uint64_t c) { return Rational(c); }

// Sum over set partitions of vertices into connected blocks, weighting
// each block with a factor. Blocks of the A-part may be bare vertices;
// blocks of the B-part must be covered by at least one edge.
Rational partition_sum(const Multigraph& g, const EdgeWeights& w, const Rational& a_block,
                       const Rational& b_block) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxPartitionVertices) {
    throw precondition_error("vertex-partition evaluation supports at most " +
                             std::to_string(kMaxPartitionVertices) + " vertices, graph has " +
                             std::to_string(n));
  }
  using Mask = std::uint32_t;
  const Mask full = static_cast<Mask>((Mask{1} << n) - 1);
  const std::size_t states = std::size_t{1} << n;

  // total[S] = prod over edges inside S of (1 + y_e)
  std::vector<Rational> total(states, Rational(1));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Mask em = static_cast<Mask>((Mask{1} << g.edge(i).u) | (Mask{1} << g.edge(i).v));
    const Rational f = Rational(1) + w[i];
    for (Mask s = 0; s <= full; ++s) {
      if ((s & em) == em) total[s] *= f;
      if (s == full) break;
    }
  }

  // conn[S] = sum over edge sets spanning S connectedly of prod y_e
  std::vector<Rational> conn(states);
  for (Mask s = 1; s <= full; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s ^ low;
    Rational c = total[s];
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask t = low | sub;
      if (t != s) c -= conn[t] * total[s ^ t];
      if (sub == 0) break;
    }
    conn[s] = std::move(c);
    if (s == full) break;
  }

  std::vector<Rational> part_a(states);
  std::vector<Rational> part_b(states);
  part_a[0] = Rational(1);
  part_b[0] = Rational(1);
  for (Mask s = 1; s <= full; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s ^ low;
    Rational sa;
    Rational sb;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask t = low | sub;
      sa += conn[t] * part_a[s ^ t];
      // a single vertex is covered only if one of its loops is chosen
      const Rational covering = std::popcount(t) == 1 ? conn[t] - Rational(1) : conn[t];
      if (!covering.is_zero()) sb += covering * part_b[s ^ t];
      if (sub == 0) break;
    }
    part_a[s] = a_block * sa;
    part_b[s] = b_block * sb;
    if (s == full) break;
  }

  Rational sum;
  for (Mask cov = 0;; ++cov) {
    sum += part_a[full ^ cov] * part_b[cov];
    if (cov == full) break;
  }
  return sum;
}

}  // namespace

void EdgeWeights::check_matches(const Multigraph& g) const {
  if (values_.size() != g.edge_count()) {
    throw invalid_parameter("edge weights: got " + std::to_string(values_.size()) + " weights for " +
                            std::to_string(g.edge_count()) + " edges");
  }
}

Rational term_weight(const Multigraph& g, const Rational& x, const EdgeWeights& w, const Rational& z,
                     const EdgeSubset& a, const EdgeSubset& b) {
  w.check_matches(g);
  if (!vertex_disjoint(g, a, b)) throw contract_violation("term_weight: A and B share a vertex");
  EdgeSubset both(g.edge_count());
  Rational product(1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (a.contains(i) || b.contains(i)) {
      both.insert(i);
      product *= w[i];
    }
  }
  return pow(x, components_count(g, both)) * product * pow(z, covered_components_count(g, b));
}

Rational psi_eval(const Multigraph& g, const Rational& x, const EdgeWeights& w, const Rational& z) {
  w.check_matches(g);
  const std::size_t n = g.vertex_count();
  const std::size_t side = g.edge_count() + 1;

  struct Accumulator {
    const EdgeWeights& w;
    std::size_t n;
    std::size_t side;
    std::vector<Rational> products;
    std::vector<Rational> sums;  // by (n - k, k_cov)

    void descend(std::size_t i, EdgeRole) { products.push_back(products.back() * w[i]); }
    void ascend(std::size_t, EdgeRole) { products.pop_back(); }
    void leaf(std::span<const EdgeRole>, const PairStats& s) {
      sums[(n - s.components) * side + s.covered_components] += products.back();
    }
  } acc{w, n, side, {Rational(1)}, std::vector<Rational>(side * side)};
  for_each_disjoint_pair(g, acc);

  const auto xp = power_table(x, n);
  const auto zp = power_table(z, side - 1);
  Rational sum;
  for (std::size_t merged = 0; merged < side; ++merged) {
    for (std::size_t cov = 0; cov < side; ++cov) {
      const Rational& s = acc.sums[merged * side + cov];
      if (!s.is_zero()) sum += xp[n - merged] * zp[cov] * s;
    }
  }
  return sum;
}

Rational psi_eval(const Multigraph& g, const Rational& x, const Rational& y, const Rational& z) {
  return psi_eval(g, x, EdgeWeights::uniform(g.edge_count(), y), z);
}

Rational xi_eval(const Multigraph& g, const Rational& x, const Rational& y, const Rational& z) {
  const PairHistogram hist(g);
  const auto xp = power_table(x, g.vertex_count());
  const auto yp = power_table(y, g.edge_count());
  const auto zp = power_table(z, g.edge_count());
  Rational sum;
  hist.for_each([&](std::size_t k, std::size_t cov, std::size_t used, std::uint64_t count) {
    sum += from_count(count) * xp[k - cov] * yp[used - cov] * zp[cov];
  });
  return sum;
}

Rational psi_eval_partition(const Multigraph& g, const Rational& x, const EdgeWeights& w,
                            const Rational& z) {
  w.check_matches(g);
  return partition_sum(g, w, x, x * z);
}

Rational psi_eval_partition(const Multigraph& g, const Rational& x, const Rational& y,
                            const Rational& z) {
  return psi_eval_partition(g, x, EdgeWeights::uniform(g.edge_count(), y), z);
}

Rational xi_eval_partition(const Multigraph& g, const Rational& x, const Rational& y,
                           const Rational& z) {
  if (y.is_zero()) throw precondition_error("xi_eval_partition needs y != 0");
  // each covered block T carries z * y^(|B_T| - 1)
  return partition_sum(g, EdgeWeights::uniform(g.edge_count(), y), x, z / y);
}

MultiPoly3 xi_polynomial(const Multigraph& g) {
  const PairHistogram hist(g);
  MultiPoly3 p;
  hist.for_each([&](std::size_t k, std::size_t cov, std::size_t used, std::uint64_t count) {
    p.add_term({static_cast<std::uint32_t>(k - cov), static_cast<std::uint32_t>(used - cov),
                static_cast<std::uint32_t>(cov)},
               from_count(count));
  });
  return p;
}

MultiPoly3 psi_polynomial(const Multigraph& g) {
  const PairHistogram hist(g);
  MultiPoly3 p;
  hist.for_each([&](std::size_t k, std::size_t cov, std::size_t used, std::uint64_t count) {
    p.add_term({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(used),
                static_cast<std::uint32_t>(cov)},
               from_count(count));
  });
  return p;
}

Poly2 bivariate_chromatic(const Multigraph& g) {
  Poly2 p;
  const MultiPoly3 xi = xi_polynomial(g);
  for (const auto& [e, c] : xi.terms()) {
    const auto [a, b, cz] = e;
    // c * (-1)^b * x^a * (x - y)^cz, expanded binomially
    const Rational base = (b % 2 == 0) ? c : -c;
    Rational binom(1);
    for (std::uint32_t j = 0; j <= cz; ++j) {
      const Rational coef = (j % 2 == 0) ? base * binom : -(base * binom);
      p.add_term({a + cz - j, j}, coef);
      binom = binom * Rational(cz - j) / Rational(j + 1);
    }
  }
  return p;
}

UniPoly chromatic_polynomial(const Multigraph& g) {
  std::vector<Rational> coeffs;
  const Poly2 p = bivariate_chromatic(g);
  for (const auto& [e, c] : p.terms()) {
    const std::size_t d = e[0] + e[1];
    if (coeffs.size() <= d) coeffs.resize(d + 1);
    coeffs[d] += c;
  }
  return UniPoly(std::move(coeffs));
}

Poly2 potts_slice(const Multigraph& g) {
  Poly2 p;
  const MultiPoly3 xi = xi_polynomial(g);
  for (const auto& [e, c] : xi.terms()) {
    if (e[2] == 0) p.add_term({e[0], e[1]}, c);
  }
  return p;
}

}  // namespace xipoly
