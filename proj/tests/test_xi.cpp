#include "doctest.h"

#include "support/fixtures.hpp"
#include "xipoly/error.hpp"
#include "xipoly/random.hpp"
#include "xipoly/xi.hpp"

using namespace xipoly;
using namespace fixtures;

namespace {

// ξ by summing x^(k-kcov) y^(|A|+|B|-kcov) z^kcov over the naive 3^m filter.
MultiPoly3 naive_xi(const Multigraph& g) {
  MultiPoly3 p;
  naive_pairs(g, [&](const EdgeSubset& a, const EdgeSubset& b) {
    EdgeSubset u(g.edge_count());
    for (auto i : a.indices()) u.insert(i);
    for (auto i : b.indices()) u.insert(i);
    const auto k = static_cast<std::uint32_t>(components_count(g, u));
    const auto kc = static_cast<std::uint32_t>(covered_components_count(g, b));
    p.add_term({k - kc, static_cast<std::uint32_t>(u.size()) - kc, kc}, Rational(1));
  });
  return p;
}

}  // namespace

TEST_CASE("term_weight") {
  const auto w = EdgeWeights(std::vector<Rational>{Rational(3)});
  CHECK(term_weight(k2(), Rational(2), EdgeWeights::uniform(1, Rational(1)), Rational(5), EdgeSubset(1),
                    EdgeSubset(1)) == Rational(4));
  CHECK(term_weight(k2(), Rational(2), w, Rational(5), EdgeSubset(1, {0}), EdgeSubset(1)) == Rational(6));
  CHECK(term_weight(k2(), Rational(2), w, Rational(5), EdgeSubset(1), EdgeSubset(1, {0})) == Rational(30));
  CHECK_THROWS_AS(term_weight(k2(), Rational(2), w, Rational(5), EdgeSubset(1, {0}), EdgeSubset(1, {0})),
                  contract_violation);
  CHECK_THROWS_AS(term_weight(k2(), Rational(2), EdgeWeights(), Rational(5), EdgeSubset(1), EdgeSubset(1)),
                  invalid_parameter);
}

TEST_CASE("psi_eval fixtures") {
  CHECK(psi_eval(Multigraph(3, {}), Rational(2), Rational(9), Rational(7)) == Rational(8));
  CHECK(psi_eval(k2(), Rational(2), Rational(3), Rational(5)) == Rational(40));
  CHECK(psi_eval(parallel_pair(), Rational(2), Rational(1), Rational(1)) == Rational(16));
  CHECK(psi_eval(k2(), Rational(2), Rational(3), Rational(1)) == Rational(16));
  CHECK(psi_eval(Multigraph(0, {}), Rational(5), Rational(5), Rational(5)) == Rational(1));
}

TEST_CASE("xi_polynomial fixtures") {
  CHECK(xi_polynomial(k1()) == poly({{{1, 0, 0}, 1}}));
  CHECK(xi_polynomial(k2()) == poly({{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 0, 1}, 1}}));
  CHECK(xi_polynomial(path3()) ==
        poly({{{3, 0, 0}, 1}, {{2, 1, 0}, 2}, {{1, 2, 0}, 1}, {{1, 0, 1}, 2}, {{0, 1, 1}, 1}}));
  CHECK(xi_polynomial(loop()) == poly({{{1, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 0, 1}, 1}}));
  // frozen from an independent 3^m brute force
  CHECK(xi_polynomial(triangle()) == poly({{{3, 0, 0}, 1},
                                           {{2, 1, 0}, 3},
                                           {{1, 3, 0}, 1},
                                           {{1, 2, 0}, 3},
                                           {{1, 0, 1}, 3},
                                           {{0, 2, 1}, 1},
                                           {{0, 1, 1}, 3}}));
  CHECK(xi_polynomial(generate_family("cycle", 4)) == poly({{{4, 0, 0}, 1},
                                                            {{3, 1, 0}, 4},
                                                            {{2, 2, 0}, 6},
                                                            {{2, 0, 1}, 4},
                                                            {{1, 4, 0}, 1},
                                                            {{1, 3, 0}, 4},
                                                            {{1, 1, 1}, 8},
                                                            {{0, 3, 1}, 1},
                                                            {{0, 2, 1}, 4},
                                                            {{0, 0, 2}, 2}}));
}

TEST_CASE("psi_polynomial fixtures") {
  CHECK(psi_polynomial(k2()) == poly({{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{1, 1, 1}, 1}}));
  CHECK(psi_polynomial(Multigraph(4, {})) == poly({{{4, 0, 0}, 1}}));
  CHECK(psi_polynomial(parallel_pair()) ==
        poly({{{2, 0, 0}, 1}, {{1, 1, 0}, 2}, {{1, 2, 0}, 1}, {{1, 1, 1}, 2}, {{1, 2, 1}, 1}}));
}

TEST_CASE("xi_eval fixtures") {
  CHECK(xi_eval(k2(), Rational(1), Rational(1), Rational(1)) == Rational(3));
  CHECK(xi_eval(triangle(), Rational(1), Rational(1), Rational(1)) == Rational(15));
  CHECK(xi_eval(Multigraph(4, {}), Rational(3), Rational(0), Rational(0)) == Rational(81));
}

TEST_CASE("engine agrees with the naive expansion and with itself") {
  Rng rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    const Multigraph g = random_multigraph(rng, 0, 5, 6);
    const MultiPoly3 xi = xi_polynomial(g);
    CHECK(xi == naive_xi(g));
    CHECK(shift_psi_to_xi(psi_polynomial(g)) == xi);
    CHECK(psi_polynomial(g) == shift_xi_to_psi(xi));
    CHECK(xi_eval(g, Rational(1), Rational(1), Rational(1)) == Rational(count_disjoint_pairs(g)));

    CHECK(xi.degree(1) <= g.edge_count());
    CHECK(xi.degree(0) <= g.vertex_count());
    CHECK(xi.degree(2) <= g.edge_count());
    CHECK(xi.degree(2) <= g.vertex_count());
    CHECK(psi_polynomial(g).degree(1) <= g.edge_count());

    const Rational x = rng.rational();
    const Rational y = rng.rational();
    const Rational z = rng.rational();
    CHECK(xi_eval(g, x, y, z) == xi.evaluate({x, y, z}));
    CHECK(psi_eval(g, x, y, z) == psi_polynomial(g).evaluate({x, y, z}));
  }
}

TEST_CASE("psi at z/(xy) equals xi") {
  Rng rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph g = random_multigraph(rng, 1, 5, 6);
    const Rational x = rng.nonzero_rational();
    const Rational y = rng.nonzero_rational();
    const Rational z = rng.rational();
    CHECK(psi_eval(g, x, y, z / (x * y)) == xi_eval(g, x, y, z));
    CHECK(xi_eval(g, x, y, z * x * y) == psi_eval(g, x, y, z));
  }
}

TEST_CASE("partition evaluator agrees with pair expansion") {
  Rng rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = random_multigraph(rng, 0, 6, 8);
    std::vector<Rational> w(g.edge_count());
    for (auto& r : w) r = rng.rational();
    const EdgeWeights weights(w);
    const Rational x = rng.rational();
    const Rational y = rng.nonzero_rational();
    const Rational z = rng.rational();
    CHECK(psi_eval_partition(g, x, weights, z) == psi_eval(g, x, weights, z));
    CHECK(xi_eval_partition(g, x, y, z) == xi_eval(g, x, y, z));
  }
  CHECK(psi_eval_partition(Multigraph(0, {}), Rational(3), Rational(3), Rational(3)) == Rational(1));
  CHECK_THROWS_AS(xi_eval_partition(k2(), Rational(1), Rational(0), Rational(1)), precondition_error);
  CHECK_THROWS_AS(psi_eval_partition(Multigraph(17, {}), Rational(1), Rational(1), Rational(1)),
                  precondition_error);
}

TEST_CASE("xi is multiplicative over disjoint unions") {
  Rng rng(80);
  for (int trial = 0; trial < 60; ++trial) {
    const Multigraph g = random_multigraph(rng, 0, 4, 4);
    const Multigraph h = random_multigraph(rng, 0, 4, 4);
    CHECK(xi_polynomial(disjoint_union(g, h)) == xi_polynomial(g) * xi_polynomial(h));
  }
}

TEST_CASE("bivariate chromatic fixtures") {
  const Poly2 expected_k2 = [] {
    Poly2 p;
    p.add_term({2, 0}, Rational(1));
    p.add_term({0, 1}, Rational(-1));
    return p;
  }();
  CHECK(bivariate_chromatic(k2()) == expected_k2);
  CHECK(bivariate_chromatic(k1()) == Poly2::variable(0));
  CHECK(bivariate_chromatic(Multigraph(3, {})) == Poly2::monomial({3, 0}));
  // frozen from the independent brute force: P(P2; 3, 2) = ξ(P2; 3, -1, 1) = 17
  CHECK(bivariate_chromatic(path3()).evaluate({Rational(3), Rational(2)}) == Rational(17));
}

TEST_CASE("chromatic polynomial fixtures") {
  CHECK(chromatic_polynomial(k2()) == UniPoly({Rational(0), Rational(-1), Rational(1)}));
  CHECK(chromatic_polynomial(loop()).is_zero());
  CHECK(chromatic_polynomial(Multigraph(2, {{0, 1}, {1, 1}})).is_zero());
  CHECK(chromatic_polynomial(Multigraph(3, {})) == UniPoly({Rational(0), Rational(0), Rational(0), Rational(1)}));
  // y(y-1)(y-2) for the triangle
  CHECK(chromatic_polynomial(triangle()) == UniPoly({Rational(0), Rational(2), Rational(-3), Rational(1)}));
}

TEST_CASE("potts slice") {
  Poly2 k2_slice;
  k2_slice.add_term({2, 0}, Rational(1));
  k2_slice.add_term({1, 1}, Rational(1));
  CHECK(potts_slice(k2()) == k2_slice);
  Poly2 loop_slice;
  loop_slice.add_term({1, 0}, Rational(1));
  loop_slice.add_term({1, 1}, Rational(1));
  CHECK(potts_slice(loop()) == loop_slice);
  CHECK(potts_slice(Multigraph(5, {})) == Poly2::monomial({5, 0}));
}
