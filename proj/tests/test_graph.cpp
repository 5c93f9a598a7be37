#include "doctest.h"

#include "support/fixtures.hpp"
#include "xipoly/enumerate.hpp"
#include "xipoly/error.hpp"
#include "xipoly/graph.hpp"
#include "xipoly/random.hpp"
#include "xipoly/xi.hpp"

using namespace xipoly;
using namespace fixtures;

TEST_CASE("multigraph rejects out-of-range endpoints") {
  CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), invalid_parameter);
  CHECK_NOTHROW(Multigraph(0, {}));
}

TEST_CASE("edge subsets validate indices") {
  CHECK_THROWS_AS(EdgeSubset(2, {2}), invalid_subset);
  EdgeSubset s(3, {2, 0});
  CHECK(s.indices() == std::vector<std::size_t>{0, 2});
  CHECK(s.size() == 2);
  CHECK(EdgeSubset(0).empty());
  CHECK_THROWS_AS(components_count(k2(), EdgeSubset(2)), invalid_subset);
}

TEST_CASE("components_count") {
  CHECK(components_count(Multigraph(2, {}), EdgeSubset(0)) == 2);
  CHECK(components_count(k2(), EdgeSubset(1, {0})) == 1);
  CHECK(components_count(path3(), EdgeSubset(2, {0})) == 2);
  CHECK(components_count(loop(), EdgeSubset(1, {0})) == 1);
  CHECK(components_count(Multigraph(2, {{0, 0}, {1, 1}}), EdgeSubset(2, {0, 1})) == 2);
}

TEST_CASE("covered_components_count") {
  CHECK(covered_components_count(triangle(), EdgeSubset(3)) == 0);
  CHECK(covered_components_count(k2(), EdgeSubset(1, {0})) == 1);
  const Multigraph path_plus_isolated(4, {{0, 1}, {1, 2}});
  CHECK(covered_components_count(path_plus_isolated, EdgeSubset(2, {0, 1})) == 1);
  CHECK(covered_components_count(loop(), EdgeSubset(1, {0})) == 1);
  CHECK(covered_components_count(Multigraph(4, {{0, 1}, {2, 3}}), EdgeSubset(2, {0, 1})) == 2);
}

TEST_CASE("vertex_disjoint") {
  CHECK(vertex_disjoint(triangle(), EdgeSubset(3), EdgeSubset(3, {0, 1, 2})));
  CHECK_FALSE(vertex_disjoint(k2(), EdgeSubset(1, {0}), EdgeSubset(1, {0})));
  CHECK_FALSE(vertex_disjoint(path3(), EdgeSubset(2, {0}), EdgeSubset(2, {1})));
  CHECK(vertex_disjoint(Multigraph(4, {{0, 1}, {2, 3}}), EdgeSubset(2, {0}), EdgeSubset(2, {1})));
}

TEST_CASE("enumerate_disjoint_pairs fixtures") {
  const auto pairs = enumerate_disjoint_pairs(k2());
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::pair{EdgeSubset(1), EdgeSubset(1)});
  CHECK(pairs[1] == std::pair{EdgeSubset(1, {0}), EdgeSubset(1)});
  CHECK(pairs[2] == std::pair{EdgeSubset(1), EdgeSubset(1, {0})});

  CHECK(enumerate_disjoint_pairs(path3()).size() == 7);
  CHECK(enumerate_disjoint_pairs(triangle()).size() == 15);
  CHECK(count_disjoint_pairs(triangle()) == 15);
  CHECK(count_disjoint_pairs(Multigraph(0, {})) == 1);
}

TEST_CASE("enumeration order is the ternary counter, edge 0 most significant") {
  const auto pairs = enumerate_disjoint_pairs(path3());
  // codes: none=0, A=1, B=2; expected sequence of (role e0, role e1)
  const std::vector<std::pair<int, int>> expected = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 2}};
  REQUIRE(pairs.size() == expected.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto role = [&](std::size_t e) { return pairs[i].first.contains(e) ? 1 : (pairs[i].second.contains(e) ? 2 : 0); };
    CHECK(std::pair{role(0), role(1)} == expected[i]);
  }
}

TEST_CASE("enumeration matches the naive 3^m filter on random multigraphs") {
  Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const Multigraph g = random_multigraph(rng, 0, 6, 7);
    std::vector<std::pair<EdgeSubset, EdgeSubset>> naive;
    naive_pairs(g, [&](const EdgeSubset& a, const EdgeSubset& b) { naive.emplace_back(a, b); });
    auto fast = enumerate_disjoint_pairs(g);
    CHECK(fast.size() == naive.size());
    // stats reported by the walker agree with the public counting functions
    for_each_disjoint_pair(g, [&](std::span<const EdgeRole> roles, const PairStats& s) {
      EdgeSubset u(g.edge_count());
      EdgeSubset b(g.edge_count());
      for (std::size_t i = 0; i < roles.size(); ++i) {
        if (roles[i] != EdgeRole::none) u.insert(i);
        if (roles[i] == EdgeRole::b) b.insert(i);
      }
      CHECK(s.components == components_count(g, u));
      CHECK(s.covered_components == covered_components_count(g, b));
      CHECK(s.edges_used == u.size());
    });
  }
}

TEST_CASE("component invariants") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph g = random_multigraph(rng, 1, 7, 8);
    const std::size_t n = g.vertex_count();
    CHECK(components_count(g, EdgeSubset(g.edge_count())) == n);
    for (int draw = 0; draw < 5; ++draw) {
      EdgeSubset s(g.edge_count());
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (rng.below(2) == 1) s.insert(i);
      }
      const std::size_t k = components_count(g, s);
      CHECK(k >= 1);
      CHECK(k <= n);
      std::vector<bool> covered(n, false);
      for (auto i : s.indices()) covered[g.edge(i).u] = covered[g.edge(i).v] = true;
      const auto uncovered = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), false));
      CHECK(k == covered_components_count(g, s) + uncovered);
    }
  }
}

TEST_CASE("pair count reaches 3^m exactly on a loopless perfect matching") {
  const Multigraph matching(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(count_disjoint_pairs(matching) == 81);
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Multigraph g = random_multigraph(rng, 1, 5, 6);
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < g.edge_count(); ++i) bound *= 3;
    CHECK(count_disjoint_pairs(g) <= bound);
  }
}

TEST_CASE("thicken") {
  CHECK(thicken(k2(), 2) == parallel_pair());
  const Multigraph g = path3();
  CHECK(thicken(g, 1) == g);
  CHECK(thicken(loop(), 3) == Multigraph(1, {{0, 0}, {0, 0}, {0, 0}}));
  const Multigraph t = thicken(Multigraph(3, {{0, 1}, {1, 2}}), 3);
  CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}});
  CHECK_THROWS_AS(thicken(g, 0), invalid_parameter);
}

TEST_CASE("double_edge") {
  const auto d = double_edge(k2(), 0);
  CHECK(d.graph == parallel_pair());
  CHECK(d.first == 0);
  CHECK(d.second == 1);

  const auto p = double_edge(path3(), 0);
  CHECK(p.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {0, 1}});
  CHECK(p.second == 2);
  CHECK_THROWS_AS(double_edge(path3(), 2), invalid_parameter);
}

TEST_CASE("iterated doubling agrees with 2-thickening under evaluation") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Multigraph g = random_multigraph(rng, 1, 4, 4);
    Multigraph doubled = g;
    for (std::size_t e = 0; e < g.edge_count(); ++e) doubled = double_edge(doubled, e).graph;
    const Multigraph thick = thicken(g, 2);
    const Rational x = rng.rational();
    const Rational y = rng.rational();
    const Rational z = rng.rational();
    CHECK(psi_eval(doubled, x, y, z) == psi_eval(thick, x, y, z));
  }
}

TEST_CASE("thickening composes multiplicatively") {
  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const Multigraph g = random_multigraph(rng, 1, 4, 3);
    const Rational x = rng.rational();
    const Rational y = rng.rational();
    const Rational z = rng.rational();
    CHECK(psi_eval_partition(thicken(thicken(g, 2), 3), x, y, z) == psi_eval_partition(thicken(g, 6), x, y, z));
  }
}

TEST_CASE("cone") {
  CHECK(cone(k1()) == k2());
  CHECK(cone(Multigraph(2, {})) == Multigraph(3, {{0, 2}, {1, 2}}));
  const Multigraph c = cone(k2());
  CHECK(c.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Multigraph g = random_multigraph(rng, 0, 6, 6);
    const Multigraph cg = cone(g);
    CHECK(cg.vertex_count() == g.vertex_count() + 1);
    CHECK(cg.edge_count() == g.edge_count() + g.vertex_count());
  }
}

TEST_CASE("generate_family") {
  CHECK(generate_family("path", 3) == path3());
  CHECK(generate_family("bouquet", 2) == Multigraph(1, {{0, 0}, {0, 0}}));
  CHECK(generate_family("complete", 3) == triangle());
  CHECK(generate_family("cycle", 1) == loop());
  CHECK(generate_family("cycle", 2) == parallel_pair());
  CHECK(generate_family("cycle", 4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(generate_family("star", 4).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(generate_family("edgeless", 0) == Multigraph(0, {}));
  CHECK_THROWS_AS(generate_family("cycle", 0), invalid_parameter);
  CHECK_THROWS_AS(generate_family("wheel", 5), invalid_parameter);
}

TEST_CASE("parse and serialize") {
  CHECK(parse_graph("2 1\n0 1\n") == k2());
  CHECK(parse_graph("1 0\n") == k1());
  CHECK(parse_graph("# a comment\n\n3 2\n0 1\n  # inner\n1 2") == path3());
  CHECK(serialize_graph(path3()) == "3 2\n0 1\n1 2\n");

  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const parse_error& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("2 1\n0 5\n") == 2);
  CHECK(line_of("2 2\n0 1\n") == 3);
  CHECK(line_of("2 1\n0 1\n1 0\n") == 3);
  CHECK(line_of("2 1\n0 x\n") == 2);
  CHECK(line_of("2 1\n0 -1\n") == 2);
  CHECK(line_of("2\n") == 1);
  CHECK(line_of("# only comments\n") != 0);

  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Multigraph g = random_multigraph(rng, 0, 6, 6);
    const std::string text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
  }
}
