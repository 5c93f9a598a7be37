#include "xipoly/reductions.hpp"

#include "xipoly/error.hpp"

namespace xipoly {

namespace {

Rational psi_large_or_small(const Multigraph& g, const Rational& x, const EdgeWeights& w,
                            const Rational& z) {
  if (g.vertex_count() <= kMaxPartitionVertices) return psi_eval_partition(g, x, w, z);
  return psi_eval(g, x, w, z);
}

Rational eval_bivariate(const Poly2& p, const Rational& x, const Rational& y) {
  return p.evaluate({x, y});
}

}  // namespace

Verdict make_verdict(std::string identity, Rational lhs, Rational rhs,
                     std::vector<std::pair<std::string, std::string>> params) {
  Verdict v;
  v.identity = std::move(identity);
  v.equal = lhs == rhs;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.params = std::move(params);
  return v;
}

Verdict verify_double_edge(const Multigraph& g, std::size_t e, const Rational& x, const EdgeWeights& w,
                           const Rational& z) {
  const DoubledEdge doubled = double_edge(g, e);
  w.check_matches(doubled.graph);

  EdgeWeights merged(std::vector<Rational>(w.values().begin(), w.values().begin() +
                                                                   static_cast<std::ptrdiff_t>(g.edge_count())));
  merged[e] = (Rational(1) + w[doubled.first]) * (Rational(1) + w[doubled.second]) - Rational(1);

  return make_verdict("doubling", psi_eval(doubled.graph, x, w, z), psi_eval(g, x, merged, z),
                      {{"edge", std::to_string(e)},
                       {"x", x.to_string()},
                       {"z", z.to_string()},
                       {"y_e1", w[doubled.first].to_string()},
                       {"y_e2", w[doubled.second].to_string()},
                       {"Y_e", merged[e].to_string()}});
}

Verdict verify_thickening(const Multigraph& g, std::size_t k, const Rational& x, const Rational& y,
                          const Rational& z, ThickeningMode mode) {
  if (mode == ThickeningMode::xi && y.is_zero()) {
    throw precondition_error("xi-mode thickening needs y != 0 (the z-scaling divides by y)");
  }
  const Multigraph thick = thicken(g, k);
  const Rational shifted = pow(Rational(1) + y, k) - Rational(1);
  std::vector<std::pair<std::string, std::string>> params = {
      {"k", std::to_string(k)}, {"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()},
      {"Y", shifted.to_string()}};

  if (mode == ThickeningMode::psi) {
    const Rational lhs = psi_large_or_small(thick, x, EdgeWeights::uniform(thick.edge_count(), y), z);
    const Rational rhs = psi_eval(g, x, shifted, z);
    return make_verdict("thickening-psi", lhs, rhs, std::move(params));
  }
  const Rational z_shifted = z * shifted / y;
  params.emplace_back("Z", z_shifted.to_string());
  const Rational lhs = thick.vertex_count() <= kMaxPartitionVertices ? xi_eval_partition(thick, x, y, z)
                                                                      : xi_eval(thick, x, y, z);
  const Rational rhs = xi_eval(g, x, shifted, z_shifted);
  return make_verdict("thickening-xi", lhs, rhs, std::move(params));
}

ConeVerdicts verify_cone_identities(const Multigraph& g, const Rational& x, const Rational& y) {
  const Poly2 p = bivariate_chromatic(g);
  const Poly2 pc = bivariate_chromatic(cone(g));
  const Rational one(1);

  ConeVerdicts out{
      make_verdict("cone-bivariate", eval_bivariate(pc, x, y),
                   y * eval_bivariate(p, x - one, y - one) + (x - y) * eval_bivariate(p, x, y),
                   {{"x", x.to_string()}, {"y", y.to_string()}}),
      make_verdict("cone-chromatic", eval_bivariate(pc, y, y), y * eval_bivariate(p, y - one, y - one),
                   {{"y", y.to_string()}}),
  };
  return out;
}

PsiOracle::PsiOracle(Rational x, Rational y, Rational z, Procedure procedure)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), procedure_(std::move(procedure)) {}

PsiOracle PsiOracle::engine_backed(Rational x, Rational y, Rational z) {
  Procedure proc = [x, y, z](const Multigraph& g) {
    return psi_large_or_small(g, x, EdgeWeights::uniform(g.edge_count(), y), z);
  };
  return PsiOracle(std::move(x), std::move(y), std::move(z), std::move(proc));
}

PsiRestriction interpolate_psi_in_y(const PsiOracle& oracle, const Multigraph& g) {
  const Rational& y0 = oracle.y();
  if (y0 == Rational(0) || y0 == Rational(-1) || y0 == Rational(-2)) {
    throw precondition_error("oracle point needs |1 + y0| not in {0, 1}, i.e. y0 not in {-2, -1, 0}; got y0 = " +
                             y0.to_string());
  }
  const std::size_t samples_needed = g.edge_count() + 1;
  PsiRestriction out;
  std::vector<Sample> samples;
  for (std::size_t k = 1; k <= samples_needed; ++k) {
    const Rational node = pow(Rational(1) + y0, k) - Rational(1);
    const Rational value = oracle(thicken(g, k));
    out.queries.push_back({k, node, value});
    samples.push_back({node, value});
  }
  out.polynomial = lagrange_interpolate(samples);
  return out;
}

PipelineResult hardness_pipeline(const Multigraph& g, const Rational& x, const Rational& y,
                                 const Rational& y0) {
  if (x.is_zero()) throw precondition_error("pipeline needs x != 0 (the oracle point divides by x)");
  if (y0 == Rational(0) || y0 == Rational(-1) || y0 == Rational(-2)) {
    throw precondition_error("pipeline needs y0 not in {-2, -1, 0}; got y0 = " + y0.to_string());
  }
  Rational z = (y - x) / x;
  const PsiOracle oracle = PsiOracle::engine_backed(x, y0, z);
  PipelineResult out;
  out.restriction = interpolate_psi_in_y(oracle, g);
  out.value = out.restriction.polynomial.evaluate(Rational(-1));
  out.oracle_z = std::move(z);
  return out;
}

}  // namespace xipoly
