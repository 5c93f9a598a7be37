#include "xipoly/suite.hpp"

#include <array>
#include <string>

#include "xipoly/error.hpp"
#include "xipoly/random.hpp"
#include "xipoly/xi.hpp"

namespace xipoly {

namespace {

constexpr std::array<Suite, 6> kConcrete = {Suite::psi_xi,     Suite::doubling,       Suite::thickening,
                                            Suite::cone,       Suite::specialization, Suite::pipeline};

std::uint64_t stream_seed(std::uint64_t seed, Suite s) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(s) + 1;
}

void psi_xi_checks(const Multigraph& g, Rng& rng, std::size_t trials, std::vector<Verdict>& out) {
  const MultiPoly3 xi = xi_polynomial(g);
  const MultiPoly3 shifted = shift_psi_to_xi(psi_polynomial(g));
  const bool maps_equal = shifted == xi;
  for (std::size_t t = 0; t < trials; ++t) {
    const Rational x = rng.nonzero_rational();
    const Rational y = rng.nonzero_rational();
    const Rational z = rng.rational();
    out.push_back(make_verdict("psi-xi-eval", psi_eval(g, x, y, z / (x * y)), xi_eval(g, x, y, z),
                               {{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}}));
    Verdict v = make_verdict("psi-xi-shift", shifted.evaluate({x, y, z}), xi.evaluate({x, y, z}),
                             {{"x", x.to_string()},
                              {"y", y.to_string()},
                              {"z", z.to_string()},
                              {"coefficient_maps_equal", maps_equal ? "true" : "false"}});
    v.equal = v.equal && maps_equal;
    out.push_back(std::move(v));
  }
}

void doubling_checks(const Multigraph& g, Rng& rng, std::size_t trials, std::vector<Verdict>& out) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<Rational> w(g.edge_count() + 1);
      for (auto& r : w) r = rng.rational();
      const Rational x = rng.rational();
      const Rational z = rng.rational();
      out.push_back(verify_double_edge(g, e, x, EdgeWeights(std::move(w)), z));
    }
  }
}

void thickening_checks(const Multigraph& g, Rng& rng, std::size_t trials, std::vector<Verdict>& out) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t t = 0; t < trials; ++t) {
      const Rational x = rng.rational();
      const Rational y = rng.rational();
      const Rational z = rng.rational();
      out.push_back(verify_thickening(g, k, x, y, z, ThickeningMode::psi));
      const Rational y_nz = rng.nonzero_rational();
      out.push_back(verify_thickening(g, k, x, y_nz, z, ThickeningMode::xi));
    }
  }
}

void cone_checks(const Multigraph& g, Rng& rng, std::size_t trials, std::vector<Verdict>& out) {
  for (std::size_t t = 0; t < trials; ++t) {
    const Rational x = rng.rational();
    const Rational y = rng.rational();
    auto v = verify_cone_identities(g, x, y);
    out.push_back(std::move(v.bivariate));
    out.push_back(std::move(v.chromatic));
  }
}

void specialization_checks(const Multigraph& g, const oracles::OracleCaps& caps, std::vector<Verdict>& out) {
  oracles::check_vertex_cap(g, caps);
  const Poly2 p = bivariate_chromatic(g);
  const std::size_t max_colors = std::min<std::size_t>(4, caps.max_colors);
  for (std::size_t x = 0; x <= max_colors; ++x) {
    for (std::size_t y = 0; y <= x; ++y) {
      const auto count = oracles::count_generalized_colorings(g, {x, y}, caps);
      out.push_back(make_verdict("specialization", p.evaluate({Rational(x), Rational(y)}), Rational(count),
                                 {{"x", std::to_string(x)}, {"y", std::to_string(y)}}));
    }
  }
  const UniPoly chrom = chromatic_polynomial(g);
  for (std::size_t y = 0; y <= max_colors; ++y) {
    out.push_back(make_verdict("chromatic", chrom.evaluate(Rational(y)),
                               Rational(oracles::count_proper_colorings(g, y, caps)),
                               {{"y", std::to_string(y)}}));
  }
  const auto profile = oracles::independent_set_profile(g, caps);
  for (std::size_t x = 1; x <= 5; ++x) {
    Rational sum;
    for (std::size_t s = 0; s < profile.size(); ++s) {
      sum += Rational(profile[s]) * pow(Rational(x) - Rational(1), g.vertex_count() - s);
    }
    out.push_back(make_verdict("independence-slice", p.evaluate({Rational(x), Rational(1)}), sum,
                               {{"x", std::to_string(x)}}));
  }
}

void pipeline_checks(const Multigraph& g, Rng& rng, std::size_t trials, std::vector<Verdict>& out) {
  const std::array<Rational, 4> y0s = {Rational(1), Rational(2), Rational(1, 2), Rational(-3)};
  const Poly2 p = bivariate_chromatic(g);
  for (std::size_t t = 0; t < trials; ++t) {
    const Rational x = rng.nonzero_rational();
    const Rational y = rng.rational();
    const Rational& y0 = y0s[t % y0s.size()];
    const auto result = hardness_pipeline(g, x, y, y0);
    out.push_back(make_verdict("pipeline", result.value, p.evaluate({x, y}),
                               {{"x", x.to_string()}, {"y", y.to_string()}, {"y0", y0.to_string()},
                                {"oracle_z", result.oracle_z.to_string()},
                                {"queries", std::to_string(result.restriction.queries.size())}}));
  }
}

}  // namespace

Suite parse_suite(std::string_view name) {
  for (Suite s : kConcrete) {
    if (suite_name(s) == name) return s;
  }
  if (name == "all") return Suite::all;
  throw invalid_parameter("unknown suite '" + std::string(name) +
                          "' (expected psi-xi, doubling, thickening, cone, specialization, pipeline or all)");
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::psi_xi: return "psi-xi";
    case Suite::doubling: return "doubling";
    case Suite::thickening: return "thickening";
    case Suite::cone: return "cone";
    case Suite::specialization: return "specialization";
    case Suite::pipeline: return "pipeline";
    case Suite::all: return "all";
  }
  return "all";
}

std::vector<Verdict> run_suite(const Multigraph& g, Suite suite, const SuiteOptions& options) {
  std::vector<Verdict> out;
  for (Suite s : kConcrete) {
    if (suite != Suite::all && suite != s) continue;
    Rng rng(stream_seed(options.seed, s));
    switch (s) {
      case Suite::psi_xi: psi_xi_checks(g, rng, options.trials, out); break;
      case Suite::doubling: doubling_checks(g, rng, options.trials, out); break;
      case Suite::thickening: thickening_checks(g, rng, options.trials, out); break;
      case Suite::cone: cone_checks(g, rng, options.trials, out); break;
      case Suite::specialization: specialization_checks(g, options.caps, out); break;
      case Suite::pipeline: pipeline_checks(g, rng, options.trials, out); break;
      case Suite::all: break;
    }
  }
  return out;
}

}  // namespace xipoly
