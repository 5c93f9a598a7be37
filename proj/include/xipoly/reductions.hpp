#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "xipoly/graph.hpp"
#include "xipoly/rational.hpp"
#include "xipoly/unipoly.hpp"
#include "xipoly/xi.hpp"

namespace xipoly {

/// Outcome of checking one identity: both sides plus the parameters that
/// produced them.
struct Verdict {
  std::string identity;
  Rational lhs;
  Rational rhs;
  bool equal = false;
  std::vector<std::pair<std::string, std::string>> params;
};

Verdict make_verdict(std::string identity, Rational lhs, Rational rhs,
                     std::vector<std::pair<std::string, std::string>> params);

/// ψ(G_ee; x, w, z) against ψ(G; x, Y, z) with Y_e = (1+y_e1)(1+y_e2) - 1.
/// `w` holds one weight per edge of double_edge(g, e).graph.
Verdict verify_double_edge(const Multigraph& g, std::size_t e, const Rational& x, const EdgeWeights& w,
                           const Rational& z);

enum class ThickeningMode { psi, xi };

/// ψ or ξ of the k-thickening against the original graph at the shifted
/// point. The thickened side is evaluated by the vertex-partition sum (or
/// by pair expansion when the graph is too large for it) and the original
/// side always by pair expansion. xi mode throws precondition_error for y = 0.
Verdict verify_thickening(const Multigraph& g, std::size_t k, const Rational& x, const Rational& y,
                          const Rational& z, ThickeningMode mode);

struct ConeVerdicts {
  Verdict bivariate;  // P(cone G; x, y) = y P(G; x-1, y-1) + (x-y) P(G; x, y)
  Verdict chromatic;  // P(cone G; y) = y P(G; y-1)
  bool equal() const { return bivariate.equal && chromatic.equal; }
};

ConeVerdicts verify_cone_identities(const Multigraph& g, const Rational& x, const Rational& y);

/// Black-box evaluator of ψ at one fixed point.
class PsiOracle {
 public:
  using Procedure = std::function<Rational(const Multigraph&)>;

  PsiOracle(Rational x, Rational y, Rational z, Procedure procedure);

  /// Backed by this library: the vertex-partition sum when the graph is
  /// small enough, pair expansion otherwise.
  static PsiOracle engine_backed(Rational x, Rational y, Rational z);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }

  Rational operator()(const Multigraph& g) const { return procedure_(g); }

 private:
  Rational x_;
  Rational y_;
  Rational z_;
  Procedure procedure_;
};

struct OracleQuery {
  std::size_t k;  // thickening factor
  Rational node;  // (1+y0)^k - 1
  Rational value;
};

struct PsiRestriction {
  UniPoly polynomial;  // y -> ψ(G; x0, y, z0)
  std::vector<OracleQuery> queries;
};

/// Recovers y -> ψ(G; x0, y, z0) from oracle answers on the thickenings
/// G_1 .. G_{m+1}. Throws precondition_error when y0 is -2, -1 or 0.
PsiRestriction interpolate_psi_in_y(const PsiOracle& oracle, const Multigraph& g);

struct PipelineResult {
  Rational value;  // P(G; x, y)
  Rational oracle_z;
  PsiRestriction restriction;
};

/// Evaluates P(G; x, y) = ψ(G; x, -1, (y-x)/x) using only an oracle fixed
/// at (x, y0, (y-x)/x). Needs x != 0 and y0 not in {-2, -1, 0}.
PipelineResult hardness_pipeline(const Multigraph& g, const Rational& x, const Rational& y,
                                 const Rational& y0);

}  // namespace xipoly
