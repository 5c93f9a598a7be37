#include "xipoly/sparse_poly.hpp"

#include "xipoly/error.hpp"

namespace xipoly {

MultiPoly3 shift_psi_to_xi(const MultiPoly3& psi) {
  MultiPoly3 out;
  for (const auto& [e, c] : psi.terms()) {
    if (e[0] < e[2] || e[1] < e[2]) {
      throw exponent_underflow("monomial x^" + std::to_string(e[0]) + "*y^" + std::to_string(e[1]) +
                               "*z^" + std::to_string(e[2]) +
                               " has z-degree above its x- or y-degree; not a psi polynomial");
    }
    out.add_term({e[0] - e[2], e[1] - e[2], e[2]}, c);
  }
  return out;
}

MultiPoly3 shift_xi_to_psi(const MultiPoly3& xi) {
  MultiPoly3 out;
  for (const auto& [e, c] : xi.terms()) out.add_term({e[0] + e[2], e[1] + e[2], e[2]}, c);
  return out;
}

}  // namespace xipoly
