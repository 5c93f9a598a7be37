#pragma once

#include <array>
#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "xipoly/reductions.hpp"
#include "xipoly/sparse_poly.hpp"
#include "xipoly/unipoly.hpp"

namespace xipoly {

using Json = nlohmann::ordered_json;

/// {"vars": [...], "terms": [{"coef": "p/q", "exp": [...]}, ...]}, terms in
/// descending lexicographic exponent order.
Json to_json(const MultiPoly3& p);
Json to_json(const Poly2& p);
Json to_json(const UniPoly& p, const std::string& var = "y");
Json to_json(const Verdict& v);

/// Inverse of to_json for trivariate polynomials. Throws invalid_parameter.
MultiPoly3 poly3_from_json(const Json& j);

/// Human-readable rendering such as "3/2*x^2*y - z + 1".
std::string render(const MultiPoly3& p);
std::string render(const Poly2& p);
std::string render(const UniPoly& p, const std::string& var = "y");

}  // namespace xipoly
