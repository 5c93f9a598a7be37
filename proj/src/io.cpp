#include "xipoly/io.hpp"

#include <span>
#include <vector>

#include "xipoly/error.hpp"

namespace xipoly {

namespace {

constexpr std::array<const char*, 3> kNames3 = {"x", "y", "z"};
constexpr std::array<const char*, 2> kNames2 = {"x", "y"};

template <std::size_t N>
Json poly_json(const SparsePoly<N>& p, const std::array<const char*, N>& names) {
  Json j;
  j["vars"] = Json::array();
  for (const char* n : names) j["vars"].push_back(n);
  j["terms"] = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["coef"] = c.to_string();
    t["exp"] = Json::array();
    for (auto v : e) t["exp"].push_back(v);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

std::string monomial_text(std::span<const std::uint32_t> exps, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exps[i] != 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

// Terms arrive highest first; each is (coefficient, exponent vector).
template <class Terms>
std::string render_terms(const Terms& terms, std::span<const std::string> names) {
  std::string out;
  for (const auto& [exps, coef] : terms) {
    const bool negative = coef.sign() < 0;
    const Rational mag = negative ? -coef : coef;
    const std::string mono = monomial_text(exps, names);
    std::string body;
    if (mono.empty()) {
      body = mag.to_string();
    } else if (mag == Rational(1)) {
      body = mono;
    } else {
      body = mag.to_string() + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

template <std::size_t N>
std::string render_sparse(const SparsePoly<N>& p, const std::array<const char*, N>& raw_names) {
  std::vector<std::string> names(raw_names.begin(), raw_names.end());
  std::vector<std::pair<std::vector<std::uint32_t>, Rational>> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(std::vector<std::uint32_t>(e.begin(), e.end()), c);
  return render_terms(terms, names);
}

}  // namespace

Json to_json(const MultiPoly3& p) { return poly_json(p, kNames3); }

Json to_json(const Poly2& p) { return poly_json(p, kNames2); }

Json to_json(const UniPoly& p, const std::string& var) {
  Json j;
  j["vars"] = Json::array({var});
  j["terms"] = Json::array();
  const auto& c = p.coefficients();
  for (std::size_t d = c.size(); d > 0; --d) {
    if (c[d - 1].is_zero()) continue;
    j["terms"].push_back({{"coef", c[d - 1].to_string()}, {"exp", Json::array({d - 1})}});
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["identity"] = v.identity;
  j["lhs"] = v.lhs.to_string();
  j["rhs"] = v.rhs.to_string();
  j["equal"] = v.equal;
  Json params = Json::object();
  for (const auto& [k, val] : v.params) params[k] = val;
  j["params"] = std::move(params);
  return j;
}

MultiPoly3 poly3_from_json(const Json& j) {
  try {
    if (j.at("vars") != Json::array({"x", "y", "z"})) {
      throw invalid_parameter("polynomial JSON: expected vars [\"x\",\"y\",\"z\"]");
    }
    MultiPoly3 p;
    for (const auto& t : j.at("terms")) {
      const auto& e = t.at("exp");
      if (!e.is_array() || e.size() != 3) throw invalid_parameter("polynomial JSON: exp must have 3 entries");
      p.add_term({e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>(), e[2].get<std::uint32_t>()},
                 Rational::parse(t.at("coef").get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw invalid_parameter(std::string("polynomial JSON: ") + ex.what());
  }
}

std::string render(const MultiPoly3& p) { return render_sparse(p, kNames3); }

std::string render(const Poly2& p) { return render_sparse(p, kNames2); }

std::string render(const UniPoly& p, const std::string& var) {
  const std::vector<std::string> names = {var};
  std::vector<std::pair<std::vector<std::uint32_t>, Rational>> terms;
  const auto& c = p.coefficients();
  for (std::size_t d = c.size(); d > 0; --d) {
    if (!c[d - 1].is_zero()) terms.emplace_back(std::vector<std::uint32_t>{static_cast<std::uint32_t>(d - 1)}, c[d - 1]);
  }
  return render_terms(terms, names);
}

}  // namespace xipoly
