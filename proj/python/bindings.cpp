// Python bindings. Rationals cross the boundary as fractions.Fraction; int,
// Fraction and "p/q" strings are accepted on input.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "xipoly/error.hpp"
#include "xipoly/graph.hpp"
#include "xipoly/io.hpp"
#include "xipoly/reductions.hpp"
#include "xipoly/suite.hpp"
#include "xipoly/xi.hpp"

namespace py = pybind11;
using namespace xipoly;

namespace {

Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::bool_>(obj) || py::isinstance<py::float_>(obj)) {
    throw invalid_parameter("expected int, Fraction or 'p/q' string, got " +
                            std::string(py::str(obj.get_type().attr("__name__"))));
  }
  return Rational::parse(std::string(py::str(obj)));
}

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.numerator_string())), py::int_(py::str(r.denominator_string())));
}

template <std::size_t N>
py::dict to_dict(const SparsePoly<N>& p) {
  py::dict out;
  for (const auto& [exp, coef] : p.terms()) {
    py::tuple key(N);
    for (std::size_t i = 0; i < N; ++i) key[i] = exp[i];
    out[key] = to_fraction(coef);
  }
  return out;
}

py::dict to_dict(const Verdict& v) {
  py::dict params;
  for (const auto& [k, val] : v.params) params[py::str(k)] = val;
  py::dict out;
  out["identity"] = v.identity;
  out["lhs"] = to_fraction(v.lhs);
  out["rhs"] = to_fraction(v.rhs);
  out["equal"] = v.equal;
  out["params"] = params;
  return out;
}

oracles::OracleCaps caps_from(std::size_t colors, std::size_t vertices, std::size_t edges) {
  return {colors, vertices, edges};
}

}  // namespace

PYBIND11_MODULE(_xipoly, m) {
  m.doc() = "Exact edge-elimination polynomial engine";

  static py::exception<error> exc(m, "XipolyError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const error& e) {
      exc(e.what());
    }
  });

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
             std::vector<Edge> es;
             es.reserve(edges.size());
             for (const auto& [u, v] : edges) es.push_back({u, v});
             return Multigraph(n, std::move(es));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<std::size_t, std::size_t>>{})
      .def_property_readonly("vertex_count", &Multigraph::vertex_count)
      .def_property_readonly("edge_count", &Multigraph::edge_count)
      .def_property_readonly("edges",
                             [](const Multigraph& g) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
      .def("__repr__", [](const Multigraph& g) {
        return "Multigraph(" + std::to_string(g.vertex_count()) + ", " + std::to_string(g.edge_count()) +
               " edges)";
      });

  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("serialize_graph", &serialize_graph, py::arg("graph"));
  m.def("generate_family", [](const std::string& name, std::size_t n) { return generate_family(name, n); },
        py::arg("name"), py::arg("n"));
  m.def("family_names", &family_names);
  m.def("thicken", &thicken, py::arg("graph"), py::arg("k"));
  m.def("cone", &cone, py::arg("graph"));
  m.def("disjoint_union", &disjoint_union, py::arg("g"), py::arg("h"));

  m.def("xi_polynomial", [](const Multigraph& g) { return to_dict(xi_polynomial(g)); }, py::arg("graph"),
        "xi as {(a, b, c): coefficient} for x^a y^b z^c");
  m.def("psi_polynomial", [](const Multigraph& g) { return to_dict(psi_polynomial(g)); }, py::arg("graph"));
  m.def("bivariate_chromatic", [](const Multigraph& g) { return to_dict(bivariate_chromatic(g)); },
        py::arg("graph"), "P(G; x, y) as {(a, b): coefficient}");
  m.def("render_xi", [](const Multigraph& g) { return render(xi_polynomial(g)); }, py::arg("graph"));
  m.def("xi_json", [](const Multigraph& g) { return to_json(xi_polynomial(g)).dump(); }, py::arg("graph"));

  m.def(
      "xi_eval",
      [](const Multigraph& g, py::handle x, py::handle y, py::handle z) {
        return to_fraction(xi_eval(g, to_rational(x), to_rational(y), to_rational(z)));
      },
      py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("z"));
  m.def(
      "psi_eval",
      [](const Multigraph& g, py::handle x, py::handle y, py::handle z) {
        const Rational rx = to_rational(x), rz = to_rational(z);
        if (py::isinstance<py::list>(y) || py::isinstance<py::tuple>(y)) {
          std::vector<Rational> w;
          for (const auto& item : y) w.push_back(to_rational(item));
          return to_fraction(psi_eval(g, rx, EdgeWeights(std::move(w)), rz));
        }
        return to_fraction(psi_eval(g, rx, to_rational(y), rz));
      },
      py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("z"),
      "y may be a single value or a per-edge sequence of weights");

  m.def(
      "hardness_pipeline",
      [](const Multigraph& g, py::handle x, py::handle y, py::handle y0) {
        const PipelineResult r = hardness_pipeline(g, to_rational(x), to_rational(y), to_rational(y0));
        py::list queries;
        for (const auto& q : r.restriction.queries) {
          queries.append(py::make_tuple(q.k, to_fraction(q.node), to_fraction(q.value)));
        }
        py::list coefficients;
        for (const auto& c : r.restriction.polynomial.coefficients()) coefficients.append(to_fraction(c));
        py::dict out;
        out["value"] = to_fraction(r.value);
        out["oracle_z"] = to_fraction(r.oracle_z);
        out["queries"] = queries;
        out["coefficients"] = coefficients;
        return out;
      },
      py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("y0"));

  m.def(
      "run_suite",
      [](const Multigraph& g, const std::string& suite, std::size_t trials, std::uint64_t seed,
         std::size_t max_colors, std::size_t max_vertices, std::size_t max_edges) {
        SuiteOptions opts;
        opts.trials = trials;
        opts.seed = seed;
        opts.caps = caps_from(max_colors, max_vertices, max_edges);
        py::list out;
        for (const auto& v : run_suite(g, parse_suite(suite), opts)) out.append(to_dict(v));
        return out;
      },
      py::arg("graph"), py::arg("suite") = "all", py::arg("trials") = 10, py::arg("seed") = kDefaultSeed,
      py::arg("max_colors") = oracles::OracleCaps{}.max_colors,
      py::arg("max_vertices") = oracles::OracleCaps{}.max_vertices,
      py::arg("max_edges") = oracles::OracleCaps{}.max_edges);

  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
