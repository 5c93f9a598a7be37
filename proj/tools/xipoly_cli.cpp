// xipoly: command-line front end for the edge-elimination polynomial engine.
//
// Exit status: 0 on success, 1 if any identity verdict is unequal, 2 on
// usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xipoly/error.hpp"
#include "xipoly/graph.hpp"
#include "xipoly/io.hpp"
#include "xipoly/reductions.hpp"
#include "xipoly/suite.hpp"
#include "xipoly/xi.hpp"

using namespace xipoly;

namespace {

struct InputSpec {
  std::string path;
  std::string family;
  std::optional<std::size_t> size;
};

struct Options {
  InputSpec input;
  std::string poly = "xi";
  std::string format = "text";
  std::string x;
  std::string y;
  std::string z;
  std::string y0;
  std::string weights;
  std::size_t k = 2;
  std::string suite = "all";
  std::size_t trials = 10;
  std::uint64_t seed = kDefaultSeed;
  oracles::OracleCaps caps;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--input,-i", in.path, "graph file in edge-list format ('-' for stdin)");
  cmd->add_option("--family", in.family, "generated family: path, cycle, complete, star, bouquet, edgeless");
  cmd->add_option("--size", in.size, "size parameter of the generated family");
}

Multigraph load_graph(const InputSpec& in) {
  const bool has_path = !in.path.empty();
  const bool has_family = !in.family.empty();
  if (has_path == has_family) throw UsageError("give exactly one of --input or --family");
  if (has_family) {
    if (!in.size) throw UsageError("--family needs --size");
    return generate_family(in.family, *in.size);
  }
  std::stringstream buf;
  if (in.path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(in.path);
    if (!f) throw UsageError("cannot open graph file '" + in.path + "'");
    buf << f.rdbuf();
  }
  try {
    return parse_graph(buf.str());
  } catch (const parse_error& e) {
    throw UsageError(in.path + ": " + e.what());
  }
}

Rational require_rational(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  try {
    return Rational::parse(text);
  } catch (const invalid_parameter& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void check_format(const std::string& f) {
  if (f != "text" && f != "json") throw UsageError("--format must be text or json");
}

void apply_env_caps(oracles::OracleCaps& caps) {
  auto read = [](const char* name, std::size_t& slot) {
    if (const char* v = std::getenv(name)) {
      try {
        std::size_t pos = 0;
        const unsigned long value = std::stoul(v, &pos);
        if (pos != std::string(v).size()) throw std::invalid_argument(name);
        slot = value;
      } catch (const std::exception&) {
        throw UsageError(std::string(name) + " must be a non-negative integer");
      }
    }
  };
  read("XIPOLY_MAX_COLORS", caps.max_colors);
  read("XIPOLY_MAX_VERTICES", caps.max_vertices);
  read("XIPOLY_MAX_EDGES", caps.max_edges);
}

int cmd_compute(const Options& o) {
  check_format(o.format);
  const Multigraph g = load_graph(o.input);
  const bool json = o.format == "json";
  if (o.poly == "xi" || o.poly == "psi") {
    const MultiPoly3 p = o.poly == "xi" ? xi_polynomial(g) : psi_polynomial(g);
    std::cout << (json ? to_json(p).dump() : render(p)) << '\n';
  } else if (o.poly == "bivariate" || o.poly == "potts") {
    const Poly2 p = o.poly == "bivariate" ? bivariate_chromatic(g) : potts_slice(g);
    std::cout << (json ? to_json(p).dump() : render(p)) << '\n';
  } else if (o.poly == "chromatic") {
    const UniPoly p = chromatic_polynomial(g);
    std::cout << (json ? to_json(p).dump() : render(p)) << '\n';
  } else {
    throw UsageError("--poly must be xi, psi, bivariate, chromatic or potts");
  }
  return 0;
}

int cmd_eval(const Options& o) {
  const Multigraph g = load_graph(o.input);
  Rational value;
  if (o.poly == "xi") {
    value = xi_eval(g, require_rational(o.x, "--x"), require_rational(o.y, "--y"), require_rational(o.z, "--z"));
  } else if (o.poly == "psi") {
    const Rational x = require_rational(o.x, "--x");
    const Rational z = require_rational(o.z, "--z");
    if (!o.weights.empty()) {
      if (!o.y.empty()) throw UsageError("give either --y or --weights, not both");
      std::vector<Rational> w;
      std::stringstream ss(o.weights);
      for (std::string item; std::getline(ss, item, ',');) w.push_back(require_rational(item, "--weights"));
      const EdgeWeights weights(std::move(w));
      if (weights.size() != g.edge_count()) {
        throw UsageError("--weights: got " + std::to_string(weights.size()) + " values for " +
                         std::to_string(g.edge_count()) + " edges");
      }
      value = psi_eval(g, x, weights, z);
    } else {
      value = psi_eval(g, x, require_rational(o.y, "--y"), z);
    }
  } else if (o.poly == "bivariate") {
    value = bivariate_chromatic(g).evaluate({require_rational(o.x, "--x"), require_rational(o.y, "--y")});
  } else if (o.poly == "potts") {
    value = potts_slice(g).evaluate({require_rational(o.x, "--x"), require_rational(o.y, "--y")});
  } else if (o.poly == "chromatic") {
    value = chromatic_polynomial(g).evaluate(require_rational(o.y, "--y"));
  } else {
    throw UsageError("--poly must be xi, psi, bivariate, chromatic or potts");
  }
  std::cout << value << '\n';
  return 0;
}

int cmd_graph_transform(const Options& o, const std::string& which) {
  const Multigraph g = load_graph(o.input);
  if (which == "thicken") {
    if (o.k == 0) throw UsageError("--k must be at least 1");
    std::cout << serialize_graph(thicken(g, o.k));
  } else if (which == "cone") {
    std::cout << serialize_graph(cone(g));
  } else {
    std::cout << serialize_graph(g);
  }
  return 0;
}

int cmd_verify(const Options& o) {
  check_format(o.format);
  const Multigraph g = load_graph(o.input);
  SuiteOptions opts;
  opts.trials = o.trials;
  opts.seed = o.seed;
  opts.caps = o.caps;
  Suite suite;
  try {
    suite = parse_suite(o.suite);
  } catch (const invalid_parameter& e) {
    throw UsageError(e.what());
  }
  const auto verdicts = run_suite(g, suite, opts);
  std::size_t unequal = 0;
  for (const auto& v : verdicts) {
    if (!v.equal) ++unequal;
    if (o.format == "json") {
      std::cout << to_json(v).dump() << '\n';
    } else {
      std::cout << (v.equal ? "equal   " : "UNEQUAL ") << v.identity << " lhs=" << v.lhs << " rhs=" << v.rhs;
      for (const auto& [k, val] : v.params) std::cout << ' ' << k << '=' << val;
      std::cout << '\n';
    }
  }
  std::cerr << verdicts.size() << " verdicts, " << unequal << " unequal\n";
  return unequal == 0 ? 0 : 1;
}

int cmd_reduce(const Options& o) {
  check_format(o.format);
  const Multigraph g = load_graph(o.input);
  const Rational x = require_rational(o.x, "--x");
  const Rational y = require_rational(o.y, "--y");
  const Rational y0 = require_rational(o.y0, "--y0");
  const PipelineResult r = hardness_pipeline(g, x, y, y0);

  Json trace;
  trace["x"] = x.to_string();
  trace["y"] = y.to_string();
  trace["y0"] = y0.to_string();
  trace["oracle_point"] = Json::array({x.to_string(), y0.to_string(), r.oracle_z.to_string()});
  trace["queries"] = Json::array();
  for (const auto& q : r.restriction.queries) {
    trace["queries"].push_back({{"k", q.k}, {"node", q.node.to_string()}, {"value", q.value.to_string()}});
  }
  trace["coefficients"] = Json::array();
  for (const auto& c : r.restriction.polynomial.coefficients()) trace["coefficients"].push_back(c.to_string());
  trace["value"] = r.value.to_string();

  if (o.format == "json") {
    std::cout << trace.dump() << '\n';
  } else {
    std::cout << r.value << '\n' << trace.dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation of the edge-elimination polynomial xi and its companion psi"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "print xi, psi, bivariate, chromatic or potts polynomial");
  add_input_options(compute, o.input);
  compute->add_option("--poly", o.poly, "xi | psi | bivariate | chromatic | potts");
  compute->add_option("--format", o.format, "text | json");

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial at an exact rational point");
  add_input_options(eval, o.input);
  eval->add_option("--poly", o.poly, "xi | psi | bivariate | chromatic | potts");
  eval->add_option("--x", o.x, "x as an integer or p/q");
  eval->add_option("--y", o.y, "y as an integer or p/q");
  eval->add_option("--z", o.z, "z as an integer or p/q");
  eval->add_option("--weights", o.weights, "psi only: comma-separated per-edge y weights");

  auto* thick = app.add_subcommand("thicken", "replace every edge by k parallel copies");
  add_input_options(thick, o.input);
  thick->add_option("--k", o.k, "number of copies");

  auto* cone_cmd = app.add_subcommand("cone", "add an apex vertex joined to every vertex");
  add_input_options(cone_cmd, o.input);

  auto* family = app.add_subcommand("family", "print a generated graph in edge-list format");
  add_input_options(family, o.input);

  auto* verify = app.add_subcommand("verify", "check the identities at seeded random points");
  add_input_options(verify, o.input);
  verify->add_option("--suite", o.suite, "psi-xi | doubling | thickening | cone | specialization | pipeline | all");
  verify->add_option("--trials", o.trials, "random points per check");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--format", o.format, "text | json (one verdict per line)");
  verify->add_option("--max-colors", o.caps.max_colors, "coloring oracle cap (env XIPOLY_MAX_COLORS)");
  verify->add_option("--max-vertices", o.caps.max_vertices, "oracle vertex cap (env XIPOLY_MAX_VERTICES)");
  verify->add_option("--max-edges", o.caps.max_edges, "oracle edge cap (env XIPOLY_MAX_EDGES)");

  auto* reduce = app.add_subcommand("reduce", "evaluate P(G;x,y) through psi-oracle interpolation");
  add_input_options(reduce, o.input);
  reduce->add_option("--x", o.x, "x (nonzero)");
  reduce->add_option("--y", o.y, "y");
  reduce->add_option("--y0", o.y0, "oracle y-coordinate, not -2, -1 or 0");
  reduce->add_option("--format", o.format, "text | json");

  try {
    // flags override the environment
    apply_env_caps(o.caps);
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "xipoly: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "xipoly: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*compute) return cmd_compute(o);
    if (*eval) return cmd_eval(o);
    if (*thick) return cmd_graph_transform(o, "thicken");
    if (*cone_cmd) return cmd_graph_transform(o, "cone");
    if (*family) return cmd_graph_transform(o, "family");
    if (*verify) return cmd_verify(o);
    if (*reduce) return cmd_reduce(o);
  } catch (const UsageError& e) {
    std::cerr << "xipoly: " << e.what() << "\n";
    return 2;
  } catch (const xipoly::error& e) {
    std::cerr << "xipoly: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
