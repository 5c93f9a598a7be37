#include "doctest.h"

#include "support/fixtures.hpp"
#include "xipoly/error.hpp"
#include "xipoly/io.hpp"
#include "xipoly/random.hpp"
#include "xipoly/xi.hpp"

using namespace xipoly;
using namespace fixtures;

TEST_CASE("text rendering") {
  CHECK(render(xi_polynomial(path3())) == "x^3 + 2*x^2*y + x*y^2 + 2*x*z + y*z");
  CHECK(render(xi_polynomial(k2())) == "x^2 + x*y + z");
  CHECK(render(MultiPoly3()) == "0");
  CHECK(render(bivariate_chromatic(k2())) == "x^2 - y");
  CHECK(render(chromatic_polynomial(k2())) == "y^2 - y");
  MultiPoly3 p;
  p.add_term({2, 1, 0}, Rational(3, 2));
  p.add_term({0, 0, 1}, Rational(-1));
  p.add_term({0, 0, 0}, Rational(-7, 3));
  CHECK(render(p) == "3/2*x^2*y - z - 7/3");
  CHECK(render(-p) == "-3/2*x^2*y + z + 7/3");
}

TEST_CASE("polynomial JSON schema") {
  const Json j = to_json(xi_polynomial(k2()));
  CHECK(j.dump() ==
        R"({"vars":["x","y","z"],"terms":[{"coef":"1","exp":[2,0,0]},{"coef":"1","exp":[1,1,0]},{"coef":"1","exp":[0,0,1]}]})");
  CHECK(to_json(bivariate_chromatic(k2())).dump() ==
        R"({"vars":["x","y"],"terms":[{"coef":"1","exp":[2,0]},{"coef":"-1","exp":[0,1]}]})");

  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly3 q = xi_polynomial(random_multigraph(rng, 0, 4, 5));
    CHECK(poly3_from_json(Json::parse(to_json(q).dump())) == q);
  }
  CHECK_THROWS_AS(poly3_from_json(Json::parse(R"({"vars":["x","y"],"terms":[]})")), invalid_parameter);
  CHECK_THROWS_AS(poly3_from_json(Json::parse(R"({"vars":["x","y","z"],"terms":[{"coef":"1.5","exp":[0,0,0]}]})")),
                  invalid_parameter);
  CHECK_THROWS_AS(poly3_from_json(Json::parse(R"({"vars":["x","y","z"]})")), invalid_parameter);
}

TEST_CASE("verdict JSON") {
  const Verdict v = make_verdict("demo", Rational(1, 2), Rational(1, 2), {{"k", "2"}, {"x", "-3/4"}});
  CHECK(to_json(v).dump() ==
        R"({"identity":"demo","lhs":"1/2","rhs":"1/2","equal":true,"params":{"k":"2","x":"-3/4"}})");
}
