#include <doctest.h>

#include "polylab/error.hpp"
#include "polylab/io.hpp"
#include "support.hpp"

using namespace polylab;
using io::Json;
using polylab::test::fixture;

TEST_CASE("complex encoding") {
  CHECK(io::complex_to_json(Complex(1.5, -2.0)).dump() == "[1.5,-2.0]");
  CHECK(io::complex_to_json(Complex(-0.0, -0.0)).dump() == "[0.0,0.0]");
  CHECK(io::complex_from_json(Json::parse("[3, 4]")) == Complex(3.0, 4.0));
  CHECK_THROWS_AS(io::complex_from_json(Json::parse("3")), InputError);
  CHECK_THROWS_AS(io::complex_from_json(Json::parse("[1, 2, 3]")), InputError);
  CHECK_THROWS_AS(io::complex_from_json(Json::parse("[\"a\", 2]")), InputError);
}

TEST_CASE("algebra round trip") {
  const TracialAlgebra a({{3, 1.5}, {1, 0.25}});
  CHECK(io::algebra_from_json(io::to_json(a)) == a);
  CHECK(io::algebra_from_json(Json::parse(R"({"algebra":{"blocks":[{"dim":2,"weight":1}]}})")) ==
        TracialAlgebra::matrices(2));
  CHECK_THROWS_AS(io::algebra_from_json(Json::parse(R"({"blocks":[{"dim":0,"weight":1}]})")), InputError);
  CHECK_THROWS_AS(io::algebra_from_json(Json::parse(R"({"blocks":[{"dim":2}]})")), InputError);
  CHECK_THROWS_AS(io::algebra_from_json(Json::parse(R"({"blocks":[{"dim":2.5,"weight":1}]})")), InputError);
  CHECK_THROWS_AS(io::algebra_from_json(Json::parse("[]")), InputError);
}

TEST_CASE("element round trip is exact") {
  const TracialAlgebra a({{3, 1.0}, {2, 0.5}});
  const Element x = random_element(a, ElementKind::general, 3);
  const Json j = io::to_json(x);
  CHECK(io::element_from_json(j) == x);
  CHECK(io::element_from_json(Json::parse(j.dump())) == x);
}

TEST_CASE("element shape errors") {
  CHECK_THROWS_AS(io::element_from_json(Json::parse(
                      R"({"algebra":{"blocks":[{"dim":2,"weight":1}]},"blocks":[[[[1,0],[0,0]]]]})")),
                  InputError);
  CHECK_THROWS_AS(io::element_from_json(Json::parse(
                      R"({"algebra":{"blocks":[{"dim":1,"weight":1}]},"blocks":[]})")),
                  InputError);
  CHECK_THROWS_AS(io::element_from_json(Json::parse(R"({"blocks":[]})")), InputError);
}

TEST_CASE("polynomial round trip") {
  const TracialAlgebra a({{2, 1.0}, {1, 3.0}});
  const std::vector<Element> zetas = {random_element(a, ElementKind::general, 1),
                                      random_element(a, ElementKind::general, 2)};
  const HomPolynomial p = HomPolynomial::from_zeta(zetas, 3, 0.5);
  const HomPolynomial back = io::polynomial_from_json(Json::parse(io::to_json(p).dump()));
  CHECK(back.degree() == 3);
  CHECK(back.codomain() == p.codomain());
  const Element x = random_element(a, ElementKind::general, 4);
  CHECK((back.evaluate(x) - p.evaluate(x)).cwiseAbs().maxCoeff() == 0.0);

  const Json zero = Json::parse(R"({"m":2,"monomials":[]})");
  CHECK_THROWS_AS(io::polynomial_from_json(zero), InputError);
  CHECK(io::polynomial_from_json(zero, a).monomials().empty());
  CHECK_THROWS_AS(io::polynomial_from_json(io::to_json(p), TracialAlgebra::matrices(2)), InputError);
  CHECK_THROWS_AS(io::polynomial_from_json(Json::parse(R"({"m":1,"monomials":[]})"), a), InputError);
}

TEST_CASE("fixture files") {
  const Element d = io::element_from_json(io::read_json_file(fixture("diag34.json")));
  CHECK(d.block(0)(1, 1) == Complex(4.0));
  CHECK_THROWS_AS(io::read_json_file(fixture("malformed.json")), InputError);
  CHECK_THROWS_AS(io::read_json_file(fixture("does_not_exist.json")), InputError);
  const HomPolynomial p = io::polynomial_from_json(io::read_json_file(fixture("pzeta_m2.json")));
  CHECK(p.degree() == 2);
}

TEST_CASE("report serialization keeps key order") {
  OAReport r;
  r.cone = Cone::positive;
  r.n_samples = 3;
  r.tol = 1e-9;
  r.max_residual = 0.5;
  r.worst_sample = 2;
  CHECK(io::to_json(r).dump() ==
        R"({"cone":"positive","n_samples":3,"tol":1e-09,"max_residual":0.5,"worst_sample":2,"passed":false})");

  ZeroCertificate z;
  z.vanishes_on_positives = false;
  CHECK(io::to_json(z).dump() ==
        R"({"vanishes_on_positives":false,"vanishes_globally":null,"worst_positive":0.0,"worst_general":0.0})");
}
