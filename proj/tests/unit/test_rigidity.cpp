#include <doctest.h>

#include "polylab/rigidity.hpp"
#include "polylab/schatten.hpp"
#include "support.hpp"

using namespace polylab;
using polylab::test::max_diff;

namespace {

const TracialAlgebra& m2() {
  static const TracialAlgebra a = TracialAlgebra::matrices(2);
  return a;
}

Element unit(int i, int j) { return Element::matrix_unit(m2(), 0, i, j); }

HomPolynomial scalar(const TracialAlgebra& a, int m, std::vector<TraceMonomial> monos) {
  return HomPolynomial(m, QNormedCodomain(1, 1.0), a, std::move(monos));
}

HomPolynomial trace_square(const TracialAlgebra& a) {
  const Element one = Element::identity(a);
  return scalar(a, 2, {TraceMonomial{1.0, 0, {one, one}}});
}

}  // namespace

TEST_CASE("tau(x^2) on M2 fails on the first nilpotent pair") {
  const auto w = full_oa_counterexample(trace_square(m2()));
  REQUIRE(w.has_value());
  CHECK(w->gadget == Gadget::nilpotent_pair);
  CHECK(w->gadget_index == 0);
  CHECK(w->x == unit(0, 1));
  CHECK(w->y == unit(1, 0));
  CHECK(w->residual == doctest::Approx(2.0));
  CHECK(w->orth_residual == 0.0);
  CHECK(to_string(w->gadget) == "nilpotent-pair");
  CHECK(to_string(Gadget::unitary_rotation) == "unitary-rotation");
}

TEST_CASE("no witness for zero or commutative P_zeta") {
  CHECK_FALSE(full_oa_counterexample(scalar(m2(), 3, {})).has_value());
  const TracialAlgebra c3({{1, 1.0}, {1, 0.5}, {1, 2.0}});
  for (int m = 2; m <= 4; ++m) {
    const Element zeta = random_element(c3, ElementKind::general, static_cast<std::uint64_t>(m));
    CHECK_FALSE(full_oa_counterexample(HomPolynomial::from_zeta(zeta, m)).has_value());
  }
}

TEST_CASE("witnesses for nonzero P_zeta on M2+M3") {
  const TracialAlgebra a({{2, 1.0}, {3, 1.0}});
  for (int m = 2; m <= 4; ++m) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Element zeta = random_element(a, s % 2 ? ElementKind::hermitian : ElementKind::general,
                                          derive_seed(s, m));
      const auto w = full_oa_counterexample(HomPolynomial::from_zeta(zeta, m));
      REQUIRE(w.has_value());
      CHECK(w->residual >= 1e-6);
      CHECK(is_orthogonal(w->x, w->y).orthogonal);
      CHECK(w->residual == doctest::Approx(oa_residual(HomPolynomial::from_zeta(zeta, m), w->x, w->y)));
    }
  }
}

TEST_CASE("zeta supported on the identity direction still fails through rotations") {
  // zeta = 1 makes P(x) = tau(x^m); the plain nilpotent pair works for m = 2 only.
  const TracialAlgebra a = TracialAlgebra::matrices(3);
  for (int m = 2; m <= 4; ++m) {
    const auto w = full_oa_counterexample(HomPolynomial::from_zeta(Element::identity(a), m));
    REQUIRE(w.has_value());
    CHECK(w->residual > 1e-6);
  }
}

TEST_CASE("witness search is deterministic") {
  const TracialAlgebra a({{2, 1.0}, {3, 0.5}});
  const Element zeta = random_element(a, ElementKind::general, 77);
  const auto w1 = full_oa_counterexample(HomPolynomial::from_zeta(zeta, 3));
  const auto w2 = full_oa_counterexample(HomPolynomial::from_zeta(zeta, 3));
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK(w1->gadget_index == w2->gadget_index);
  CHECK(w1->residual == w2->residual);
  CHECK(max_diff(w1->x, w2->x) == 0.0);
}

TEST_CASE("projection vanishing probe") {
  CHECK(projection_vanishing_probe(scalar(m2(), 2, {}), 20, 1) == 0.0);
  const HomPolynomial sq = trace_square(m2());
  CHECK(std::abs(sq.evaluate(unit(0, 0))(0)) == doctest::Approx(1.0));
  CHECK(projection_vanishing_probe(sq, 20, 1) >= 1.0 - 1e-12);
  CHECK(projection_vanishing_probe(scalar(TracialAlgebra({{2, 1.0}, {3, 1.0}}), 3, {}), 20, 1) <= 1e-6);
}

TEST_CASE("zero certificate") {
  const ZeroCertificate zero = zero_certificate(scalar(m2(), 2, {}), 10, 1);
  CHECK(zero.vanishes_on_positives);
  REQUIRE(zero.vanishes_globally.has_value());
  CHECK(*zero.vanishes_globally);

  const HomPolynomial e11e22 = scalar(m2(), 2, {TraceMonomial{1.0, 0, {unit(0, 0), unit(1, 1)}}});
  const Element ones = unit(0, 0) + unit(0, 1) + unit(1, 0) + unit(1, 1);
  CHECK(e11e22.evaluate(ones)(0) == Complex(1.0));
  const ZeroCertificate nz = zero_certificate(e11e22, 10, 1);
  CHECK_FALSE(nz.vanishes_on_positives);
  CHECK_FALSE(nz.vanishes_globally.has_value());

  const Element one = Element::identity(m2());
  const HomPolynomial cancel =
      scalar(m2(), 2, {TraceMonomial{1.0, 0, {one, one}}, TraceMonomial{-1.0, 0, {one, one}}});
  const ZeroCertificate c = zero_certificate(cancel, 10, 1);
  CHECK(c.vanishes_on_positives);
  REQUIRE(c.vanishes_globally.has_value());
  CHECK(*c.vanishes_globally);
}
