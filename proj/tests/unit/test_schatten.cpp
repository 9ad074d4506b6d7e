#include <doctest.h>

#include <cmath>

#include "polylab/error.hpp"
#include "polylab/polynomial.hpp"
#include "polylab/schatten.hpp"
#include "support.hpp"

using namespace polylab;
using polylab::test::diag2;

namespace {

const TracialAlgebra& m2() {
  static const TracialAlgebra a = TracialAlgebra::matrices(2);
  return a;
}

Element unit(int i, int j) { return Element::matrix_unit(m2(), 0, i, j); }

}  // namespace

TEST_CASE("exponent parsing") {
  CHECK(PExponent::parse("inf").is_infinite());
  CHECK(PExponent::parse("2.5").value() == 2.5);
  CHECK(PExponent::parse("0.5").reciprocal() == 2.0);
  CHECK(PExponent::infinity().reciprocal() == 0.0);
  CHECK_THROWS_AS(PExponent::parse("0"), UsageError);
  CHECK_THROWS_AS(PExponent::parse("-1"), UsageError);
  CHECK_THROWS_AS(PExponent::parse("two"), UsageError);
  CHECK_THROWS_AS(PExponent::parse(""), UsageError);
  CHECK_THROWS_AS(PExponent(std::nan("")), UsageError);
  CHECK(holder_exponent(PExponent(1.0), PExponent(1.0)).value() == doctest::Approx(0.5));
  CHECK(holder_exponent(PExponent(2.0), PExponent::infinity()).value() == doctest::Approx(2.0));
  CHECK(holder_exponent(PExponent::infinity(), PExponent::infinity()).is_infinite());
}

TEST_CASE("schatten norms of closed forms") {
  const Element x = diag2(3.0, 4.0);
  CHECK(norm_p(x, 1.0) == doctest::Approx(7.0));
  CHECK(norm_p(x, 2.0) == doctest::Approx(5.0));
  CHECK(norm_p(x, PExponent::infinity()) == doctest::Approx(4.0));
  CHECK(norm_p(Element::identity(m2()), 0.5) == doctest::Approx(4.0));
  for (double p : {0.5, 1.0, 2.0, 3.0, 7.5}) CHECK(norm_p(unit(0, 1), p) == doctest::Approx(1.0));
  CHECK(norm_p(unit(0, 1), PExponent::infinity()) == doctest::Approx(1.0));
  CHECK(norm_p(Element::zero(m2()), 0.5) == 0.0);

  // Weighted blocks: tau(|x|^p) = sum_k w_k Tr |x_k|^p.
  const TracialAlgebra a({{1, 0.5}, {1, 2.0}});
  const Complex d[] = {2.0, Complex(0.0, -3.0)};
  const Element y = Element::from_diagonal(a, d);
  CHECK(norm_p(y, 1.0) == doctest::Approx(0.5 * 2 + 2.0 * 3));
  CHECK(norm_p(y, 2.0) == doctest::Approx(std::sqrt(0.5 * 4 + 2.0 * 9)));
  CHECK(norm_p(y, PExponent::infinity()) == doctest::Approx(3.0));
}

TEST_CASE("schatten norms agree with an SVD oracle") {
  const TracialAlgebra a({{6, 1.0}, {3, 0.25}, {1, 4.0}});
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Element x = random_element(a, ElementKind::general, s);
    for (double p : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0})
      CHECK(norm_p(x, p) == doctest::Approx(test::svd_norm(x, p)).epsilon(1e-11));
    CHECK(norm_p(x, PExponent::infinity()) ==
          doctest::Approx(test::svd_operator_norm(x)).epsilon(1e-12));
  }
}

TEST_CASE("norm homogeneity and unitary invariance") {
  const TracialAlgebra a({{4, 1.0}, {2, 0.6}});
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Element x = random_element(a, ElementKind::general, derive_seed(s, 1));
    const Element u = random_unitary(a, derive_seed(s, 2));
    const Element v = random_unitary(a, derive_seed(s, 3));
    for (double p : {0.5, 1.0, 3.0}) {
      CHECK(norm_p(Complex(0.0, -2.5) * x, p) == doctest::Approx(2.5 * norm_p(x, p)).epsilon(1e-12));
      CHECK(norm_p(u * x * v, p) == doctest::Approx(norm_p(x, p)).epsilon(1e-11));
    }
  }
}

TEST_CASE("mutual orthogonality") {
  const OrthogonalityCheck a = is_orthogonal(unit(0, 0), unit(1, 1));
  CHECK(a.orthogonal);
  CHECK(a.residual == 0.0);
  CHECK(is_orthogonal(unit(0, 1), unit(1, 0)).orthogonal);
  const OrthogonalityCheck c = is_orthogonal(unit(0, 0), unit(0, 1));
  CHECK_FALSE(c.orthogonal);
  CHECK(c.residual >= 0.25 - 1e-15);
}

TEST_CASE("pythagorean identity") {
  CHECK(pythagoras_residual(unit(0, 0), unit(1, 1), 0.5, 1.0) <= 1e-10);
  CHECK(pythagoras_residual(unit(0, 0), unit(0, 0), 2.0, 1.0) == doctest::Approx(2.0));

  const TracialAlgebra a({{5, 1.0}, {3, 0.4}});
  for (std::uint64_t s = 0; s < 30; ++s) {
    const OrthogonalPair pair = random_orthogonal_pair(a, Cone::positive, s);
    CHECK(is_orthogonal(pair.x, pair.y).orthogonal);
    for (double p : {0.5, 1.0, 3.0}) {
      for (Complex w : {Complex(1.0), Complex(-1.0), Complex(0.0, 1.0)}) {
        const double scale = trace_abs_power(pair.x, p) + trace_abs_power(pair.y, p);
        CHECK(pythagoras_residual(pair.x, pair.y, p, w) <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("hoelder inequality") {
  const HolderCheck eq = holder_check(Element::identity(m2()), Element::identity(m2()),
                                      PExponent(2.0), PExponent(2.0));
  CHECK(eq.lhs == doctest::Approx(2.0));
  CHECK(eq.rhs == doctest::Approx(2.0));
  CHECK(eq.ok);

  const HolderCheck h =
      holder_check(diag2(1.0, 2.0), diag2(3.0, 1.0), PExponent(1.0), PExponent(1.0));
  const double expected = std::pow(std::sqrt(3.0) + std::sqrt(2.0), 2.0);
  CHECK(h.lhs == doctest::Approx(expected));
  CHECK(h.rhs == doctest::Approx(12.0));
  CHECK(h.ok);

  const double grid[] = {0.5, 1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()};
  const TracialAlgebra a({{3, 1.0}, {2, 0.3}});
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Element x = random_element(a, ElementKind::general, derive_seed(s, 1));
    const Element y = random_element(a, ElementKind::general, derive_seed(s, 2));
    for (double p : grid)
      for (double q : grid) CHECK(holder_check(x, y, PExponent(p), PExponent(q)).ok);
  }
}

TEST_CASE("converse pythagoras probe") {
  CHECK_THROWS_AS(converse_pythagoras_probe(unit(0, 0), unit(1, 1), 2.0), UsageError);

  const ConversePythagorasProbe orth = converse_pythagoras_probe(unit(0, 0), unit(1, 1), 1.0);
  CHECK(orth.res_plus <= 1e-15);
  CHECK(orth.res_minus <= 1e-15);
  CHECK(orth.orth_residual == 0.0);
  CHECK(orth.contract_holds());

  const ConversePythagorasProbe same = converse_pythagoras_probe(unit(0, 0), unit(0, 0), 1.0);
  CHECK(same.res_plus <= 1e-15);
  CHECK(same.res_minus == doctest::Approx(2.0));
  CHECK(same.orth_residual > 0.1);
  CHECK(same.contract_holds());
}
