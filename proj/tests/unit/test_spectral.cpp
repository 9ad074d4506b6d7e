#include <doctest.h>

#include <algorithm>

#include "polylab/error.hpp"
#include "polylab/spectral.hpp"
#include "support.hpp"

using namespace polylab;
using polylab::test::diag2;
using polylab::test::max_diff;
using polylab::test::single_block;

TEST_CASE("jacobi eigenvalues on small closed forms") {
  SUBCASE("already diagonal") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 5.0;
    const HermitianEigen e = jacobi_eigen(a);
    CHECK(e.values(0) == doctest::Approx(1.0));
    CHECK(e.values(1) == doctest::Approx(5.0));
    CHECK((e.vectors - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("swap matrix") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 1) = a(1, 0) = 1.0;
    const HermitianEigen e = jacobi_eigen(a);
    CHECK(e.values(0) == doctest::Approx(-1.0));
    CHECK(e.values(1) == doctest::Approx(1.0));
  }
  SUBCASE("1x1 and zero") {
    Matrix a = Matrix::Constant(1, 1, Complex(-2.5, 0.0));
    CHECK(jacobi_eigen(a).values(0) == -2.5);
    const HermitianEigen z = jacobi_eigen(Matrix::Zero(3, 3));
    CHECK(z.values.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("jacobi matches Eigen's solver on random hermitians") {
  for (int n = 1; n <= 12; ++n) {
    const TracialAlgebra a = TracialAlgebra::matrices(n);
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Matrix h = random_element(a, ElementKind::hermitian, derive_seed(n, s)).block(0);
      const HermitianEigen mine = jacobi_eigen(h);
      Eigen::SelfAdjointEigenSolver<Matrix> oracle(h);
      const double scale = std::max(1.0, h.norm());
      CHECK((mine.values - oracle.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12 * scale);
      const Matrix v = mine.vectors;
      CHECK((v.adjoint() * v - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((v * mine.values.cast<Complex>().asDiagonal() * v.adjoint() - h).cwiseAbs().maxCoeff() <=
            1e-12 * scale);
    }
  }
}

TEST_CASE("jacobi handles repeated eigenvalues") {
  const TracialAlgebra a = TracialAlgebra::matrices(6);
  const Element u = random_unitary(a, 5);
  const Complex d[] = {2.0, 2.0, 2.0, -1.0, -1.0, 0.0};
  const Element x = u * Element::from_diagonal(a, d) * u.adjoint();
  const SpectralData s = eig_hermitian(x);
  const std::vector<double> expected = {-1.0, -1.0, 0.0, 2.0, 2.0, 2.0};
  for (std::size_t i = 0; i < 6; ++i) CHECK(s.eigenvalues[0][i] == doctest::Approx(expected[i]));
  CHECK(max_diff(s.reconstruct(), x) <= 1e-12);
  CHECK(spectral_resolution(x).size() == 3);
}

TEST_CASE("eig_hermitian rejects non-hermitian input") {
  const Element x = Element::matrix_unit(TracialAlgebra::matrices(2), 0, 0, 1);
  CHECK_THROWS_AS(eig_hermitian(x), PreconditionError);
}

TEST_CASE("reconstruction on M8 stays within tolerance") {
  const TracialAlgebra a({{8, 1.0}, {4, 0.5}, {1, 3.0}});
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Element x = random_element(a, ElementKind::hermitian, s);
    const SpectralData sd = eig_hermitian(x);
    CHECK(max_diff(sd.reconstruct(), x) <= 1e-10 * operator_norm(x));
  }
}

TEST_CASE("functional calculus closed forms") {
  const Element r = functional_calculus(diag2(4.0, 9.0), SpectralMap::power(0.5));
  CHECK(max_diff(r, diag2(2.0, 3.0)) <= 1e-14);
  CHECK(max_diff(functional_calculus(diag2(1.0, -1.0), SpectralMap::absolute()),
                 diag2(1.0, 1.0)) <= 1e-15);
  CHECK(max_diff(functional_calculus(diag2(3.0, -2.0), SpectralMap::positive_part()),
                 diag2(3.0, 0.0)) <= 1e-15);
  CHECK(max_diff(functional_calculus(diag2(4.0, -9.0), SpectralMap::signed_power(0.5)),
                 diag2(2.0, -3.0)) <= 1e-14);
  CHECK(max_diff(functional_calculus(diag2(0.5, 2.0), SpectralMap::indicator(2.0)),
                 diag2(0.0, 1.0)) <= 1e-15);
  CHECK(functional_calculus(diag2(0.5, 2.0), SpectralMap::indicator(1.0)).max_abs_entry() == 0.0);
  CHECK(max_diff(functional_calculus(diag2(2.0, 3.0), SpectralMap::power(3.0)),
                 diag2(8.0, 27.0)) <= 1e-13);
}

TEST_CASE("functional calculus domain errors") {
  CHECK_THROWS_AS(functional_calculus(diag2(1.0, -1.0), SpectralMap::power(0.5)), DomainError);
  CHECK_THROWS_AS(functional_calculus(diag2(1.0, 0.0), SpectralMap::power(-1.0)), DomainError);
  CHECK_NOTHROW(functional_calculus(diag2(1.0, 0.0), SpectralMap::power(0.5)));
  CHECK_NOTHROW(functional_calculus(diag2(1.0, -1.0), SpectralMap::power(2.0)));
}

TEST_CASE("spectral map descriptors") {
  CHECK(SpectralMap::parse("abs").kind() == SpectralMap::Kind::abs);
  CHECK(SpectralMap::parse("pos").kind() == SpectralMap::Kind::positive_part);
  CHECK(SpectralMap::parse("power:0.25").parameter() == 0.25);
  CHECK(SpectralMap::parse("signed_power:3").kind() == SpectralMap::Kind::signed_power);
  CHECK(SpectralMap::parse("indicator:0.5").parameter() == 0.5);
  CHECK_THROWS_AS(SpectralMap::parse("exp"), UsageError);
  CHECK_THROWS_AS(SpectralMap::parse("power:"), UsageError);
  CHECK_THROWS_AS(SpectralMap::parse("power:x"), UsageError);
}

TEST_CASE("power round trip on positives") {
  const TracialAlgebra a({{5, 1.0}, {2, 0.5}});
  for (int m = 2; m <= 4; ++m) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Element x = random_element(a, ElementKind::positive, derive_seed(s, m));
      const Element root = functional_calculus(x, SpectralMap::power(1.0 / m));
      CHECK(root.is_positive(1e-12));
      CHECK(max_diff(root.pow(m), x) <= 1e-9 * operator_norm(x));
    }
  }
}

TEST_CASE("absolute value squares to x*x") {
  const TracialAlgebra a({{4, 1.0}, {1, 2.0}});
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Element x = random_element(a, ElementKind::general, s);
    const Element abs_x = absolute_value(x);
    CHECK(abs_x.is_positive(1e-12));
    CHECK(max_diff(abs_x * abs_x, x.adjoint() * x) <= 1e-11 * std::max(1.0, operator_norm(x) * operator_norm(x)));
  }
}

TEST_CASE("support projection") {
  CHECK(max_diff(support(diag2(2.0, 0.0)), diag2(1.0, 0.0)) == 0.0);
  CHECK(support(Element::zero(TracialAlgebra::matrices(3))) ==
        Element::zero(TracialAlgebra::matrices(3)));
  CHECK_THROWS_AS(support(diag2(1.0, -1.0)), PreconditionError);

  // g* g with g of rank r has a support of trace-rank r * weight.
  const TracialAlgebra a = TracialAlgebra::matrices(5, 0.7);
  for (int r = 1; r <= 4; ++r) {
    const Matrix g = random_element(a, ElementKind::general, derive_seed(11, r)).block(0);
    Matrix low = g;
    low.bottomRows(5 - r).setZero();
    const Element x(a, {low.adjoint() * low});
    const Element e = support(x);
    CHECK(e.is_projection(1e-10));
    CHECK(trace(e).real() == doctest::Approx(0.7 * r));
  }
}

TEST_CASE("jordan decomposition") {
  const JordanQuad q = jordan_split(diag2(1.0, -2.0));
  CHECK(max_diff(q.x1, diag2(1.0, 0.0)) <= 1e-15);
  CHECK(max_diff(q.x2, diag2(0.0, 2.0)) <= 1e-15);
  CHECK(q.x3.max_abs_entry() <= 1e-15);
  CHECK(q.x4.max_abs_entry() <= 1e-15);

  const TracialAlgebra m2 = TracialAlgebra::matrices(2);
  const JordanQuad iq = jordan_split(Complex(0.0, 1.0) * Element::matrix_unit(m2, 0, 0, 0));
  CHECK(max_diff(iq.x3, Element::matrix_unit(m2, 0, 0, 0)) <= 1e-15);
  CHECK(iq.x1.max_abs_entry() <= 1e-15);
  CHECK(iq.x2.max_abs_entry() <= 1e-15);
  CHECK(iq.x4.max_abs_entry() <= 1e-15);

  const TracialAlgebra a({{4, 1.0}, {2, 0.3}});
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Element x = random_element(a, ElementKind::general, s);
    const JordanQuad j = jordan_split(x);
    CHECK(max_diff(j.recombine(), x) <= 1e-12);
    for (const Element* part : {&j.x1, &j.x2, &j.x3, &j.x4}) CHECK(part->is_positive(1e-12));
    CHECK(max_diff(j.x1 * j.x2, Element::zero(a)) <= 1e-12);
    CHECK(max_diff(j.x3 * j.x4, Element::zero(a)) <= 1e-12);
    const double lhs = test::svd_trace_power(j.x1, 2.0) + test::svd_trace_power(j.x2, 2.0);
    CHECK(lhs <= test::svd_trace_power(x, 2.0) + 1e-9);
  }
}

TEST_CASE("singular values match Eigen's SVD") {
  const TracialAlgebra a({{6, 1.0}, {3, 0.5}});
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Element x = random_element(a, ElementKind::general, s);
    const auto sv = singular_values(x);
    for (std::size_t k = 0; k < 2; ++k) {
      Eigen::JacobiSVD<Matrix> svd(x.block(k));
      std::vector<double> mine = sv[k];
      std::sort(mine.begin(), mine.end(), std::greater<>());
      for (std::size_t i = 0; i < mine.size(); ++i)
        CHECK(mine[i] == doctest::Approx(svd.singularValues()(static_cast<Eigen::Index>(i))).epsilon(1e-11));
    }
  }
  const auto rank_one = singular_values(Element::matrix_unit(TracialAlgebra::matrices(3), 0, 0, 2));
  std::vector<double> v = rank_one[0];
  std::sort(v.begin(), v.end());
  CHECK(v[0] == 0.0);
  CHECK(v[1] == 0.0);
  CHECK(v[2] == doctest::Approx(1.0));
}
