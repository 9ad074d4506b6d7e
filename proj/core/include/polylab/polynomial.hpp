#pragma once

// Vector-valued m-homogeneous trace polynomials
//
//   P(x)_k = sum over monomials with coord k of  c * tau(A_1 x A_2 x ... A_m x)
//
// with values in C^d carrying the l_q quasi-norm, 0 < q <= 1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polylab/algebra.hpp"

namespace polylab {

using CodomainVector = Eigen::VectorXcd;

class QNormedCodomain {
 public:
  /// Throws UsageError unless d >= 1 and 0 < q <= 1.
  QNormedCodomain(int d, double q);

  int dimension() const { return d_; }
  double q() const { return q_; }

  /// (sum |v_i|^q)^{1/q}.
  double norm(const CodomainVector& v) const;
  /// sum |v_i|^q, which is subadditive.
  double norm_power(const CodomainVector& v) const;

  friend bool operator==(const QNormedCodomain&, const QNormedCodomain&) = default;

 private:
  int d_;
  double q_;
};

struct TraceMonomial {
  Complex coeff{1.0, 0.0};
  int coord = 0;
  std::vector<Element> factors;  // A_1 .. A_m
};

class HomPolynomial {
 public:
  /// Throws UsageError if m < 2 and StructuralError if a monomial has the
  /// wrong degree, an out-of-range coordinate, or a factor from another
  /// algebra.
  HomPolynomial(int m, QNormedCodomain codomain, TracialAlgebra algebra,
                std::vector<TraceMonomial> monomials);

  /// P(x)_k = tau(zeta_k x^m).
  static HomPolynomial from_zeta(std::span<const Element> zetas, int m,
                                 double q = 1.0);
  static HomPolynomial from_zeta(const Element& zeta, int m);

  int degree() const { return m_; }
  const QNormedCodomain& codomain() const { return codomain_; }
  const TracialAlgebra& algebra() const { return algebra_; }
  std::span<const TraceMonomial> monomials() const { return monomials_; }

  CodomainVector evaluate(const Element& x) const;
  CodomainVector operator()(const Element& x) const { return evaluate(x); }

  /// Symmetric m-linear form recovered through the polarization identity
  ///   1/(2^m m!) sum_{eps in {+-1}^m} eps_1..eps_m P(sum eps_j x_j).
  /// Throws UsageError unless exactly m arguments are given.
  CodomainVector polarize(std::span<const Element> args) const;

  /// P*(x) = conj(P(x*)).
  HomPolynomial adjoint() const;
  /// (P + P*)/2.
  HomPolynomial hermitian_part() const;

  HomPolynomial operator+(const HomPolynomial& other) const;
  HomPolynomial operator-(const HomPolynomial& other) const;
  HomPolynomial scaled(Complex s) const;

  /// tau(1) * sum |c| prod ||A_i||_inf, so that ||P(x)||_1 <= bound * ||x||_inf^m.
  double coefficient_bound() const;

 private:
  int m_;
  QNormedCodomain codomain_;
  TracialAlgebra algebra_;
  std::vector<TraceMonomial> monomials_;
};

enum class Cone { sa, positive, full };

std::string to_string(Cone cone);
/// Throws UsageError for anything but "sa", "positive", "full".
Cone parse_cone(std::string_view name);

struct OrthogonalPair {
  Element x;
  Element y;
};

/// Orthogonal pair built from complementary projections. For sa and positive
/// cones x and y are compressed by e and 1-e; for the full cone x = e g f and
/// y = (1-e) g' (1-f) for independent projections e and f.
OrthogonalPair random_orthogonal_pair(const TracialAlgebra& algebra, Cone cone,
                                      std::uint64_t seed);

/// ||P(x+y) - P(x) - P(y)||_q / (1 + ||P(x)||_q + ||P(y)||_q).
double oa_residual(const HomPolynomial& p, const Element& x, const Element& y);

struct OAReport {
  Cone cone = Cone::sa;
  std::size_t n_samples = 0;
  double tol = 0.0;
  double max_residual = 0.0;
  std::size_t worst_sample = 0;
  bool passed = false;
};

OAReport check_orthogonal_additivity(const HomPolynomial& p, Cone cone,
                                     std::size_t n_samples, std::uint64_t seed,
                                     double tol = 1e-9);

/// max |P(x) - conj(P(x*))| / (1 + |P(x)|) over seeded general samples.
/// Throws UsageError when d > 1.
double hermitian_defect(const HomPolynomial& p, std::size_t n_samples = 64,
                        std::uint64_t seed = 0);

}  // namespace polylab
