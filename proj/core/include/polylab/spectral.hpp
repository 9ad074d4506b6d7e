#pragma once

// Hermitian eigendecomposition (cyclic Jacobi) and the functional calculus
// built on it.

#include <string>
#include <string_view>
#include <vector>

#include "polylab/algebra.hpp"

namespace polylab {

/// Result of diagonalizing one hermitian matrix block.
struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // columns are eigenvectors
  int sweeps = 0;
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius mass is <= rel_tol * ||a||_F.
  double rel_tol = 1e-14;
  int max_sweeps = 100;
};

/// Cyclic Jacobi on a hermitian matrix. Only the hermitian part
/// (a + a*)/2 is used. Eigenvalues are returned in ascending order; exact ties
/// are ordered by the lexicographic order of the eigenvectors, and every
/// eigenvector is phase-normalized so that its first non-negligible entry is
/// real and positive.
HermitianEigen jacobi_eigen(const Matrix& a, const JacobiOptions& options = {});

struct SpectralData {
  std::vector<std::vector<double>> eigenvalues;  // per block, ascending
  Element unitary;                               // eigenvector columns

  /// U diag(lambda) U*.
  Element reconstruct() const;
  double max_abs_eigenvalue() const;
};

/// Throws PreconditionError (carrying ||x - x*||_inf) unless x is hermitian
/// within 1e-8 * ||x||_inf.
SpectralData eig_hermitian(const Element& x);

/// Real function applied to the spectrum of a hermitian element.
class SpectralMap {
 public:
  enum class Kind { abs, power, signed_power, indicator, positive_part };

  static SpectralMap absolute() { return SpectralMap(Kind::abs, 0.0); }
  /// t -> t^alpha. Non-integer alpha requires a positive argument.
  static SpectralMap power(double alpha) { return SpectralMap(Kind::power, alpha); }
  /// t -> sign(t) |t|^alpha.
  static SpectralMap signed_power(double alpha) {
    return SpectralMap(Kind::signed_power, alpha);
  }
  /// Spectral projection onto the eigenvalues clustered at rho.
  static SpectralMap indicator(double rho) { return SpectralMap(Kind::indicator, rho); }
  /// t -> max(t, 0).
  static SpectralMap positive_part() { return SpectralMap(Kind::positive_part, 0.0); }

  /// Parses "abs", "pos", "power:<a>", "signed_power:<a>", "indicator:<rho>".
  /// Throws UsageError on anything else.
  static SpectralMap parse(std::string_view descriptor);

  Kind kind() const { return kind_; }
  double parameter() const { return parameter_; }
  bool is_fractional_power() const;
  std::string to_string() const;

 private:
  SpectralMap(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  double parameter_;
};

/// Eigenvalue cluster tolerance used by indicator maps: 1e-8 (1 + max|lambda|).
double cluster_tolerance(double max_abs_eigenvalue);

/// U f(Lambda) U*. Throws PreconditionError for non-hermitian x and
/// DomainError when a fractional power meets a non-positive element.
Element functional_calculus(const Element& x, const SpectralMap& f);
Element functional_calculus(const SpectralData& spectrum, const SpectralMap& f);

/// |x| = (x* x)^{1/2} for arbitrary x.
Element absolute_value(const Element& x);

/// One (rho, e) pair per distinct eigenvalue cluster; x = sum rho_j e_j.
struct SpectralProjection {
  double value;
  Element projection;
};
std::vector<SpectralProjection> spectral_resolution(const Element& x);

/// Support projection chi_(theta, inf)(x), theta = 1e-10 * max(lambda).
/// Throws PreconditionError unless x is positive.
Element support(const Element& x);

/// x = x1 - x2 + i (x3 - x4) with x1 _|_ x2, x3 _|_ x4, all positive.
struct JordanQuad {
  Element x1, x2, x3, x4;

  Element recombine() const;
};
JordanQuad jordan_split(const Element& x);

/// Singular values of every block, each block sorted descending. Computed
/// from the hermitian dilation [[0, a], [a*, 0]], which keeps absolute
/// accuracy eps * ||a||. Values under the noise floor 64 * eps * sigma_max(block)
/// are reported as exactly zero.
std::vector<std::vector<double>> singular_values(const Element& x);

}  // namespace polylab
