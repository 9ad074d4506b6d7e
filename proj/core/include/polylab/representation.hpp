#pragma once

// Recovering the representing operators zeta_k with P(x)_k = tau(zeta_k x^m)
// from an orthogonally additive trace polynomial, and the norm relations
// between P and the linear map Phi_zeta(y) = tau(zeta y).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polylab/polynomial.hpp"
#include "polylab/schatten.hpp"

namespace polylab {

/// Values of the linear maps Phi_k(b) = phi(b, 1, ..., 1)_k on a probing
/// basis { V E_ij V* } of every block.
struct PhiTable {
  TracialAlgebra algebra;
  Element basis_unitary;                      // V; identity for matrix units
  std::vector<std::vector<Matrix>> values;    // [coord][block](i, j)

  int codomain_dimension() const { return static_cast<int>(values.size()); }
};

PhiTable extract_phi(const HomPolynomial& p);
PhiTable extract_phi(const HomPolynomial& p, const Element& basis_unitary);

/// zeta on block k with tau(zeta V E_ij V*) = Phi(V E_ij V*), i.e.
/// (V* zeta V)_{ji} = Phi(V E_ij V*) / w_k.
std::vector<Element> zeta_from_phi(const PhiTable& table);

std::vector<Element> reconstruct_zeta(const HomPolynomial& p);
std::vector<Element> reconstruct_zeta(const HomPolynomial& p,
                                      const Element& basis_unitary);

/// ||P(x) - (tau(zeta_k x^m))_k||_q / (1 + ||P(x)||_q).
double representation_residual(const HomPolynomial& p,
                               std::span<const Element> zetas,
                               const Element& x);

/// Max of representation_residual over seeded general samples.
double verify_representation(const HomPolynomial& p,
                             std::span<const Element> zetas,
                             std::size_t n_samples, std::uint64_t seed);

/// max_k ||a_k - b_k||_inf / (1 + max_k ||a_k||_inf).
double zeta_distance(std::span<const Element> a, std::span<const Element> b);

/// Distance between the reconstructions from the matrix-unit basis and from
/// a random unitarily rotated basis.
double uniqueness_gap(const HomPolynomial& p, std::uint64_t seed);

/// Exponent r of the space housing zeta: p/(p - m) for p > m, inf otherwise.
PExponent representing_exponent(double p, int m);

/// Norm of y -> tau(zeta y) on L^{p/m}:
///   p > m : ||zeta||_r
///   p = m : ||zeta||_inf
///   p < m : max_k w_k^{1 - m/p} ||zeta_k||_inf
double dual_norm(const Element& zeta, double p, int m);

struct ExtremalWitness {
  Element x;             // ||x||_p = 1
  Element plus_root;     // y_+^{1/m}
  Element minus_root;    // y_-^{1/m}
  double achieved = 0;   // tau(zeta x^m)
  double norm_x = 0;     // ||x||_p
};

/// Unit vector x with tau(zeta x^m) = ||Phi_zeta||. Built as
/// x = y_+^{1/m} + omega y_-^{1/m} with omega = exp(i pi / m), where y is the
/// norming element of Phi_zeta in L^{p/m}.
/// Throws PreconditionError for non-self-adjoint or zero zeta and
/// UnsupportedError for p < m.
ExtremalWitness extremal_witness(const Element& zeta, double p, int m);

struct NormSearchOptions {
  std::size_t n_samples = 4;     // 10 * n_samples random starts
  int ascent_iters = 200;
  double initial_step = 1e-2;
  double fd_step = 1e-6;
  std::uint64_t seed = 0;
};

struct NormBounds {
  double lower_estimate = 0.0;   // sampled and refined sup ||P(x)||/||x||_p^m
  double upper_bound = 0.0;      // (sum_k ||Phi_k||^q)^{1/q}
  bool sandwich_ok = false;      // lower <= upper (1 + 1e-9)
};

/// ||P(x)||_q / ||x||_p^m.
double norm_ratio(const HomPolynomial& p, const Element& x, double p_exp);

NormBounds norm_bound_suite(const HomPolynomial& p,
                            std::span<const Element> zetas, double p_exp,
                            const NormSearchOptions& options = {});

struct NormData {
  PExponent r{1.0};
  double p = 0.0;
  int m = 2;
  std::vector<double> per_coordinate;  // ||Phi_{zeta_k}||
};

struct RepresentationReport {
  std::vector<Element> zeta;
  double max_residual = 0.0;
  double uniqueness_gap = 0.0;
  NormData norm_data;
};

RepresentationReport analyze_representation(const HomPolynomial& p, double p_exp,
                                            std::size_t n_samples,
                                            std::uint64_t seed);

}  // namespace polylab
