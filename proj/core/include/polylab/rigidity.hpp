#pragma once

// Orthogonal additivity on the whole algebra is too strong: on any block of
// dimension >= 2 it forces the polynomial to vanish there. This module finds
// explicit orthogonal pairs that witness the failure, and checks the
// "vanishes on positives => vanishes everywhere" chain.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "polylab/polynomial.hpp"

namespace polylab {

enum class Gadget { nilpotent_pair, unitary_rotation };

std::string to_string(Gadget gadget);

struct CounterexampleWitness {
  Element x;
  Element y;
  double residual = 0.0;         // oa_residual(P, x, y)
  double orth_residual = 0.0;    // is_orthogonal(x, y).residual
  Gadget gadget = Gadget::nilpotent_pair;
  std::size_t gadget_index = 0;  // position in the fixed search order
};

/// Residual above which a gadget pair counts as a witness.
inline constexpr double kWitnessThreshold = 1e-8;

/// Searches, in order, per block of dim >= 2 and per i < j with u = E_ij:
///   nilpotent pairs      (u, u*), (u, omega u*)
///   unitary rotations    (v u, v u*), (v_w u, v_w u*) with
///                        v = 1 + u + u* - e - e', v_w = 1 + w u + u* - e - e'
///   rotated pairs        (V u W*, V u* W*), (V u W*, omega V u* W*) for seeded
///                        unitaries V, W on the block
/// where omega = exp(i pi / m) satisfies omega^m = -1. Returns the first pair
/// with residual > kWitnessThreshold.
std::optional<CounterexampleWitness> full_oa_counterexample(
    const HomPolynomial& p, std::size_t rotations_per_block = 8);

/// max ||P(e)||_q over seeded projections of every rank pattern.
double projection_vanishing_probe(const HomPolynomial& p, std::size_t n_samples,
                                  std::uint64_t seed);

struct ZeroCertificate {
  bool vanishes_on_positives = false;
  /// Tested only when vanishes_on_positives holds.
  std::optional<bool> vanishes_globally;
  double worst_positive = 0.0;   // max ||P(x)||_q / scale on positives
  double worst_general = 0.0;    // same on general samples
};

inline constexpr double kZeroOnPositivesTol = 1e-12;
inline constexpr double kZeroGlobalTol = 1e-8;

/// scale(x) = coefficient_bound(P) * ||x||_inf^m.
ZeroCertificate zero_certificate(const HomPolynomial& p, std::size_t n_samples,
                                 std::uint64_t seed,
                                 double positive_tol = kZeroOnPositivesTol,
                                 double global_tol = kZeroGlobalTol);

}  // namespace polylab
