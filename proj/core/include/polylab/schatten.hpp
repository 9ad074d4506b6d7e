#pragma once

// Schatten p-(quasi-)norms for the weighted trace, orthogonality, and the
// inequality checks that go with them.

#include <complex>
#include <string>
#include <string_view>

#include "polylab/algebra.hpp"

namespace polylab {

/// Exponent p in (0, inf].
class PExponent {
 public:
  /// Throws UsageError unless p > 0 (p may be +inf).
  explicit PExponent(double p);

  static PExponent infinity();
  /// Accepts a positive real or "inf". Throws UsageError otherwise.
  static PExponent parse(std::string_view token);

  bool is_infinite() const;
  double value() const { return value_; }
  /// 1/p, zero for p = inf.
  double reciprocal() const;
  std::string to_string() const;

  friend bool operator==(const PExponent&, const PExponent&) = default;

 private:
  double value_;
};

/// 1/r = 1/p + 1/q.
PExponent holder_exponent(PExponent p, PExponent q);

/// tau(|x|^p) for finite p.
double trace_abs_power(const Element& x, double p);

/// ||x||_p = tau(|x|^p)^{1/p}; ||x||_inf is the operator norm.
double norm_p(const Element& x, PExponent p);
inline double norm_p(const Element& x, double p) { return norm_p(x, PExponent(p)); }

struct OrthogonalityCheck {
  bool orthogonal = false;
  double residual = 0.0;
};

/// x _|_ y iff xy* = y*x = 0. The residual is
/// max(||xy*||, ||y*x||) / ((1 + ||x||)(1 + ||y||)) in the operator norm.
OrthogonalityCheck is_orthogonal(const Element& x, const Element& y,
                                 double tol = 1e-10);

/// | ||x + w y||_p^p - ||x||_p^p - ||y||_p^p | for finite p.
double pythagoras_residual(const Element& x, const Element& y, double p,
                           Complex omega);

struct HolderCheck {
  double lhs = 0.0;  // ||xy||_r
  double rhs = 0.0;  // ||x||_p ||y||_q
  bool ok = false;   // lhs <= rhs (1 + 1e-10)
};

HolderCheck holder_check(const Element& x, const Element& y, PExponent p,
                         PExponent q);

struct ConversePythagorasProbe {
  double res_plus = 0.0;
  double res_minus = 0.0;
  double orth_residual = 0.0;

  /// Both sign residuals <= 1e-12 must force orth_residual <= 1e-6.
  bool contract_holds() const;
};

/// Throws UsageError for p == 2, where the converse fails.
ConversePythagorasProbe converse_pythagoras_probe(const Element& x,
                                                  const Element& y, double p);

}  // namespace polylab
