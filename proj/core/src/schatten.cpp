#include "polylab/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polylab/error.hpp"
#include "polylab/spectral.hpp"

namespace polylab {

PExponent::PExponent(double p) : value_(p) {
  if (!(p > 0.0)) {
    std::ostringstream os;
    os << "exponent must be positive, got " << p;
    throw UsageError(os.str());
  }
}

PExponent PExponent::infinity() {
  return PExponent(std::numeric_limits<double>::infinity());
}

PExponent PExponent::parse(std::string_view token) {
  if (token == "inf" || token == "Inf" || token == "INF" || token == "infinity")
    return infinity();
  const std::string text(token);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("invalid exponent '" + text + "'");
  }
  if (!std::isfinite(value)) throw UsageError("invalid exponent '" + text + "'");
  return PExponent(value);
}

bool PExponent::is_infinite() const { return std::isinf(value_); }

double PExponent::reciprocal() const { return is_infinite() ? 0.0 : 1.0 / value_; }

std::string PExponent::to_string() const {
  if (is_infinite()) return "inf";
  std::ostringstream os;
  os << value_;
  return os.str();
}

PExponent holder_exponent(PExponent p, PExponent q) {
  const double inv = p.reciprocal() + q.reciprocal();
  if (inv == 0.0) return PExponent::infinity();
  return PExponent(1.0 / inv);
}

double trace_abs_power(const Element& x, double p) {
  const auto sv = singular_values(x);
  double total = 0.0;
  for (std::size_t k = 0; k < sv.size(); ++k) {
    double block_sum = 0.0;
    for (double s : sv[k])
      if (s > 0.0) block_sum += std::pow(s, p);
    total += x.algebra().block(k).weight * block_sum;
  }
  return total;
}

double norm_p(const Element& x, PExponent p) {
  if (p.is_infinite()) {
    double top = 0.0;
    for (const auto& block : singular_values(x))
      if (!block.empty()) top = std::max(top, block.front());
    return top;
  }
  return std::pow(trace_abs_power(x, p.value()), 1.0 / p.value());
}

OrthogonalityCheck is_orthogonal(const Element& x, const Element& y, double tol) {
  require_same_algebra(x, y);
  const double left = operator_norm(x * y.adjoint());
  const double right = operator_norm(y.adjoint() * x);
  const double scale = (1.0 + operator_norm(x)) * (1.0 + operator_norm(y));
  const double residual = std::max(left, right) / scale;
  return {residual <= tol, residual};
}

double pythagoras_residual(const Element& x, const Element& y, double p,
                           Complex omega) {
  if (!(p > 0.0) || !std::isfinite(p)) throw UsageError("pythagoras_residual: p must be finite and positive");
  require_same_algebra(x, y);
  const double lhs = trace_abs_power(x + omega * y, p);
  return std::abs(lhs - trace_abs_power(x, p) - trace_abs_power(y, p));
}

HolderCheck holder_check(const Element& x, const Element& y, PExponent p, PExponent q) {
  require_same_algebra(x, y);
  const PExponent r = holder_exponent(p, q);
  HolderCheck out;
  out.lhs = norm_p(x * y, r);
  out.rhs = norm_p(x, p) * norm_p(y, q);
  out.ok = out.lhs <= out.rhs * (1.0 + 1e-10);
  return out;
}

bool ConversePythagorasProbe::contract_holds() const {
  const bool both_small = res_plus <= 1e-12 && res_minus <= 1e-12;
  return !both_small || orth_residual <= 1e-6;
}

ConversePythagorasProbe converse_pythagoras_probe(const Element& x, const Element& y,
                                                  double p) {
  if (p == 2.0)
    throw UsageError("converse Pythagoras probe is meaningless for p = 2");
  ConversePythagorasProbe out;
  out.res_plus = pythagoras_residual(x, y, p, Complex(1.0));
  out.res_minus = pythagoras_residual(x, y, p, Complex(-1.0));
  out.orth_residual = is_orthogonal(x, y).residual;
  return out;
}

}  // namespace polylab
