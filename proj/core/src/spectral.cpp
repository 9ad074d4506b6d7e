#include "polylab/spectral.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "polylab/error.hpp"

namespace polylab {

namespace {

double off_diagonal_mass(const Matrix& a) {
  double s = 0.0;
  const auto n = a.rows();
  for (Eigen::Index j = 1; j < n; ++j)
    for (Eigen::Index i = 0; i < j; ++i) s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

// Rotates the first non-negligible entry onto the positive real axis.
void normalize_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-8) {
      v *= std::conj(v(i)) / mag;
      return;
    }
  }
}

bool lexicographically_less(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

bool is_integer(double a) { return std::isfinite(a) && a == std::round(a); }

double max_abs(const std::vector<std::vector<double>>& values) {
  double m = 0.0;
  for (const auto& block : values)
    for (double v : block) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

HermitianEigen jacobi_eigen(const Matrix& input, const JacobiOptions& options) {
  const Eigen::Index n = input.rows();
  if (input.cols() != n) throw StructuralError("jacobi_eigen: matrix must be square");

  Matrix a = 0.5 * (input + input.adjoint());
  Matrix v = Matrix::Identity(n, n);
  const double fro = a.norm();
  int sweeps = 0;

  if (n > 1 && fro > 0.0) {
    while (sweeps < options.max_sweeps && off_diagonal_mass(a) > options.rel_tol * fro) {
      ++sweeps;
      for (Eigen::Index p = 0; p < n - 1; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          const Complex apq = a(p, q);
          const double mag = std::abs(apq);
          if (mag == 0.0) continue;
          const Complex phase = apq / mag;
          const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
          double t;
          if (std::abs(theta) > 1e150) {
            t = 0.5 / theta;
          } else {
            t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const Complex s_phase = s * phase;
          const Complex s_conj = s * std::conj(phase);

          // A <- A J, columns p and q.
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex akp = a(k, p);
            const Complex akq = a(k, q);
            a(k, p) = c * akp - s_conj * akq;
            a(k, q) = s_phase * akp + c * akq;
          }
          // A <- J* A, rows p and q.
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex apk = a(p, k);
            const Complex aqk = a(q, k);
            a(p, k) = c * apk - s_phase * aqk;
            a(q, k) = s_conj * apk + c * aqk;
          }
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = a(p, p).real();
          a(q, q) = a(q, q).real();

          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - s_conj * vkq;
            v(k, q) = s_phase * vkp + c * vkq;
          }
        }
      }
    }
  }

  for (Eigen::Index k = 0; k < n; ++k) normalize_phase(v.col(k));

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    const double li = a(i, i).real();
    const double lj = a(j, j).real();
    if (li != lj) return li < lj;
    return lexicographically_less(v.col(i), v.col(j));
  });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  out.sweeps = sweeps;
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

// ---------------------------------------------------------------------------

Element SpectralData::reconstruct() const {
  std::vector<Matrix> blocks;
  blocks.reserve(eigenvalues.size());
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    const Matrix& u = unitary.block(k);
    Eigen::VectorXd lambda = Eigen::Map<const Eigen::VectorXd>(
        eigenvalues[k].data(), static_cast<Eigen::Index>(eigenvalues[k].size()));
    blocks.push_back(u * lambda.cast<Complex>().asDiagonal() * u.adjoint());
  }
  return Element(unitary.algebra(), std::move(blocks));
}

double SpectralData::max_abs_eigenvalue() const { return max_abs(eigenvalues); }

SpectralData eig_hermitian(const Element& x) {
  const double scale = operator_norm(x);
  const double residual = operator_norm(x - x.adjoint());
  if (residual > 1e-8 * scale) {
    std::ostringstream os;
    os << "eig_hermitian: element is not hermitian (||x - x*||_inf = " << residual
       << ", ||x||_inf = " << scale << ")";
    throw PreconditionError(os.str(), residual);
  }
  std::vector<std::vector<double>> values;
  std::vector<Matrix> vectors;
  values.reserve(x.num_blocks());
  vectors.reserve(x.num_blocks());
  for (const Matrix& b : x.blocks()) {
    HermitianEigen eig = jacobi_eigen(b);
    values.emplace_back(eig.values.data(), eig.values.data() + eig.values.size());
    vectors.push_back(std::move(eig.vectors));
  }
  return SpectralData{std::move(values), Element(x.algebra(), std::move(vectors))};
}

// ---------------------------------------------------------------------------

SpectralMap SpectralMap::parse(std::string_view descriptor) {
  if (descriptor == "abs") return absolute();
  if (descriptor == "pos") return positive_part();
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos)
    throw UsageError("unknown spectral map '" + std::string(descriptor) + "'");
  const std::string_view name = descriptor.substr(0, colon);
  const std::string arg(descriptor.substr(colon + 1));
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(arg, &used);
    if (used != arg.size()) throw std::invalid_argument(arg);
  } catch (const std::exception&) {
    throw UsageError("spectral map '" + std::string(descriptor) + "': bad parameter");
  }
  if (name == "power") return power(value);
  if (name == "signed_power") return signed_power(value);
  if (name == "indicator") return indicator(value);
  throw UsageError("unknown spectral map '" + std::string(descriptor) + "'");
}

bool SpectralMap::is_fractional_power() const {
  return (kind_ == Kind::power) && !is_integer(parameter_);
}

std::string SpectralMap::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::abs: return "abs";
    case Kind::positive_part: return "pos";
    case Kind::power: os << "power:" << parameter_; break;
    case Kind::signed_power: os << "signed_power:" << parameter_; break;
    case Kind::indicator: os << "indicator:" << parameter_; break;
  }
  return os.str();
}

double cluster_tolerance(double max_abs_eigenvalue) {
  return 1e-8 * (1.0 + max_abs_eigenvalue);
}

Element functional_calculus(const SpectralData& spectrum, const SpectralMap& f) {
  const double top = spectrum.max_abs_eigenvalue();
  const double positivity_tol = 1e-10 * top;
  const double cluster_tol = cluster_tolerance(top);

  if (f.is_fractional_power() || (f.kind() == SpectralMap::Kind::power && f.parameter() < 0)) {
    for (const auto& block : spectrum.eigenvalues)
      for (double l : block)
        if (l < -positivity_tol)
          throw DomainError("fractional power of an element that is not positive");
  }

  auto apply = [&](double t) -> double {
    switch (f.kind()) {
      case SpectralMap::Kind::abs:
        return std::abs(t);
      case SpectralMap::Kind::positive_part:
        return std::max(t, 0.0);
      case SpectralMap::Kind::power: {
        const double alpha = f.parameter();
        if (alpha == 0.0) return 1.0;
        if (f.is_fractional_power()) t = std::max(t, 0.0);
        if (alpha < 0.0 && t <= positivity_tol)
          throw DomainError("negative power of a singular element");
        return std::pow(t, alpha);
      }
      case SpectralMap::Kind::signed_power: {
        if (t == 0.0) return 0.0;
        const double mag = std::pow(std::abs(t), f.parameter());
        return t > 0.0 ? mag : -mag;
      }
      case SpectralMap::Kind::indicator:
        return std::abs(t - f.parameter()) <= cluster_tol ? 1.0 : 0.0;
    }
    return 0.0;
  };

  std::vector<Matrix> blocks;
  blocks.reserve(spectrum.eigenvalues.size());
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
    const Matrix& u = spectrum.unitary.block(k);
    Eigen::VectorXcd fl(u.cols());
    for (Eigen::Index i = 0; i < u.cols(); ++i)
      fl(i) = apply(spectrum.eigenvalues[k][static_cast<std::size_t>(i)]);
    blocks.push_back(u * fl.asDiagonal() * u.adjoint());
  }
  return Element(spectrum.unitary.algebra(), std::move(blocks));
}

Element functional_calculus(const Element& x, const SpectralMap& f) {
  return functional_calculus(eig_hermitian(x), f);
}

Element absolute_value(const Element& x) {
  std::vector<Matrix> blocks;
  blocks.reserve(x.num_blocks());
  for (const Matrix& b : x.blocks()) {
    const HermitianEigen eig = jacobi_eigen(b.adjoint() * b);
    Eigen::VectorXcd roots(eig.values.size());
    for (Eigen::Index i = 0; i < roots.size(); ++i)
      roots(i) = std::sqrt(std::max(eig.values(i), 0.0));
    blocks.push_back(eig.vectors * roots.asDiagonal() * eig.vectors.adjoint());
  }
  return Element(x.algebra(), std::move(blocks));
}

std::vector<SpectralProjection> spectral_resolution(const Element& x) {
  const SpectralData spectrum = eig_hermitian(x);
  const double tol = cluster_tolerance(spectrum.max_abs_eigenvalue());

  struct Entry {
    double value;
    std::size_t block;
    Eigen::Index column;
  };
  std::vector<Entry> entries;
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k)
    for (std::size_t i = 0; i < spectrum.eigenvalues[k].size(); ++i)
      entries.push_back({spectrum.eigenvalues[k][i], k, static_cast<Eigen::Index>(i)});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.value < b.value; });

  std::vector<SpectralProjection> out;
  std::size_t start = 0;
  while (start < entries.size()) {
    std::size_t end = start + 1;
    while (end < entries.size() && entries[end].value - entries[end - 1].value <= tol) ++end;
    Element e = Element::zero(x.algebra());
    std::vector<Matrix> blocks(e.blocks().begin(), e.blocks().end());
    double sum = 0.0;
    for (std::size_t i = start; i < end; ++i) {
      const auto v = spectrum.unitary.block(entries[i].block).col(entries[i].column);
      blocks[entries[i].block] += v * v.adjoint();
      sum += entries[i].value;
    }
    out.push_back({sum / static_cast<double>(end - start),
                   Element(x.algebra(), std::move(blocks))});
    start = end;
  }
  return out;
}

Element support(const Element& x) {
  const SpectralData spectrum = eig_hermitian(x);
  double top = 0.0;
  double bottom = 0.0;
  for (const auto& block : spectrum.eigenvalues)
    for (double l : block) {
      top = std::max(top, l);
      bottom = std::min(bottom, l);
    }
  if (bottom < -1e-10 * std::max(top, -bottom)) {
    std::ostringstream os;
    os << "support: element is not positive (min eigenvalue " << bottom << ")";
    throw PreconditionError(os.str(), -bottom);
  }
  const double threshold = 1e-10 * top;
  std::vector<Matrix> blocks;
  blocks.reserve(spectrum.eigenvalues.size());
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
    const Matrix& u = spectrum.unitary.block(k);
    Eigen::VectorXcd chi(u.cols());
    for (Eigen::Index i = 0; i < u.cols(); ++i)
      chi(i) = spectrum.eigenvalues[k][static_cast<std::size_t>(i)] > threshold ? 1.0 : 0.0;
    blocks.push_back(u * chi.asDiagonal() * u.adjoint());
  }
  return Element(x.algebra(), std::move(blocks));
}

Element JordanQuad::recombine() const {
  return x1 - x2 + Complex(0.0, 1.0) * (x3 - x4);
}

JordanQuad jordan_split(const Element& x) {
  // x1 = (|h| + h)/2 and x2 = (|h| - h)/2 are the positive and negative
  // spectral parts of h; computing them from one eigenbasis keeps x1 x2 = 0
  // at round-off.
  const auto split = [](const Element& h) {
    const SpectralData s = eig_hermitian(h);
    SpectralData negated = s;
    for (auto& block : negated.eigenvalues)
      for (double& l : block) l = -l;
    return std::pair{functional_calculus(s, SpectralMap::positive_part()),
                     functional_calculus(negated, SpectralMap::positive_part())};
  };
  auto [x1, x2] = split(x.real_part());
  auto [x3, x4] = split(x.imag_part());
  return JordanQuad{std::move(x1), std::move(x2), std::move(x3), std::move(x4)};
}

std::vector<std::vector<double>> singular_values(const Element& x) {
  std::vector<std::vector<double>> out;
  out.reserve(x.num_blocks());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (const Matrix& a : x.blocks()) {
    const Eigen::Index n = a.rows();
    std::vector<double> sv(static_cast<std::size_t>(n), 0.0);
    if (n == 1) {
      sv[0] = std::abs(a(0, 0));
    } else if (n > 1) {
      Matrix dilation = Matrix::Zero(2 * n, 2 * n);
      dilation.topRightCorner(n, n) = a;
      dilation.bottomLeftCorner(n, n) = a.adjoint();
      const HermitianEigen eig = jacobi_eigen(dilation);
      for (Eigen::Index i = 0; i < n; ++i)
        sv[static_cast<std::size_t>(i)] = std::max(0.0, eig.values(2 * n - 1 - i));
      const double floor = 64.0 * eps * sv[0];
      for (double& s : sv)
        if (s <= floor) s = 0.0;
    }
    out.push_back(std::move(sv));
  }
  return out;
}

}  // namespace polylab
