#include "polylab/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "polylab/error.hpp"
#include "polylab/parallel.hpp"

namespace polylab {

namespace {

constexpr std::uint64_t kOaStream = 0x6f61;
constexpr std::uint64_t kHermitianStream = 0x6865;

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// tau(A_1 x A_2 x ... A_m x) computed block by block.
Complex monomial_trace(const TraceMonomial& mono, const Element& x) {
  Complex total = 0.0;
  for (std::size_t k = 0; k < x.num_blocks(); ++k) {
    const Matrix& xk = x.block(k);
    Matrix acc = mono.factors.front().block(k) * xk;
    for (std::size_t i = 1; i < mono.factors.size(); ++i) {
      acc = acc * mono.factors[i].block(k);
      acc = acc * xk;
    }
    total += x.algebra().block(k).weight * acc.trace();
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------

QNormedCodomain::QNormedCodomain(int d, double q) : d_(d), q_(q) {
  if (d < 1) throw UsageError("codomain dimension must be >= 1");
  if (!(q > 0.0 && q <= 1.0)) {
    std::ostringstream os;
    os << "codomain exponent q must lie in (0, 1], got " << q;
    throw UsageError(os.str());
  }
}

double QNormedCodomain::norm_power(const CodomainVector& v) const {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > 0.0) s += q_ == 1.0 ? a : std::pow(a, q_);
  }
  return s;
}

double QNormedCodomain::norm(const CodomainVector& v) const {
  const double s = norm_power(v);
  return q_ == 1.0 ? s : std::pow(s, 1.0 / q_);
}

// ---------------------------------------------------------------------------

HomPolynomial::HomPolynomial(int m, QNormedCodomain codomain, TracialAlgebra algebra,
                             std::vector<TraceMonomial> monomials)
    : m_(m), codomain_(codomain), algebra_(std::move(algebra)),
      monomials_(std::move(monomials)) {
  if (m_ < 2) throw UsageError("polynomial degree m must be >= 2");
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    const TraceMonomial& mono = monomials_[i];
    if (static_cast<int>(mono.factors.size()) != m_) {
      std::ostringstream os;
      os << "monomial " << i << " has " << mono.factors.size() << " factors, degree is " << m_;
      throw StructuralError(os.str());
    }
    if (mono.coord < 0 || mono.coord >= codomain_.dimension()) {
      std::ostringstream os;
      os << "monomial " << i << " targets coordinate " << mono.coord << " outside [0, "
         << codomain_.dimension() << ")";
      throw StructuralError(os.str());
    }
    for (const Element& a : mono.factors)
      if (!(a.algebra() == algebra_))
        throw StructuralError("monomial factor belongs to a different algebra");
  }
}

HomPolynomial HomPolynomial::from_zeta(std::span<const Element> zetas, int m, double q) {
  if (zetas.empty()) throw UsageError("from_zeta: at least one coordinate required");
  const TracialAlgebra& algebra = zetas.front().algebra();
  const Element one = Element::identity(algebra);
  std::vector<TraceMonomial> monomials;
  monomials.reserve(zetas.size());
  for (std::size_t k = 0; k < zetas.size(); ++k) {
    TraceMonomial mono;
    mono.coeff = 1.0;
    mono.coord = static_cast<int>(k);
    mono.factors.push_back(zetas[k]);
    for (int i = 1; i < m; ++i) mono.factors.push_back(one);
    monomials.push_back(std::move(mono));
  }
  return HomPolynomial(m, QNormedCodomain(static_cast<int>(zetas.size()), q), algebra,
                       std::move(monomials));
}

HomPolynomial HomPolynomial::from_zeta(const Element& zeta, int m) {
  return from_zeta(std::span<const Element>(&zeta, 1), m, 1.0);
}

CodomainVector HomPolynomial::evaluate(const Element& x) const {
  if (!(x.algebra() == algebra_))
    throw StructuralError("evaluate: argument belongs to a different algebra");
  CodomainVector out = CodomainVector::Zero(codomain_.dimension());
  for (const TraceMonomial& mono : monomials_)
    out(mono.coord) += mono.coeff * monomial_trace(mono, x);
  return out;
}

CodomainVector HomPolynomial::polarize(std::span<const Element> args) const {
  if (static_cast<int>(args.size()) != m_) {
    std::ostringstream os;
    os << "polarize: expected " << m_ << " arguments, got " << args.size();
    throw UsageError(os.str());
  }
  for (const Element& a : args)
    if (!(a.algebra() == algebra_))
      throw StructuralError("polarize: argument belongs to a different algebra");

  CodomainVector acc = CodomainVector::Zero(codomain_.dimension());
  const unsigned count = 1u << m_;
  for (unsigned mask = 0; mask < count; ++mask) {
    Element y = Element::zero(algebra_);
    int sign = 1;
    for (int j = 0; j < m_; ++j) {
      if (mask & (1u << j)) {
        y -= args[static_cast<std::size_t>(j)];
        sign = -sign;
      } else {
        y += args[static_cast<std::size_t>(j)];
      }
    }
    const CodomainVector value = evaluate(y);
    if (sign > 0) acc += value;
    else acc -= value;
  }
  return acc / (static_cast<double>(count) * factorial(m_));
}

HomPolynomial HomPolynomial::adjoint() const {
  std::vector<TraceMonomial> out;
  out.reserve(monomials_.size());
  for (const TraceMonomial& mono : monomials_) {
    TraceMonomial adj;
    adj.coeff = std::conj(mono.coeff);
    adj.coord = mono.coord;
    for (auto it = mono.factors.rbegin(); it != mono.factors.rend(); ++it)
      adj.factors.push_back(it->adjoint());
    out.push_back(std::move(adj));
  }
  return HomPolynomial(m_, codomain_, algebra_, std::move(out));
}

HomPolynomial HomPolynomial::hermitian_part() const {
  return (*this + adjoint()).scaled(0.5);
}

HomPolynomial HomPolynomial::operator+(const HomPolynomial& other) const {
  if (other.m_ != m_ || !(other.codomain_ == codomain_) || !(other.algebra_ == algebra_))
    throw StructuralError("adding polynomials of different shape");
  std::vector<TraceMonomial> out = monomials_;
  out.insert(out.end(), other.monomials_.begin(), other.monomials_.end());
  return HomPolynomial(m_, codomain_, algebra_, std::move(out));
}

HomPolynomial HomPolynomial::operator-(const HomPolynomial& other) const {
  return *this + other.scaled(-1.0);
}

HomPolynomial HomPolynomial::scaled(Complex s) const {
  std::vector<TraceMonomial> out = monomials_;
  for (TraceMonomial& mono : out) mono.coeff *= s;
  return HomPolynomial(m_, codomain_, algebra_, std::move(out));
}

double HomPolynomial::coefficient_bound() const {
  double total = 0.0;
  for (const TraceMonomial& mono : monomials_) {
    double term = std::abs(mono.coeff);
    for (const Element& a : mono.factors) term *= operator_norm(a);
    total += term;
  }
  return algebra_.trace_of_identity() * total;
}

// ---------------------------------------------------------------------------

std::string to_string(Cone cone) {
  switch (cone) {
    case Cone::sa: return "sa";
    case Cone::positive: return "positive";
    case Cone::full: return "full";
  }
  return "?";
}

Cone parse_cone(std::string_view name) {
  if (name == "sa") return Cone::sa;
  if (name == "positive") return Cone::positive;
  if (name == "full") return Cone::full;
  throw UsageError("unknown cone '" + std::string(name) + "'");
}

OrthogonalPair random_orthogonal_pair(const TracialAlgebra& algebra, Cone cone,
                                      std::uint64_t seed) {
  const Element one = Element::identity(algebra);
  const Element e = random_proper_projection(algebra, derive_seed(seed, 1));
  const Element e_perp = one - e;
  switch (cone) {
    case Cone::sa: {
      const Element h1 = random_element(algebra, ElementKind::hermitian, derive_seed(seed, 2));
      const Element h2 = random_element(algebra, ElementKind::hermitian, derive_seed(seed, 3));
      return {e * h1 * e, e_perp * h2 * e_perp};
    }
    case Cone::positive: {
      const Element g1 = random_element(algebra, ElementKind::positive, derive_seed(seed, 2));
      const Element g2 = random_element(algebra, ElementKind::positive, derive_seed(seed, 3));
      return {e * g1 * e, e_perp * g2 * e_perp};
    }
    case Cone::full: {
      const Element f = random_proper_projection(algebra, derive_seed(seed, 4));
      const Element f_perp = one - f;
      const Element g1 = random_element(algebra, ElementKind::general, derive_seed(seed, 2));
      const Element g2 = random_element(algebra, ElementKind::general, derive_seed(seed, 3));
      return {e * g1 * f, e_perp * g2 * f_perp};
    }
  }
  throw UsageError("unknown cone");
}

double oa_residual(const HomPolynomial& p, const Element& x, const Element& y) {
  const CodomainVector px = p.evaluate(x);
  const CodomainVector py = p.evaluate(y);
  const CodomainVector pxy = p.evaluate(x + y);
  const QNormedCodomain& c = p.codomain();
  return c.norm(pxy - px - py) / (1.0 + c.norm(px) + c.norm(py));
}

OAReport check_orthogonal_additivity(const HomPolynomial& p, Cone cone,
                                     std::size_t n_samples, std::uint64_t seed,
                                     double tol) {
  if (n_samples < 1) throw UsageError("check_orthogonal_additivity: n_samples must be >= 1");
  std::vector<double> residuals(n_samples, 0.0);
  parallel_for(n_samples, [&](std::size_t i) {
    const std::uint64_t s = derive_seed(seed, kOaStream + static_cast<std::uint64_t>(cone), i);
    const OrthogonalPair pair = random_orthogonal_pair(p.algebra(), cone, s);
    residuals[i] = oa_residual(p, pair.x, pair.y);
  });

  OAReport report;
  report.cone = cone;
  report.n_samples = n_samples;
  report.tol = tol;
  for (std::size_t i = 0; i < n_samples; ++i) {
    if (residuals[i] > report.max_residual || std::isnan(residuals[i])) {
      report.max_residual = residuals[i];
      report.worst_sample = i;
    }
  }
  report.passed = report.max_residual <= tol;
  return report;
}

double hermitian_defect(const HomPolynomial& p, std::size_t n_samples, std::uint64_t seed) {
  if (p.codomain().dimension() != 1)
    throw UsageError("hermitian_defect needs a scalar-valued polynomial (d = 1)");
  std::vector<double> defects(n_samples, 0.0);
  parallel_for(n_samples, [&](std::size_t i) {
    const Element x = random_element(p.algebra(), ElementKind::general,
                                     derive_seed(seed, kHermitianStream, i));
    const Complex px = p.evaluate(x)(0);
    const Complex pstar = std::conj(p.evaluate(x.adjoint())(0));
    defects[i] = std::abs(px - pstar) / (1.0 + std::abs(px));
  });
  double worst = 0.0;
  for (double d : defects) worst = std::max(worst, d);
  return worst;
}

}  // namespace polylab
