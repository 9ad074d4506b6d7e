#include "polylab/representation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "polylab/error.hpp"
#include "polylab/parallel.hpp"
#include "polylab/spectral.hpp"

namespace polylab {

namespace {

constexpr std::uint64_t kVerifyStream = 0x7665;
constexpr std::uint64_t kGapStream = 0x6761;
constexpr std::uint64_t kStartStream = 0x7374;

Element block_restricted(const TracialAlgebra& algebra, std::size_t k, Matrix m) {
  std::vector<Matrix> blocks;
  blocks.reserve(algebra.num_blocks());
  for (std::size_t b = 0; b < algebra.num_blocks(); ++b) {
    if (b == k) blocks.push_back(std::move(m));
    else blocks.push_back(Matrix::Zero(algebra.block(b).dim, algebra.block(b).dim));
  }
  return Element(algebra, std::move(blocks));
}

// U diag(f(lambda)) U* for a complex-valued f.
template <typename F>
Element spectral_apply(const SpectralData& s, F f) {
  std::vector<Matrix> blocks;
  blocks.reserve(s.eigenvalues.size());
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
    const Matrix& u = s.unitary.block(k);
    Eigen::VectorXcd d(u.cols());
    for (Eigen::Index i = 0; i < d.size(); ++i)
      d(i) = f(s.eigenvalues[k][static_cast<std::size_t>(i)]);
    blocks.push_back(u * d.asDiagonal() * u.adjoint());
  }
  return Element(s.unitary.algebra(), std::move(blocks));
}

// Scales x to unit p-norm; zero stays zero.
Element normalized(const Element& x, double p) {
  const double n = norm_p(x, p);
  return n > 0.0 ? (1.0 / n) * x : x;
}

double gradient_ascent(const HomPolynomial& poly, Element x, double p,
                       const NormSearchOptions& opt) {
  x = normalized(x, p);
  double f = norm_ratio(poly, x, p);
  double step = opt.initial_step;
  const TracialAlgebra& algebra = x.algebra();

  for (int it = 0; it < opt.ascent_iters && step > 1e-12; ++it) {
    const double h = opt.fd_step * norm_p(x, p);
    std::vector<Matrix> grad;
    grad.reserve(algebra.num_blocks());
    double grad_norm2 = 0.0;
    for (std::size_t k = 0; k < algebra.num_blocks(); ++k) {
      const int n = algebra.block(k).dim;
      Matrix g(n, n);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          Complex component = 0.0;
          for (const Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
            std::vector<Matrix> blocks(x.blocks().begin(), x.blocks().end());
            blocks[k](i, j) += h * dir;
            const double fh = norm_ratio(poly, Element(algebra, std::move(blocks)), p);
            component += dir * ((fh - f) / h);
          }
          g(i, j) = component;
          grad_norm2 += std::norm(component);
        }
      }
      grad.push_back(std::move(g));
    }
    if (!(grad_norm2 > 0.0)) break;
    const double scale = step / std::sqrt(grad_norm2);
    std::vector<Matrix> trial_blocks(x.blocks().begin(), x.blocks().end());
    for (std::size_t k = 0; k < trial_blocks.size(); ++k) trial_blocks[k] += scale * grad[k];
    const Element trial = normalized(Element(algebra, std::move(trial_blocks)), p);
    const double ft = norm_ratio(poly, trial, p);
    if (ft > f) {
      x = trial;
      f = ft;
    } else {
      step *= 0.5;
    }
  }
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------

PhiTable extract_phi(const HomPolynomial& p) {
  return extract_phi(p, Element::identity(p.algebra()));
}

PhiTable extract_phi(const HomPolynomial& p, const Element& basis_unitary) {
  const TracialAlgebra& algebra = p.algebra();
  if (!(basis_unitary.algebra() == algebra))
    throw StructuralError("extract_phi: basis unitary belongs to a different algebra");
  const int d = p.codomain().dimension();
  const Element one = Element::identity(algebra);

  PhiTable table{algebra, basis_unitary, {}};
  table.values.assign(static_cast<std::size_t>(d), {});
  for (auto& per_coord : table.values)
    for (const Block& b : algebra.blocks()) per_coord.push_back(Matrix::Zero(b.dim, b.dim));

  struct Probe {
    std::size_t block;
    int i, j;
  };
  std::vector<Probe> probes;
  for (std::size_t k = 0; k < algebra.num_blocks(); ++k)
    for (int j = 0; j < algebra.block(k).dim; ++j)
      for (int i = 0; i < algebra.block(k).dim; ++i) probes.push_back({k, i, j});

  std::vector<CodomainVector> results(probes.size());
  parallel_for(probes.size(), [&](std::size_t n) {
    const Probe& pr = probes[n];
    const Matrix& v = basis_unitary.block(pr.block);
    const Matrix b = v.col(pr.i) * v.col(pr.j).adjoint();  // V E_ij V*
    std::vector<Element> args(static_cast<std::size_t>(p.degree()), one);
    args[0] = block_restricted(algebra, pr.block, b);
    results[n] = p.polarize(args);
  });
  for (std::size_t n = 0; n < probes.size(); ++n)
    for (int c = 0; c < d; ++c)
      table.values[static_cast<std::size_t>(c)][probes[n].block](probes[n].i, probes[n].j) =
          results[n](c);
  return table;
}

std::vector<Element> zeta_from_phi(const PhiTable& table) {
  const TracialAlgebra& algebra = table.algebra;
  std::vector<Element> zetas;
  zetas.reserve(table.values.size());
  for (const auto& per_coord : table.values) {
    std::vector<Matrix> blocks;
    blocks.reserve(algebra.num_blocks());
    for (std::size_t k = 0; k < algebra.num_blocks(); ++k) {
      const Matrix& v = table.basis_unitary.block(k);
      // (V* zeta V)_{ji} = Phi(V E_ij V*) / w_k
      const Matrix rotated = per_coord[k].transpose() / algebra.block(k).weight;
      blocks.push_back(v * rotated * v.adjoint());
    }
    zetas.emplace_back(algebra, std::move(blocks));
  }
  return zetas;
}

std::vector<Element> reconstruct_zeta(const HomPolynomial& p) {
  return zeta_from_phi(extract_phi(p));
}

std::vector<Element> reconstruct_zeta(const HomPolynomial& p, const Element& basis_unitary) {
  return zeta_from_phi(extract_phi(p, basis_unitary));
}

double representation_residual(const HomPolynomial& p, std::span<const Element> zetas,
                               const Element& x) {
  if (static_cast<int>(zetas.size()) != p.codomain().dimension())
    throw StructuralError("representation_residual: one zeta per codomain coordinate expected");
  const CodomainVector px = p.evaluate(x);
  const Element xm = x.pow(p.degree());
  CodomainVector qx(px.size());
  for (std::size_t k = 0; k < zetas.size(); ++k)
    qx(static_cast<Eigen::Index>(k)) = trace(zetas[k] * xm);
  const QNormedCodomain& c = p.codomain();
  return c.norm(px - qx) / (1.0 + c.norm(px));
}

double verify_representation(const HomPolynomial& p, std::span<const Element> zetas,
                             std::size_t n_samples, std::uint64_t seed) {
  std::vector<double> residuals(n_samples, 0.0);
  parallel_for(n_samples, [&](std::size_t i) {
    const Element x = random_element(p.algebra(), ElementKind::general,
                                     derive_seed(seed, kVerifyStream, i));
    residuals[i] = representation_residual(p, zetas, x);
  });
  double worst = 0.0;
  for (double r : residuals)
    if (r > worst || std::isnan(r)) worst = r;
  return worst;
}

double zeta_distance(std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw StructuralError("zeta_distance: coordinate count differs");
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    diff = std::max(diff, operator_norm(a[k] - b[k]));
    scale = std::max(scale, operator_norm(a[k]));
  }
  return diff / (1.0 + scale);
}

double uniqueness_gap(const HomPolynomial& p, std::uint64_t seed) {
  const Element v = random_unitary(p.algebra(), derive_seed(seed, kGapStream));
  const auto standard = reconstruct_zeta(p);
  const auto rotated = reconstruct_zeta(p, v);
  return zeta_distance(standard, rotated);
}

PExponent representing_exponent(double p, int m) {
  if (p > m) return PExponent(p / (p - m));
  return PExponent::infinity();
}

double dual_norm(const Element& zeta, double p, int m) {
  if (!(p > 0.0)) throw UsageError("dual_norm: p must be positive");
  if (p > m) return norm_p(zeta, representing_exponent(p, m));
  if (p == m) return operator_norm(zeta);
  // On L^s with s = p/m < 1 the unit ball's extreme points are weighted
  // rank-one operators, so the norm is a weighted operator norm.
  const double s = p / m;
  const auto sv = singular_values(zeta);
  double best = 0.0;
  for (std::size_t k = 0; k < zeta.num_blocks(); ++k) {
    const double w = zeta.algebra().block(k).weight;
    best = std::max(best, std::pow(w, 1.0 - 1.0 / s) * sv[k].front());
  }
  return best;
}

ExtremalWitness extremal_witness(const Element& zeta, double p, int m) {
  if (m < 2) throw UsageError("extremal_witness: m must be >= 2");
  if (p < m) {
    std::ostringstream os;
    os << "extremal_witness: p = " << p << " < m = " << m << " is not supported";
    throw UnsupportedError(os.str());
  }
  const double scale = operator_norm(zeta);
  if (!(scale > 0.0)) throw PreconditionError("extremal_witness: zeta must be nonzero");
  const double herm = operator_norm(zeta - zeta.adjoint());
  if (herm > 1e-8 * scale) {
    throw PreconditionError("extremal_witness: zeta must be self-adjoint", herm);
  }

  const SpectralData spectrum = eig_hermitian(zeta);
  const Complex omega = std::polar(1.0, std::numbers::pi / m);
  const double inv_m = 1.0 / m;

  // y as a function of the eigenvalues of zeta, normalized in L^{p/m}.
  std::function<double(double)> y_of;
  if (p > m) {
    const double r = p / (p - m);
    const double nr = norm_p(zeta, r);
    const double denom = std::pow(nr, r - 1.0);
    y_of = [r, denom](double l) {
      if (l == 0.0) return 0.0;
      const double mag = std::pow(std::abs(l), r - 1.0) / denom;
      return l > 0.0 ? mag : -mag;
    };
  } else {
    // p == m: concentrate on the spectral projection of a top eigenvalue.
    double top = 0.0;
    for (const auto& block : spectrum.eigenvalues)
      for (double l : block)
        if (std::abs(l) > std::abs(top) || (std::abs(l) == std::abs(top) && l > top)) top = l;
    const double tol = cluster_tolerance(spectrum.max_abs_eigenvalue());
    double tau_e = 0.0;
    for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k)
      for (double l : spectrum.eigenvalues[k])
        if (std::abs(l - top) <= tol) tau_e += zeta.algebra().block(k).weight;
    const double sign = top > 0.0 ? 1.0 : -1.0;
    y_of = [top, tol, tau_e, sign](double l) {
      return std::abs(l - top) <= tol ? sign / tau_e : 0.0;
    };
  }

  ExtremalWitness w{Element::zero(zeta.algebra()), Element::zero(zeta.algebra()),
                    Element::zero(zeta.algebra()), 0.0, 0.0};
  w.plus_root = spectral_apply(spectrum, [&](double l) -> Complex {
    return std::pow(std::max(y_of(l), 0.0), inv_m);
  });
  w.minus_root = spectral_apply(spectrum, [&](double l) -> Complex {
    return std::pow(std::max(-y_of(l), 0.0), inv_m);
  });
  w.x = w.plus_root + omega * w.minus_root;
  w.achieved = trace(zeta * w.x.pow(m)).real();
  w.norm_x = norm_p(w.x, p);
  return w;
}

double norm_ratio(const HomPolynomial& p, const Element& x, double p_exp) {
  const double n = norm_p(x, p_exp);
  if (!(n > 0.0)) return 0.0;
  return p.codomain().norm(p.evaluate(x)) / std::pow(n, p.degree());
}

NormBounds norm_bound_suite(const HomPolynomial& p, std::span<const Element> zetas,
                            double p_exp, const NormSearchOptions& options) {
  const int m = p.degree();
  const double q = p.codomain().q();
  if (static_cast<int>(zetas.size()) != p.codomain().dimension())
    throw StructuralError("norm_bound_suite: one zeta per codomain coordinate expected");

  NormBounds out;
  double upper_q = 0.0;
  for (const Element& z : zetas) upper_q += std::pow(dual_norm(z, p_exp, m), q);
  out.upper_bound = std::pow(upper_q, 1.0 / q);

  // Random unit-norm starts.
  const std::size_t n_starts = std::max<std::size_t>(1, 10 * options.n_samples);
  std::vector<double> start_values(n_starts, 0.0);
  parallel_for(n_starts, [&](std::size_t i) {
    const Element x = random_element(p.algebra(), ElementKind::general,
                                     derive_seed(options.seed, kStartStream, i));
    start_values[i] = norm_ratio(p, x, p_exp);
  });
  const std::size_t best_random = static_cast<std::size_t>(
      std::max_element(start_values.begin(), start_values.end()) - start_values.begin());
  std::vector<Element> candidates{random_element(
      p.algebra(), ElementKind::general, derive_seed(options.seed, kStartStream, best_random))};
  double lower = start_values[best_random];

  // Structured starts: extremal witnesses of the hermitian and
  // skew-hermitian parts of every coordinate.
  if (p_exp >= m) {
    for (const Element& z : zetas) {
      for (const Element& h : {z.real_part(), z.imag_part()}) {
        if (!(operator_norm(h) > 0.0)) continue;
        const ExtremalWitness w = extremal_witness(h, p_exp, m);
        lower = std::max(lower, norm_ratio(p, w.x, p_exp));
        candidates.push_back(w.x);
      }
    }
  }

  std::vector<double> refined(candidates.size(), 0.0);
  parallel_for(candidates.size(), [&](std::size_t i) {
    refined[i] = gradient_ascent(p, candidates[i], p_exp, options);
  });
  for (double r : refined) lower = std::max(lower, r);

  out.lower_estimate = lower;
  out.sandwich_ok = out.lower_estimate <= out.upper_bound * (1.0 + 1e-9);
  return out;
}

RepresentationReport analyze_representation(const HomPolynomial& p, double p_exp,
                                             std::size_t n_samples, std::uint64_t seed) {
  RepresentationReport report;
  report.zeta = reconstruct_zeta(p);
  report.max_residual = verify_representation(p, report.zeta, n_samples, seed);
  report.uniqueness_gap = uniqueness_gap(p, seed);
  report.norm_data.r = representing_exponent(p_exp, p.degree());
  report.norm_data.p = p_exp;
  report.norm_data.m = p.degree();
  for (const Element& z : report.zeta)
    report.norm_data.per_coordinate.push_back(dual_norm(z, p_exp, p.degree()));
  return report;
}

}  // namespace polylab
