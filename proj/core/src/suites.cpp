#include "polylab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "polylab/algebra.hpp"
#include "polylab/error.hpp"
#include "polylab/parallel.hpp"
#include "polylab/polynomial.hpp"
#include "polylab/representation.hpp"
#include "polylab/rigidity.hpp"
#include "polylab/schatten.hpp"
#include "polylab/spectral.hpp"

namespace polylab {

// ---------------------------------------------------------------------------
// Tolerances

Tolerances::Tolerances()
    : values_{
          {"tracial", 1e-11},
          {"pythagoras", 1e-8},
          {"holder", 1e-10},
          {"holder_equality", 1e-10},
          {"converse_pythagoras", 1e-12},
          {"eig_reconstruction", 1e-10},
          {"power_roundtrip", 1e-9},
          {"oa_sa", 1e-8},
          {"roundtrip", 1e-8},
          {"uniqueness", 1e-8},
          {"extremal", 1e-9},
          {"sandwich", 1e-9},
          {"hermitian_defect", 1e-10},
          {"hermitian_zeta", 1e-8},
          {"rigidity_witness", 1e-6},
          {"zero_positive", 1e-12},
          {"zero_global", 1e-8},
      } {}

double Tolerances::get(std::string_view name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw UsageError("unknown tolerance '" + std::string(name) + "'");
  return it->second;
}

void Tolerances::set(std::string_view name, double value) {
  const auto it = values_.find(name);
  if (it == values_.end()) throw UsageError("unknown tolerance '" + std::string(name) + "'");
  if (!(value >= 0.0) || !std::isfinite(value))
    throw UsageError("tolerance '" + std::string(name) + "' must be finite and non-negative");
  it->second = value;
}

void Tolerances::set_from_string(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw UsageError("tolerance override must look like name=value");
  const std::string value(assignment.substr(eq + 1));
  double v = 0.0;
  try {
    std::size_t used = 0;
    v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
  } catch (const std::exception&) {
    throw UsageError("tolerance override '" + std::string(assignment) + "': bad value");
  }
  set(assignment.substr(0, eq), v);
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<TracialAlgebra>& mixed_algebras() {
  static const std::vector<TracialAlgebra> list{
      TracialAlgebra::matrices(2),
      TracialAlgebra::matrices(3),
      TracialAlgebra({{2, 0.5}, {1, 2.0}}),
      TracialAlgebra({{3, 1.5}, {2, 0.25}}),
      TracialAlgebra({{1, 1.0}, {1, 0.3}, {2, 1.7}}),
      TracialAlgebra({{4, 0.75}}),
      TracialAlgebra({{8, 1.0}, {4, 0.5}, {1, 3.0}}),
  };
  return list;
}

// Algebras small enough for finite-difference ascent.
const std::vector<TracialAlgebra>& small_algebras() {
  static const std::vector<TracialAlgebra> list{
      TracialAlgebra::matrices(2),
      TracialAlgebra({{2, 0.5}, {1, 2.0}}),
      TracialAlgebra({{1, 1.0}, {2, 1.0}}),
      TracialAlgebra({{2, 1.3}, {1, 0.4}, {1, 1.0}}),
  };
  return list;
}

const std::vector<TracialAlgebra>& unit_weight_algebras() {
  static const std::vector<TracialAlgebra> list{
      TracialAlgebra::matrices(2),
      TracialAlgebra::matrices(3),
      TracialAlgebra({{2, 1.0}, {1, 1.0}}),
  };
  return list;
}

template <typename T>
const T& pick(const std::vector<T>& v, std::size_t i) {
  return v[i % v.size()];
}

struct CaseOutcome {
  bool failed = false;
  double measure = 0.0;
};

enum class Worst { max, min };

// Runs n independent cases and folds them into a PropertyResult.
PropertyResult run_cases(std::string suite, std::string name, std::string description,
                         std::size_t n, double threshold, Worst worst_kind,
                         const std::function<CaseOutcome(std::size_t)>& body) {
  std::vector<CaseOutcome> outcomes(n);
  parallel_for(n, [&](std::size_t i) { outcomes[i] = body(i); });

  PropertyResult r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  r.description = std::move(description);
  r.cases = n;
  r.threshold = threshold;
  r.worst = worst_kind == Worst::max ? -kInf : kInf;
  for (const CaseOutcome& o : outcomes) {
    if (o.failed) ++r.failures;
    if (worst_kind == Worst::max) {
      if (o.measure > r.worst || std::isnan(o.measure)) r.worst = o.measure;
    } else {
      r.worst = std::min(r.worst, o.measure);
    }
  }
  return r;
}

std::size_t cases(const SuiteConfig& c, std::size_t fallback) {
  return c.samples.value_or(fallback);
}

// FNV-1a, so property streams do not depend on the standard library's hash.
std::uint64_t stream_id(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t case_seed(const SuiteConfig& c, std::string_view property, std::size_t i) {
  return derive_seed(c.seed, stream_id(property), i);
}

double relative(double a, double b) {
  const double scale = std::abs(b);
  return scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b);
}

}  // namespace

namespace properties {

PropertyResult tracial_identity(const SuiteConfig& c) {
  const double tol = c.tol.get("tracial");
  return run_cases("metrics", "tracial_identity", "tau(xy) = tau(yx)", cases(c, 1000), tol,
                   Worst::max, [&](std::size_t i) {
                     const std::uint64_t s = case_seed(c, "tracial", i);
                     const TracialAlgebra& a = pick(mixed_algebras(), i);
                     const Element x = random_element(a, ElementKind::general, derive_seed(s, 1));
                     const Element y = random_element(a, ElementKind::general, derive_seed(s, 2));
                     const Complex txy = trace(x * y);
                     const double r = std::abs(txy - trace(y * x)) / (1.0 + std::abs(txy));
                     return CaseOutcome{r > tol, r};
                   });
}

PropertyResult pythagoras(const SuiteConfig& c) {
  const double tol = c.tol.get("pythagoras");
  static const double ps[] = {0.5, 1.0, 2.0, 3.0, 4.0};
  static const Complex omegas[] = {Complex(1.0), Complex(-1.0), Complex(0.0, 1.0)};
  PropertyResult r = run_cases(
      "metrics", "pythagoras", "||x + w y||_p^p = ||x||_p^p + ||y||_p^p for orthogonal positives",
      cases(c, 1000), tol, Worst::max, [&](std::size_t i) {
        const TracialAlgebra& a = pick(mixed_algebras(), i);
        const OrthogonalPair pair =
            random_orthogonal_pair(a, Cone::positive, case_seed(c, "pythagoras", i));
        CaseOutcome out;
        for (double p : ps) {
          const double scale = trace_abs_power(pair.x, p) + trace_abs_power(pair.y, p);
          for (Complex w : omegas) {
            const double rel = pythagoras_residual(pair.x, pair.y, p, w) / std::max(scale, 1e-300);
            out.measure = std::max(out.measure, rel);
            if (rel > tol) out.failed = true;
          }
        }
        return out;
      });
  r.note = "each case covers p in {0.5,1,2,3,4} and w in {1,-1,i}";
  return r;
}

PropertyResult holder(const SuiteConfig& c) {
  const double tol = c.tol.get("holder");
  static const double grid[] = {0.5, 1.0, 2.0, 4.0, kInf};
  return run_cases("metrics", "holder", "||xy||_r <= ||x||_p ||y||_q", cases(c, 1000), tol,
                   Worst::max, [&](std::size_t i) {
                     const std::uint64_t s = case_seed(c, "holder", i);
                     const TracialAlgebra& a = pick(mixed_algebras(), i);
                     const Element x = random_element(a, ElementKind::general, derive_seed(s, 1));
                     const Element y = random_element(a, ElementKind::general, derive_seed(s, 2));
                     const PExponent p(grid[i % 5]);
                     const PExponent q(grid[(i / 5) % 5]);
                     const HolderCheck h = holder_check(x, y, p, q);
                     const double excess = h.lhs / h.rhs - 1.0;
                     return CaseOutcome{h.lhs > h.rhs * (1.0 + tol), excess};
                   });
}

PropertyResult holder_equality(const SuiteConfig& c) {
  const double tol = c.tol.get("holder_equality");
  return run_cases("metrics", "holder_equality", "x = y = |z|, p = q = 2 saturates Hoelder",
                   cases(c, 1000), tol, Worst::max, [&](std::size_t i) {
                     const TracialAlgebra& a = pick(mixed_algebras(), i);
                     const Element z = random_element(a, ElementKind::general,
                                                      case_seed(c, "holder_equality", i));
                     const Element abs_z = absolute_value(z);
                     const HolderCheck h = holder_check(abs_z, abs_z, PExponent(2.0), PExponent(2.0));
                     const double rel = relative(h.lhs, h.rhs);
                     return CaseOutcome{rel > tol, rel};
                   });
}

PropertyResult converse_pythagoras(const SuiteConfig& c) {
  const double tol = c.tol.get("converse_pythagoras");
  static const double ps[] = {0.5, 1.0, 3.0, 4.0};
  PropertyResult r = run_cases(
      "metrics", "converse_pythagoras",
      "non-orthogonal pairs never satisfy both sign identities (p != 2)", cases(c, 1000), tol,
      Worst::min, [&](std::size_t i) {
        const TracialAlgebra& a = pick(mixed_algebras(), i);
        const std::uint64_t s = case_seed(c, "converse", i);
        for (std::uint64_t attempt = 0;; ++attempt) {
          const Element x = random_element(a, ElementKind::general, derive_seed(s, attempt, 1));
          const Element y = random_element(a, ElementKind::general, derive_seed(s, attempt, 2));
          const ConversePythagorasProbe probe = converse_pythagoras_probe(x, y, ps[i % 4]);
          if (probe.orth_residual < 0.1) continue;
          const double largest = std::max(probe.res_plus, probe.res_minus);
          return CaseOutcome{largest <= tol || !probe.contract_holds(), largest};
        }
      });
  r.note = "worst = smallest max(res_plus, res_minus) seen; must stay above threshold";
  return r;
}

PropertyResult eigen_reconstruction(const SuiteConfig& c) {
  const double tol = c.tol.get("eig_reconstruction");
  return run_cases("metrics", "eigen_reconstruction",
                   "||U L U* - x|| and ||U*U - 1|| on hermitians up to dim 8", cases(c, 1000), tol,
                   Worst::max, [&](std::size_t i) {
                     const TracialAlgebra a = TracialAlgebra::matrices(1 + static_cast<int>(i % 8));
                     const Element x = random_element(a, ElementKind::hermitian,
                                                      case_seed(c, "eig", i));
                     const SpectralData s = eig_hermitian(x);
                     const double scale = operator_norm(x);
                     const double rec = operator_norm(s.reconstruct() - x) / scale;
                     const double uni = operator_norm(s.unitary.adjoint() * s.unitary -
                                                      Element::identity(a));
                     const double worst = std::max(rec, uni);
                     return CaseOutcome{worst > tol, worst};
                   });
}

PropertyResult power_roundtrip(const SuiteConfig& c) {
  const double tol = c.tol.get("power_roundtrip");
  return run_cases("metrics", "power_roundtrip", "(x^{1/m})^m = x on positives, m in {2,3,4}",
                   cases(c, 1000), tol, Worst::max, [&](std::size_t i) {
                     const TracialAlgebra& a = pick(mixed_algebras(), i);
                     const int m = 2 + static_cast<int>(i % 3);
                     const Element x = random_element(a, ElementKind::positive,
                                                      case_seed(c, "power", i));
                     const Element root = functional_calculus(x, SpectralMap::power(1.0 / m));
                     const double rel = operator_norm(root.pow(m) - x) / operator_norm(x);
                     return CaseOutcome{rel > tol, rel};
                   });
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Element> random_zetas(const TracialAlgebra& a, int d, std::uint64_t seed) {
  std::vector<Element> z;
  for (int k = 0; k < d; ++k)
    z.push_back(random_element(a, ElementKind::general, derive_seed(seed, 0x7a, k)));
  return z;
}

// Scalar hermitian regimes: p > m on any weights, p = m on unit weights.
struct HermitianCase {
  TracialAlgebra algebra;
  int m;
  double p;
};

HermitianCase hermitian_case(std::size_t i, bool small) {
  const int m = 2 + static_cast<int>(i % 2);
  if (i % 3 == 2) {
    return {pick(unit_weight_algebras(), i / 3), m, static_cast<double>(m)};
  }
  static const double offsets[] = {0.5, 1.0, 2.0, 3.5};
  const auto& algebras = small ? small_algebras() : mixed_algebras();
  return {pick(algebras, i / 2), m, m + offsets[(i / 3) % 4]};
}

}  // namespace

PropertyResult oa_sa(const SuiteConfig& c) {
  const double tol = c.tol.get("oa_sa");
  PropertyResult r = run_cases(
      "representation", "oa_sa", "P_zeta is orthogonally additive on hermitian pairs",
      cases(c, 100), tol, Worst::max, [&](std::size_t i) {
        const std::uint64_t s = case_seed(c, "oa_sa", i);
        const TracialAlgebra& a = pick(mixed_algebras(), i);
        const int d = 1 + static_cast<int>(i % 3);
        const int m = 2 + static_cast<int>((i / 3) % 3);
        const double q = (i % 2 == 0) ? 1.0 : 0.5;
        const auto zetas = random_zetas(a, d, s);
        const HomPolynomial p = HomPolynomial::from_zeta(zetas, m, q);
        const OAReport rep = check_orthogonal_additivity(p, Cone::sa, 50, derive_seed(s, 9), tol);
        return CaseOutcome{!rep.passed, rep.max_residual};
      });
  r.note = "50 orthogonal hermitian pairs per zeta-list";
  return r;
}

PropertyResult representation_roundtrip(const SuiteConfig& c) {
  const double tol = c.tol.get("roundtrip");
  return run_cases("representation", "roundtrip",
                   "reconstruct_zeta(P_zeta) = zeta and basis gap, mixed weights, m in {2,3}",
                   cases(c, 100), tol, Worst::max, [&](std::size_t i) {
                     const std::uint64_t s = case_seed(c, "roundtrip", i);
                     const TracialAlgebra& a = pick(mixed_algebras(), i);
                     const int m = 2 + static_cast<int>(i % 2);
                     const int d = 1 + static_cast<int>((i / 2) % 2);
                     const auto zetas = random_zetas(a, d, s);
                     const HomPolynomial p = HomPolynomial::from_zeta(zetas, m);
                     const double dist = std::max(zeta_distance(zetas, reconstruct_zeta(p)),
                                                  uniqueness_gap(p, derive_seed(s, 1)));
                     return CaseOutcome{dist > tol, dist};
                   });
}

PropertyResult uniqueness(const SuiteConfig& c) {
  const double tol = c.tol.get("uniqueness");
  return run_cases("representation", "uniqueness",
                   "independent probing bases reconstruct the same zeta", cases(c, 100), tol,
                   Worst::max, [&](std::size_t i) {
                     const std::uint64_t s = case_seed(c, "uniqueness", i);
                     const TracialAlgebra& a = pick(mixed_algebras(), i);
                     const int m = 2 + static_cast<int>(i % 2);
                     const auto zetas = random_zetas(a, 1, s);
                     const HomPolynomial p = HomPolynomial::from_zeta(zetas, m);
                     const auto first =
                         reconstruct_zeta(p, random_unitary(a, derive_seed(s, 1)));
                     const auto second =
                         reconstruct_zeta(p, random_unitary(a, derive_seed(s, 2)));
                     const double gap = std::max(
                         {zeta_distance(first, second), zeta_distance(zetas, first),
                          uniqueness_gap(p, derive_seed(s, 3))});
                     return CaseOutcome{gap > tol, gap};
                   });
}

PropertyResult extremal_attainment(const SuiteConfig& c) {
  const double tol = c.tol.get("extremal");
  PropertyResult r = run_cases(
      "representation", "extremal_attainment",
      "hermitian zeta: witness has ||x||_p = 1 and tau(zeta x^m) = ||Phi_zeta||", cases(c, 100),
      tol, Worst::max, [&](std::size_t i) {
        const HermitianCase hc = hermitian_case(i, false);
        const Element zeta = random_element(hc.algebra, ElementKind::hermitian,
                                            case_seed(c, "extremal", i));
        const ExtremalWitness w = extremal_witness(zeta, hc.p, hc.m);
        const double target = dual_norm(zeta, hc.p, hc.m);
        const double err = std::max({relative(w.achieved, target), std::abs(w.norm_x - 1.0)});
        const double orth = is_orthogonal(w.plus_root, w.minus_root).residual;
        return CaseOutcome{err > tol || orth > 1e-10, err};
      });
  r.note = "p > m on mixed weights, p = m on unit weights";
  return r;
}

PropertyResult sandwich_scalar(const SuiteConfig& c) {
  const double tol = c.tol.get("sandwich");
  return run_cases("representation", "sandwich_scalar",
                   "hermitian scalar case: lower estimate = upper bound = ||Phi||",
                   cases(c, 100), tol, Worst::max, [&](std::size_t i) {
                     const std::uint64_t s = case_seed(c, "sandwich_scalar", i);
                     const HermitianCase hc = hermitian_case(i, true);
                     const Element zeta = random_element(hc.algebra, ElementKind::hermitian, s);
                     const HomPolynomial p = HomPolynomial::from_zeta(zeta, hc.m);
                     NormSearchOptions opt;
                     opt.n_samples = 1;
                     opt.seed = derive_seed(s, 1);
                     const NormBounds b =
                         norm_bound_suite(p, std::span<const Element>(&zeta, 1), hc.p, opt);
                     const bool sandwich = b.lower_estimate <= b.upper_bound * (1.0 + tol);
                     const double gap = relative(b.lower_estimate, b.upper_bound);
                     return CaseOutcome{!sandwich || gap > tol, gap};
                   });
}

PropertyResult sandwich_vector(const SuiteConfig& c) {
  const double tol = c.tol.get("sandwich");
  PropertyResult r = run_cases(
      "representation", "sandwich_vector",
      "l_q valued P_zeta: sampled ||P|| <= (sum ||Phi_k||^q)^{1/q}", cases(c, 100), tol,
      Worst::max, [&](std::size_t i) {
        const std::uint64_t s = case_seed(c, "sandwich_vector", i);
        const TracialAlgebra& a = pick(small_algebras(), i);
        const int m = 2 + static_cast<int>(i % 2);
        const int d = 2 + static_cast<int>((i / 2) % 2);
        const double q = (i / 4) % 2 == 0 ? 1.0 : 0.5;
        static const double offsets[] = {0.0, 1.0, 2.0};
        const double p_exp = m + offsets[(i / 8) % 3];
        const auto zetas = random_zetas(a, d, s);
        const HomPolynomial p = HomPolynomial::from_zeta(zetas, m, q);
        NormSearchOptions opt;
        opt.n_samples = 1;
        opt.ascent_iters = 60;
        opt.seed = derive_seed(s, 1);
        const NormBounds b = norm_bound_suite(p, zetas, p_exp, opt);
        const double excess = b.lower_estimate / b.upper_bound - 1.0;
        return CaseOutcome{b.lower_estimate > b.upper_bound * (1.0 + tol), excess};
      });
  r.note = "worst = lower/upper - 1 (<= 0 means strictly inside)";
  return r;
}

PropertyResult hermitian_correspondence(const SuiteConfig& c) {
  const double defect_tol = c.tol.get("hermitian_defect");
  const double zeta_tol = c.tol.get("hermitian_zeta");
  PropertyResult r = run_cases(
      "representation", "hermitian_correspondence",
      "P_zeta hermitian <=> zeta self-adjoint", cases(c, 100), defect_tol, Worst::max,
      [&](std::size_t i) {
        const std::uint64_t s = case_seed(c, "hermitian", i);
        const TracialAlgebra& a = pick(mixed_algebras(), i);
        const int m = 2 + static_cast<int>(i % 3);
        const Element h = random_element(a, ElementKind::hermitian, derive_seed(s, 1));
        const Element k = random_element(a, ElementKind::hermitian, derive_seed(s, 2));
        static const double perturbations[] = {0.0, 1.0, 1e-3, 1e-5};
        const Element zeta = h + Complex(0.0, perturbations[i % 4]) * k;
        const HomPolynomial p = HomPolynomial::from_zeta(zeta, m);
        const double defect = hermitian_defect(p, 32, derive_seed(s, 3));
        const bool poly_hermitian = defect <= defect_tol;
        const bool zeta_hermitian =
            operator_norm(zeta - zeta.adjoint()) <= zeta_tol * operator_norm(zeta);
        return CaseOutcome{poly_hermitian != zeta_hermitian, poly_hermitian ? defect : 0.0};
      });
  r.note = "worst = largest defect among cases classified hermitian";
  return r;
}

// ---------------------------------------------------------------------------

PropertyResult rigidity_witness(const SuiteConfig& c) {
  const double tol = c.tol.get("rigidity_witness");
  static const TracialAlgebra algebra({{2, 1.0}, {3, 1.0}});
  PropertyResult r = run_cases(
      "rigidity", "rigidity_witness",
      "nonzero P_zeta on M2+M3 has an orthogonal pair violating additivity", cases(c, 100), tol,
      Worst::min, [&](std::size_t i) {
        const std::uint64_t s = case_seed(c, "rigidity", i);
        const int m = 2 + static_cast<int>(i % 3);
        const Element zeta = (i % 2 == 0)
                                 ? random_element(algebra, ElementKind::general, s)
                                 : random_element(algebra, ElementKind::hermitian, s);
        const auto w = full_oa_counterexample(HomPolynomial::from_zeta(zeta, m));
        if (!w) return CaseOutcome{true, 0.0};
        return CaseOutcome{w->residual < tol || w->orth_residual > 1e-10, w->residual};
      });
  r.note = "worst = smallest witness residual";
  return r;
}

PropertyResult rigidity_none(const SuiteConfig& c) {
  return run_cases(
      "rigidity", "rigidity_none",
      "no witness for P = 0 or for P_zeta on commutative algebras", cases(c, 100), 0.0,
      Worst::max, [&](std::size_t i) {
        const std::uint64_t s = case_seed(c, "rigidity_none", i);
        const int m = 2 + static_cast<int>(i % 3);
        std::optional<CounterexampleWitness> w;
        if (i % 2 == 0) {
          const TracialAlgebra& a = pick(mixed_algebras(), i / 2);
          const HomPolynomial zero(m, QNormedCodomain(1, 1.0), a, {});
          w = full_oa_counterexample(zero);
        } else {
          const TracialAlgebra a = TracialAlgebra::diagonal(1 + static_cast<int>((i / 2) % 5));
          const auto zetas = random_zetas(a, 1 + static_cast<int>(i % 2), s);
          w = full_oa_counterexample(HomPolynomial::from_zeta(zetas, m));
        }
        return CaseOutcome{w.has_value(), w ? w->residual : 0.0};
      });
}

PropertyResult zero_chain(const SuiteConfig& c) {
  const double pos_tol = c.tol.get("zero_positive");
  const double global_tol = c.tol.get("zero_global");
  PropertyResult r = run_cases(
      "rigidity", "zero_chain",
      "vanishing on positives implies vanishing everywhere", cases(c, 100), global_tol,
      Worst::max, [&](std::size_t i) {
        const std::uint64_t s = case_seed(c, "zero_chain", i);
        const TracialAlgebra& a = pick(mixed_algebras(), i / 5);
        const int m = 2 + static_cast<int>(i % 3);
        const auto zetas = random_zetas(a, 1, s);
        const HomPolynomial pz = HomPolynomial::from_zeta(zetas, m);
        const Element one = Element::identity(a);
        std::vector<HomPolynomial> family;
        family.push_back(HomPolynomial(m, QNormedCodomain(1, 1.0), a, {}));
        family.push_back(pz);
        family.push_back(pz - pz);
        family.push_back(pz - pz.adjoint().adjoint());
        {
          // tau(A x B x ...) and its cyclic rotation agree, so the difference is zero.
          const Element a_f = random_element(a, ElementKind::general, derive_seed(s, 0xa));
          const Element b_f = random_element(a, ElementKind::general, derive_seed(s, 0xb));
          std::vector<Element> lhs(static_cast<std::size_t>(m), one);
          std::vector<Element> rhs(static_cast<std::size_t>(m), one);
          lhs[0] = a_f;
          lhs[1] = b_f;
          rhs[0] = b_f;
          rhs[static_cast<std::size_t>(m) - 1] = a_f;
          family.push_back(HomPolynomial(m, QNormedCodomain(1, 1.0), a,
                                         {TraceMonomial{1.0, 0, lhs}, TraceMonomial{-1.0, 0, rhs}}));
        }
        if (a.block(0).dim >= 2) {
          std::vector<Element> factors(static_cast<std::size_t>(m), one);
          factors[0] = Element::matrix_unit(a, 0, 0, 0);
          factors[1] = Element::matrix_unit(a, 0, 1, 1);
          family.push_back(HomPolynomial(m, QNormedCodomain(1, 1.0), a,
                                         {TraceMonomial{1.0, 0, factors}}));
        }
        CaseOutcome out;
        for (std::size_t f = 0; f < family.size(); ++f) {
          const ZeroCertificate z =
              zero_certificate(family[f], 20, derive_seed(s, f), pos_tol, global_tol);
          if (z.vanishes_on_positives && z.vanishes_globally == false) out.failed = true;
          if (z.vanishes_on_positives) out.measure = std::max(out.measure, z.worst_general);
        }
        return out;
      });
  r.note = "each case certifies 0, P_zeta, P_zeta - P_zeta, P - P**, a cyclic cancellation and tau(E11 x E22 x ...)";
  return r;
}

}  // namespace properties

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() { return {"metrics", "representation", "rigidity"}; }

bool is_known_suite(std::string_view name) {
  if (name == "all") return true;
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

std::vector<PropertyResult> run_suite(std::string_view name, const SuiteConfig& config) {
  if (!is_known_suite(name)) throw UsageError("unknown suite '" + std::string(name) + "'");
  using Fn = PropertyResult (*)(const SuiteConfig&);
  struct Entry {
    const char* suite;
    Fn fn;
  };
  static const Entry registry[] = {
      {"metrics", properties::tracial_identity},
      {"metrics", properties::eigen_reconstruction},
      {"metrics", properties::power_roundtrip},
      {"metrics", properties::pythagoras},
      {"metrics", properties::holder},
      {"metrics", properties::holder_equality},
      {"metrics", properties::converse_pythagoras},
      {"representation", properties::oa_sa},
      {"representation", properties::representation_roundtrip},
      {"representation", properties::uniqueness},
      {"representation", properties::extremal_attainment},
      {"representation", properties::sandwich_scalar},
      {"representation", properties::sandwich_vector},
      {"representation", properties::hermitian_correspondence},
      {"rigidity", properties::rigidity_witness},
      {"rigidity", properties::rigidity_none},
      {"rigidity", properties::zero_chain},
  };
  std::vector<PropertyResult> out;
  for (const Entry& e : registry)
    if (name == "all" || name == e.suite) out.push_back(e.fn(config));
  return out;
}

}  // namespace polylab
