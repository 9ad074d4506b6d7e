#include "polylab/rigidity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "polylab/error.hpp"
#include "polylab/parallel.hpp"
#include "polylab/schatten.hpp"

namespace polylab {

namespace {

constexpr std::uint64_t kRotationStream = 0x726f74;
constexpr std::uint64_t kProbeStream = 0x7072;
constexpr std::uint64_t kPositiveStream = 0x706f;
constexpr std::uint64_t kGeneralStream = 0x6765;

struct Candidate {
  Element x;
  Element y;
  Gadget gadget;
};

Element embed(const TracialAlgebra& algebra, std::size_t k, const Matrix& m) {
  Element e = Element::zero(algebra);
  std::vector<Matrix> blocks(e.blocks().begin(), e.blocks().end());
  blocks[k] = m;
  return Element(algebra, std::move(blocks));
}

Matrix unit(int n, int i, int j) {
  Matrix u = Matrix::Zero(n, n);
  u(i, j) = 1.0;
  return u;
}

// Gadget pairs in the fixed search order.
std::vector<Candidate> gadget_inventory(const TracialAlgebra& algebra, int m,
                                        std::size_t rotations) {
  const Complex omega = std::polar(1.0, std::numbers::pi / m);
  const Element one = Element::identity(algebra);
  std::vector<Candidate> out;

  auto for_each_unit = [&](auto&& fn) {
    for (std::size_t k = 0; k < algebra.num_blocks(); ++k) {
      const int n = algebra.block(k).dim;
      if (n < 2) continue;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) fn(k, n, i, j);
    }
  };

  // u = E_ij has u^2 = 0, hence u _|_ u*.
  for_each_unit([&](std::size_t k, int n, int i, int j) {
    const Element u = embed(algebra, k, unit(n, i, j));
    out.push_back({u, u.adjoint(), Gadget::nilpotent_pair});
  });
  for_each_unit([&](std::size_t k, int n, int i, int j) {
    const Element u = embed(algebra, k, unit(n, i, j));
    out.push_back({u, omega * u.adjoint(), Gadget::nilpotent_pair});
  });

  // v = 1 + u + u* - e - e' and v_w = 1 + w u + u* - e - e' are unitary;
  // left multiplication keeps the pair orthogonal.
  for_each_unit([&](std::size_t k, int n, int i, int j) {
    const Element u = embed(algebra, k, unit(n, i, j));
    const Element e = u.adjoint() * u;
    const Element e_prime = u * u.adjoint();
    const Element v = one + u + u.adjoint() - e - e_prime;
    const Element v_omega = one + omega * u + u.adjoint() - e - e_prime;
    out.push_back({v * u, v * u.adjoint(), Gadget::unitary_rotation});
    out.push_back({v_omega * u, v_omega * u.adjoint(), Gadget::unitary_rotation});
  });

  // (V u W*, V u* W*) stays orthogonal for any unitaries V, W.
  for (std::size_t t = 0; t < rotations; ++t) {
    const Element v = random_unitary(algebra, derive_seed(kRotationStream, t, 0));
    const Element w = random_unitary(algebra, derive_seed(kRotationStream, t, 1));
    for_each_unit([&](std::size_t k, int n, int i, int j) {
      const Matrix x = v.block(k) * unit(n, i, j) * w.block(k).adjoint();
      const Matrix y = v.block(k) * unit(n, j, i) * w.block(k).adjoint();
      out.push_back({embed(algebra, k, x), embed(algebra, k, y), Gadget::unitary_rotation});
      out.push_back({embed(algebra, k, x), embed(algebra, k, omega * y), Gadget::unitary_rotation});
    });
  }
  return out;
}

}  // namespace

std::string to_string(Gadget gadget) {
  switch (gadget) {
    case Gadget::nilpotent_pair: return "nilpotent-pair";
    case Gadget::unitary_rotation: return "unitary-rotation";
  }
  return "?";
}

std::optional<CounterexampleWitness> full_oa_counterexample(const HomPolynomial& p,
                                                            std::size_t rotations_per_block) {
  const auto inventory = gadget_inventory(p.algebra(), p.degree(), rotations_per_block);
  std::vector<double> residuals(inventory.size(), 0.0);
  parallel_for(inventory.size(), [&](std::size_t i) {
    residuals[i] = oa_residual(p, inventory[i].x, inventory[i].y);
  });
  for (std::size_t i = 0; i < inventory.size(); ++i) {
    if (residuals[i] > kWitnessThreshold) {
      CounterexampleWitness w{inventory[i].x, inventory[i].y, residuals[i], 0.0,
                              inventory[i].gadget, i};
      w.orth_residual = is_orthogonal(w.x, w.y).residual;
      return w;
    }
  }
  return std::nullopt;
}

double projection_vanishing_probe(const HomPolynomial& p, std::size_t n_samples,
                                  std::uint64_t seed) {
  const TracialAlgebra& algebra = p.algebra();
  std::vector<double> values(n_samples, 0.0);
  parallel_for(n_samples, [&](std::size_t i) {
    const std::uint64_t s = derive_seed(seed, kProbeStream, i);
    std::mt19937_64 engine(s);
    std::vector<int> ranks;
    for (const Block& b : algebra.blocks())
      ranks.push_back(std::uniform_int_distribution<int>(0, b.dim)(engine));
    const Element e = random_projection(algebra, ranks, s);
    values[i] = p.codomain().norm(p.evaluate(e));
  });
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, v);
  return worst;
}

ZeroCertificate zero_certificate(const HomPolynomial& p, std::size_t n_samples,
                                 std::uint64_t seed, double positive_tol,
                                 double global_tol) {
  const double bound = p.coefficient_bound();
  const int m = p.degree();

  auto relative = [&](const Element& x) {
    const double value = p.codomain().norm(p.evaluate(x));
    const double scale = bound * std::pow(operator_norm(x), m);
    if (scale > 0.0) return value / scale;
    return value > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  };
  auto worst_over = [&](ElementKind kind, std::uint64_t stream) {
    std::vector<double> r(n_samples, 0.0);
    parallel_for(n_samples, [&](std::size_t i) {
      r[i] = relative(random_element(p.algebra(), kind, derive_seed(seed, stream, i)));
    });
    double worst = 0.0;
    for (double v : r) worst = std::max(worst, v);
    return worst;
  };

  ZeroCertificate cert;
  cert.worst_positive = worst_over(ElementKind::positive, kPositiveStream);
  cert.vanishes_on_positives = cert.worst_positive <= positive_tol;
  if (cert.vanishes_on_positives) {
    cert.worst_general = worst_over(ElementKind::general, kGeneralStream);
    cert.vanishes_globally = cert.worst_general <= global_tol;
  }
  return cert;
}

}  // namespace polylab
