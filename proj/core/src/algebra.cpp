#include "polylab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "polylab/error.hpp"
#include "polylab/spectral.hpp"

namespace polylab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  // Standard complex Gaussian: E|z|^2 = 1.
  Complex complex_normal() {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

  Matrix matrix(int n) {
    Matrix g(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) g(i, j) = complex_normal();
    return g;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

Matrix unitary_from_gaussian(const Matrix& g) {
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int k = 0; k < g.cols(); ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    if (a > 0.0) q.col(k) *= d / a;
  }
  return q;
}

Matrix projection_block(const Matrix& u, int rank) {
  const auto cols = u.leftCols(rank);
  return cols * cols.adjoint();
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) + index);
}

// ---------------------------------------------------------------------------
// TracialAlgebra

TracialAlgebra::TracialAlgebra(std::vector<Block> blocks, int max_block_dim) {
  if (blocks.empty()) throw StructuralError("algebra needs at least one block");
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Block& b = blocks[k];
    if (b.dim < 1 || b.dim > max_block_dim) {
      std::ostringstream os;
      os << "block " << k << ": dimension " << b.dim << " outside [1, "
         << max_block_dim << "]";
      throw StructuralError(os.str());
    }
    if (!(b.weight > 0.0) || !std::isfinite(b.weight)) {
      std::ostringstream os;
      os << "block " << k << ": trace weight must be positive and finite, got "
         << b.weight;
      throw StructuralError(os.str());
    }
  }
  blocks_ = std::make_shared<const std::vector<Block>>(std::move(blocks));
}

TracialAlgebra TracialAlgebra::matrices(int n, double weight) {
  return TracialAlgebra({Block{n, weight}});
}

TracialAlgebra TracialAlgebra::diagonal(int n) {
  return TracialAlgebra(std::vector<Block>(static_cast<std::size_t>(n), Block{1, 1.0}));
}

std::size_t TracialAlgebra::total_dimension() const {
  std::size_t total = 0;
  for (const Block& b : *blocks_) total += static_cast<std::size_t>(b.dim) * b.dim;
  return total;
}

double TracialAlgebra::trace_of_identity() const {
  double t = 0.0;
  for (const Block& b : *blocks_) t += b.weight * b.dim;
  return t;
}

bool TracialAlgebra::is_commutative() const {
  return std::all_of(blocks_->begin(), blocks_->end(),
                     [](const Block& b) { return b.dim == 1; });
}

// ---------------------------------------------------------------------------
// Element

Element::Element(TracialAlgebra algebra, std::vector<Matrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
  if (blocks_.size() != algebra_.num_blocks()) {
    std::ostringstream os;
    os << "element has " << blocks_.size() << " blocks, algebra has "
       << algebra_.num_blocks();
    throw StructuralError(os.str());
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const int n = algebra_.block(k).dim;
    if (blocks_[k].rows() != n || blocks_[k].cols() != n) {
      std::ostringstream os;
      os << "block " << k << " is " << blocks_[k].rows() << "x" << blocks_[k].cols()
         << ", expected " << n << "x" << n;
      throw StructuralError(os.str());
    }
  }
}

Element Element::zero(const TracialAlgebra& algebra) {
  std::vector<Matrix> blocks;
  blocks.reserve(algebra.num_blocks());
  for (const Block& b : algebra.blocks()) blocks.push_back(Matrix::Zero(b.dim, b.dim));
  return Element(algebra, std::move(blocks));
}

Element Element::identity(const TracialAlgebra& algebra) {
  std::vector<Matrix> blocks;
  blocks.reserve(algebra.num_blocks());
  for (const Block& b : algebra.blocks()) blocks.push_back(Matrix::Identity(b.dim, b.dim));
  return Element(algebra, std::move(blocks));
}

Element Element::matrix_unit(const TracialAlgebra& algebra, std::size_t block,
                             int i, int j) {
  if (block >= algebra.num_blocks())
    throw StructuralError("matrix unit: block index out of range");
  const int n = algebra.block(block).dim;
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw StructuralError("matrix unit: entry index out of range");
  Element e = zero(algebra);
  e.blocks_[block](i, j) = 1.0;
  return e;
}

Element Element::from_diagonal(const TracialAlgebra& algebra,
                               std::span<const Complex> entries) {
  Element e = zero(algebra);
  std::size_t pos = 0;
  for (std::size_t k = 0; k < algebra.num_blocks(); ++k) {
    const int n = algebra.block(k).dim;
    for (int i = 0; i < n; ++i) {
      if (pos >= entries.size())
        throw StructuralError("from_diagonal: too few diagonal entries");
      e.blocks_[k](i, i) = entries[pos++];
    }
  }
  if (pos != entries.size()) throw StructuralError("from_diagonal: too many diagonal entries");
  return e;
}

Element Element::adjoint() const {
  std::vector<Matrix> out;
  out.reserve(blocks_.size());
  for (const Matrix& b : blocks_) out.push_back(b.adjoint());
  return Element(algebra_, std::move(out));
}

Element Element::real_part() const {
  std::vector<Matrix> out;
  out.reserve(blocks_.size());
  for (const Matrix& b : blocks_) out.push_back(0.5 * (b + b.adjoint()));
  return Element(algebra_, std::move(out));
}

Element Element::imag_part() const {
  const Complex half_i(0.0, 0.5);
  std::vector<Matrix> out;
  out.reserve(blocks_.size());
  for (const Matrix& b : blocks_) out.push_back(half_i * (b.adjoint() - b));
  return Element(algebra_, std::move(out));
}

Element Element::pow(int n) const {
  if (n < 0) throw UsageError("Element::pow: negative exponent");
  Element result = identity(algebra_);
  for (int i = 0; i < n; ++i) result = result * *this;
  return result;
}

void require_same_algebra(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra()))
    throw StructuralError("elements belong to different algebras");
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(*this, other);
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += other.blocks_[k];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_algebra(*this, other);
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= other.blocks_[k];
  return *this;
}

Element& Element::operator*=(Complex s) {
  for (Matrix& b : blocks_) b *= s;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  std::vector<Matrix> out;
  out.reserve(a.blocks_.size());
  for (std::size_t k = 0; k < a.blocks_.size(); ++k)
    out.push_back(a.blocks_[k] * b.blocks_[k]);
  return Element(a.algebra_, std::move(out));
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.algebra_ == b.algebra_)) return false;
  for (std::size_t k = 0; k < a.blocks_.size(); ++k)
    if (a.blocks_[k] != b.blocks_[k]) return false;
  return true;
}

double Element::max_abs_entry() const {
  double m = 0.0;
  for (const Matrix& b : blocks_)
    if (b.size() > 0) m = std::max(m, b.cwiseAbs().maxCoeff());
  return m;
}

bool Element::is_hermitian(double tol) const {
  return operator_norm(*this - adjoint()) <= tol;
}

bool Element::is_positive(double tol) const {
  if (!is_hermitian(tol)) return false;
  for (const Matrix& b : blocks_) {
    const HermitianEigen eig = jacobi_eigen(b);
    if (eig.values.size() > 0 && eig.values(0) < -tol) return false;
  }
  return true;
}

bool Element::is_projection(double tol) const {
  return is_hermitian(tol) && operator_norm(*this * *this - *this) <= tol;
}

// ---------------------------------------------------------------------------

Complex trace(const Element& x) {
  Complex t = 0.0;
  for (std::size_t k = 0; k < x.num_blocks(); ++k)
    t += x.algebra().block(k).weight * x.block(k).trace();
  return t;
}

double operator_norm(const Element& x) {
  double best = 0.0;
  for (const Matrix& b : x.blocks()) {
    if (b.size() == 0) continue;
    if (b.rows() == 1) {
      best = std::max(best, std::abs(b(0, 0)));
      continue;
    }
    const HermitianEigen eig = jacobi_eigen(b.adjoint() * b);
    best = std::max(best, std::sqrt(std::max(0.0, eig.values(eig.values.size() - 1))));
  }
  return best;
}

Element random_element(const TracialAlgebra& algebra, ElementKind kind,
                       std::uint64_t seed) {
  GaussianSource source(derive_seed(seed, static_cast<std::uint64_t>(kind) + 1));
  std::vector<Matrix> blocks;
  blocks.reserve(algebra.num_blocks());
  for (const Block& b : algebra.blocks()) {
    const Matrix g = source.matrix(b.dim);
    switch (kind) {
      case ElementKind::general:
        blocks.push_back(g);
        break;
      case ElementKind::hermitian:
        blocks.push_back(0.5 * (g + g.adjoint()));
        break;
      case ElementKind::positive:
        blocks.push_back(g.adjoint() * g);
        break;
      case ElementKind::projection: {
        const HermitianEigen eig = jacobi_eigen(0.5 * (g + g.adjoint()));
        Matrix e = Matrix::Zero(b.dim, b.dim);
        for (int i = 0; i < b.dim; ++i) {
          if (eig.values(i) > 0.0) {
            const auto v = eig.vectors.col(i);
            e += v * v.adjoint();
          }
        }
        blocks.push_back(std::move(e));
        break;
      }
    }
  }
  return Element(algebra, std::move(blocks));
}

Element random_unitary(const TracialAlgebra& algebra, std::uint64_t seed) {
  GaussianSource source(derive_seed(seed, 0x756e6974));
  std::vector<Matrix> blocks;
  blocks.reserve(algebra.num_blocks());
  for (const Block& b : algebra.blocks())
    blocks.push_back(unitary_from_gaussian(source.matrix(b.dim)));
  return Element(algebra, std::move(blocks));
}

Element random_projection(const TracialAlgebra& algebra, std::span<const int> ranks,
                          std::uint64_t seed) {
  if (ranks.size() != algebra.num_blocks())
    throw StructuralError("random_projection: one rank per block expected");
  const Element u = random_unitary(algebra, derive_seed(seed, 0x70726f6a));
  std::vector<Matrix> blocks;
  blocks.reserve(algebra.num_blocks());
  for (std::size_t k = 0; k < algebra.num_blocks(); ++k) {
    const int n = algebra.block(k).dim;
    if (ranks[k] < 0 || ranks[k] > n)
      throw StructuralError("random_projection: rank out of range");
    blocks.push_back(projection_block(u.block(k), ranks[k]));
  }
  return Element(algebra, std::move(blocks));
}

Element random_proper_projection(const TracialAlgebra& algebra, std::uint64_t seed) {
  std::mt19937_64 engine(derive_seed(seed, 0x72616e6b));
  std::vector<int> ranks;
  ranks.reserve(algebra.num_blocks());
  for (const Block& b : algebra.blocks()) {
    const int lo = b.dim >= 2 ? 1 : 0;
    const int hi = b.dim >= 2 ? b.dim - 1 : 1;
    ranks.push_back(std::uniform_int_distribution<int>(lo, hi)(engine));
  }
  return random_projection(algebra, ranks, seed);
}

}  // namespace polylab
