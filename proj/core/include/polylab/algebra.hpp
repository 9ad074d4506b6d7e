#pragma once

// Finite-dimensional tracial von Neumann algebras.
//
// An algebra is a direct sum M_{n_1} (+) ... (+) M_{n_k} of full complex
// matrix blocks together with strictly positive weights w_1..w_k.  The trace
// is tau(x) = sum_k w_k Tr(x_k); every faithful normal trace on a
// finite-dimensional von Neumann algebra has this form.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace polylab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr int kDefaultMaxBlockDim = 64;

struct Block {
  int dim = 1;
  double weight = 1.0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Immutable handle to a block structure. Copies share storage.
class TracialAlgebra {
 public:
  /// Throws StructuralError on an empty block list, a non-positive
  /// dimension, a dimension above max_block_dim, or a weight that is not
  /// strictly positive and finite.
  explicit TracialAlgebra(std::vector<Block> blocks,
                          int max_block_dim = kDefaultMaxBlockDim);

  /// M_n with the trace weight * Tr.
  static TracialAlgebra matrices(int n, double weight = 1.0);
  /// C^n as n one-dimensional blocks of weight 1.
  static TracialAlgebra diagonal(int n);

  std::span<const Block> blocks() const { return *blocks_; }
  std::size_t num_blocks() const { return blocks_->size(); }
  const Block& block(std::size_t k) const { return (*blocks_)[k]; }

  /// Real dimension count is twice this: sum of dim^2.
  std::size_t total_dimension() const;
  /// tau(1) = sum of weight * dim.
  double trace_of_identity() const;
  /// True when every block has dim 1.
  bool is_commutative() const;
  bool has_noncommutative_block() const { return !is_commutative(); }

  friend bool operator==(const TracialAlgebra& a, const TracialAlgebra& b) {
    return a.blocks_ == b.blocks_ || *a.blocks_ == *b.blocks_;
  }

 private:
  std::shared_ptr<const std::vector<Block>> blocks_;
};

/// Block-diagonal operator in a TracialAlgebra.
class Element {
 public:
  /// Throws StructuralError if the number or shape of blocks disagrees with
  /// the algebra.
  Element(TracialAlgebra algebra, std::vector<Matrix> blocks);

  static Element zero(const TracialAlgebra& algebra);
  static Element identity(const TracialAlgebra& algebra);
  /// E_{ij} in block `block` (zero-based indices).
  static Element matrix_unit(const TracialAlgebra& algebra, std::size_t block,
                             int i, int j);
  /// Diagonal element, entries listed block by block.
  static Element from_diagonal(const TracialAlgebra& algebra,
                               std::span<const Complex> entries);

  const TracialAlgebra& algebra() const { return algebra_; }
  std::span<const Matrix> blocks() const { return blocks_; }
  const Matrix& block(std::size_t k) const { return blocks_[k]; }
  std::size_t num_blocks() const { return blocks_.size(); }

  Element adjoint() const;
  Element real_part() const;  // (x + x*)/2
  Element imag_part() const;  // i(x* - x)/2
  /// x^n for integer n >= 0.
  Element pow(int n) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(Complex s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Complex(-1.0); }
  friend Element operator*(Element a, Complex s) { return a *= s; }
  friend Element operator*(Complex s, Element a) { return a *= s; }
  friend Element operator*(double s, Element a) { return a *= Complex(s); }
  friend Element operator*(const Element& a, const Element& b);

  /// Exact (bitwise) equality of algebra and entries.
  friend bool operator==(const Element& a, const Element& b);

  /// Largest absolute entry over all blocks.
  double max_abs_entry() const;

  // Predicates measured in the operator norm.
  bool is_hermitian(double tol) const;
  bool is_positive(double tol) const;
  bool is_projection(double tol) const;

 private:
  TracialAlgebra algebra_;
  std::vector<Matrix> blocks_;
};

/// Throws StructuralError unless both elements live in the same algebra.
void require_same_algebra(const Element& a, const Element& b);

/// tau(x) = sum_k w_k Tr(x_k).
Complex trace(const Element& x);

/// Operator norm ||x||_inf (largest singular value over all blocks).
double operator_norm(const Element& x);

enum class ElementKind { general, hermitian, positive, projection };

/// Deterministic given (algebra, kind, seed).
///   general:    i.i.d. standard complex Gaussian entries
///   hermitian:  (g + g*)/2
///   positive:   g* g
///   projection: spectral projection of a random hermitian onto its
///               positive eigenvalues
Element random_element(const TracialAlgebra& algebra, ElementKind kind,
                       std::uint64_t seed);

/// Haar-like random unitary (QR of a Gaussian matrix, phases fixed).
Element random_unitary(const TracialAlgebra& algebra, std::uint64_t seed);

/// Random projection whose rank in block k is ranks[k].
Element random_projection(const TracialAlgebra& algebra,
                          std::span<const int> ranks, std::uint64_t seed);

/// Random projection with rank drawn uniformly from [1, dim-1] in blocks with
/// dim >= 2 and from {0, 1} in one-dimensional blocks.
Element random_proper_projection(const TracialAlgebra& algebra,
                                 std::uint64_t seed);

/// Mixes (seed, stream, index) into an independent 64-bit seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index = 0);

}  // namespace polylab
