#pragma once

#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "polylab/algebra.hpp"

namespace polylab::test {

inline std::string fixture(const std::string& name) {
  return std::string(POLYLAB_FIXTURE_DIR) + "/" + name;
}

inline Element diag2(Complex a, Complex b, double weight = 1.0) {
  const Complex entries[] = {a, b};
  return Element::from_diagonal(TracialAlgebra::matrices(2, weight), entries);
}

inline Element single_block(const Matrix& m, double weight = 1.0) {
  return Element(TracialAlgebra::matrices(static_cast<int>(m.rows()), weight), {m});
}

inline double max_diff(const Element& a, const Element& b) { return (a - b).max_abs_entry(); }

// Schatten norm through Eigen's SVD, independent of the library's spectral code.
inline double svd_trace_power(const Element& x, double p) {
  double total = 0.0;
  for (std::size_t k = 0; k < x.num_blocks(); ++k) {
    Eigen::JacobiSVD<Matrix> svd(x.block(k));
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      const double s = svd.singularValues()(i);
      if (s > 0.0) total += x.algebra().block(k).weight * std::pow(s, p);
    }
  }
  return total;
}

inline double svd_norm(const Element& x, double p) {
  return std::pow(svd_trace_power(x, p), 1.0 / p);
}

inline double svd_operator_norm(const Element& x) {
  double best = 0.0;
  for (std::size_t k = 0; k < x.num_blocks(); ++k) {
    Eigen::JacobiSVD<Matrix> svd(x.block(k));
    if (svd.singularValues().size() > 0) best = std::max(best, svd.singularValues()(0));
  }
  return best;
}

}  // namespace polylab::test
