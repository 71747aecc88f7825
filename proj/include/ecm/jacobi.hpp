#pragma once

#include <cstddef>
#include <vector>

namespace ecm {

/// Row-major dense real matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  double max_abs() const;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j is the unit eigenvector of values[j]
  unsigned sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal mass falls below
/// `tolerance` (relative to the Frobenius norm). The input must be square and
/// symmetric.
SymmetricEigen jacobi_eigen(const DenseMatrix& a, double tolerance = 1e-12, unsigned max_sweeps = 100);

/// Number of eigenvalues with |value| > threshold.
std::size_t numerical_rank(const SymmetricEigen& eig, double threshold);

}  // namespace ecm
