// Small dense matrices, row-major, with Gaussian-elimination kernels.
#ifndef MINSURF_MATRIX_HPP
#define MINSURF_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace minsurf {

struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> entries;  // row-major, rows*cols

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  static DenseMatrix identity(std::size_t n);
  DenseMatrix transposed() const;
};

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_inverse(const DenseMatrix& m);  // throws SingularMatrix
double mat_det(const DenseMatrix& m);

double mat_max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double frobenius_norm(const DenseMatrix& a);

// Solve a (small) linear system in place; a is overwritten.
std::vector<double> solve_linear(DenseMatrix a, std::vector<double> b);

// Singular values of an arbitrary rectangular matrix (descending), via
// Jacobi iteration on the Gram matrix.  Adequate for the small sizes here.
std::vector<double> singular_values(const DenseMatrix& a);

}  // namespace minsurf

#endif
