#include "minsurf/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "minsurf/errors.hpp"

namespace minsurf {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double mat_max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    m = std::max(m, std::abs(a.entries[i] - b.entries[i]));
  return m;
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.entries) s += v * v;
  return std::sqrt(s);
}

namespace {

double matrix_scale(const DenseMatrix& m) {
  double s = 0.0;
  for (double v : m.entries) s = std::max(s, std::abs(v));
  return s;
}

// Gauss-Jordan with partial pivoting on [m | rhs]; rhs may be an identity
// block (inverse) or a single column (solve).
void eliminate(DenseMatrix& a, DenseMatrix& rhs) {
  const std::size_t n = a.rows;
  const double pivot_floor = 1e-12 * std::max(matrix_scale(a), 1e-300);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) < pivot_floor)
      throw SingularMatrix("mat_inverse: pivot below threshold");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      for (std::size_t j = 0; j < rhs.cols; ++j) std::swap(rhs(piv, j), rhs(col, j));
    }
    const double d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) a(col, j) /= d;
    for (std::size_t j = 0; j < rhs.cols; ++j) rhs(col, j) /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) a(r, j) -= f * a(col, j);
      for (std::size_t j = 0; j < rhs.cols; ++j) rhs(r, j) -= f * rhs(col, j);
    }
  }
}

}  // namespace

DenseMatrix mat_inverse(const DenseMatrix& m) {
  DenseMatrix a = m;
  DenseMatrix inv = DenseMatrix::identity(m.rows);
  eliminate(a, inv);
  return inv;
}

std::vector<double> solve_linear(DenseMatrix a, std::vector<double> b) {
  DenseMatrix rhs(a.rows, 1);
  for (std::size_t i = 0; i < a.rows; ++i) rhs(i, 0) = b[i];
  eliminate(a, rhs);
  return rhs.entries;
}

double mat_det(const DenseMatrix& m) {
  DenseMatrix a = m;
  const std::size_t n = a.rows;
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

std::vector<double> singular_values(const DenseMatrix& a) {
  // Gram matrix of the thinner side, then cyclic Jacobi.
  const bool tall = a.rows >= a.cols;
  const std::size_t n = tall ? a.cols : a.rows;
  DenseMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      const std::size_t m = tall ? a.rows : a.cols;
      for (std::size_t k = 0; k < m; ++k)
        s += (tall ? a(k, i) * a(k, j) : a(i, k) * a(j, k));
      g(i, j) = s;
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(g(p, q)));
    if (off < 1e-300 || off < 1e-16 * std::max(1.0, matrix_scale(g))) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (g(p, q) == 0.0) continue;
        const double theta = 0.5 * std::atan2(2.0 * g(p, q), g(q, q) - g(p, p));
        const double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t k = 0; k < n; ++k) {
          const double gpk = g(p, k), gqk = g(q, k);
          g(p, k) = c * gpk - s * gqk;
          g(q, k) = s * gpk + c * gqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double gkp = g(k, p), gkq = g(k, q);
          g(k, p) = c * gkp - s * gkq;
          g(k, q) = s * gkp + c * gkq;
        }
      }
  }
  std::vector<double> sv(n);
  for (std::size_t i = 0; i < n; ++i) sv[i] = std::sqrt(std::max(0.0, g(i, i)));
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

}  // namespace minsurf
