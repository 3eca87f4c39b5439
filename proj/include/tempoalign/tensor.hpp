#pragma once

#include <cstddef>
#include <vector>

#include "tempoalign/common.hpp"
#include "tempoalign/rng.hpp"

namespace tempoalign {

// Row-major dense matrix. The one value type shared by features, weights and
// similarity tables.
template <typename Real>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Real> values;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, Real fill = Real(0))
      : rows(r), cols(c), values(r * c, fill) {}

  Real& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  const Real& at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

  Real* row(std::size_t r) { return values.data() + r * cols; }
  const Real* row(std::size_t r) const { return values.data() + r * cols; }

  std::size_t numel() const { return rows * cols; }

  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

template <typename Real>
Matrix<Real> gaussian_matrix(std::size_t rows, std::size_t cols, Real stddev, RngKey key) {
  Matrix<Real> m(rows, cols);
  CounterRng rng(key);
  for (Real& x : m.values) x = static_cast<Real>(rng.next_gaussian()) * stddev;
  return m;
}

template <typename Real>
Vec<Real> gaussian_vec(std::size_t n, Real stddev, RngKey key) {
  Vec<Real> v(n);
  CounterRng rng(key);
  for (Real& x : v) x = static_cast<Real>(rng.next_gaussian()) * stddev;
  return v;
}

// y += A^T x  with A [n x m], x [n], y [m]
template <typename Real>
void add_At_x(const Matrix<Real>& a, const Real* x, Real* y) {
  for (std::size_t i = 0; i < a.rows; ++i) {
    const Real* arow = a.row(i);
    const Real xi = x[i];
    if (xi == Real(0)) continue;
    for (std::size_t j = 0; j < a.cols; ++j) y[j] += xi * arow[j];
  }
}

// y = x A + b  with A [n x m], x [n], b [m] (b may be null)
template <typename Real>
void affine(const Matrix<Real>& a, const Real* x, const Real* b, Real* y) {
  for (std::size_t j = 0; j < a.cols; ++j) y[j] = b ? b[j] : Real(0);
  add_At_x(a, x, y);
}

}  // namespace tempoalign
