#pragma once

// Dense exact linear algebra over a field type F (Qir or Scalar).

#include <cstddef>
#include <vector>

#include "tama/error.hpp"

namespace tama {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<F>(rows, std::vector<F>(cols, F()));
}

template <class F>
Matrix<F> identity_matrix(std::size_t n, const F& diag = F(1)) {
  Matrix<F> m = zero_matrix<F>(n, n);
  for (std::size_t k = 0; k < n; ++k) m[k][k] = diag;
  return m;
}

template <class F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
  std::size_t n = a.size();
  std::size_t inner = b.size();
  std::size_t m = inner ? b[0].size() : 0;
  Matrix<F> out = zero_matrix<F>(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != inner) throw DimensionMismatch("matrix product of incompatible shapes");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

template <class F>
Matrix<F> matadd(Matrix<F> a, const Matrix<F>& b, const F& scale = F(1)) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!b[i][j].is_zero()) a[i][j] += scale * b[i][j];
  return a;
}

template <class F>
bool is_zero_matrix(const Matrix<F>& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

/// Conjugate transpose, using the field's conjugation `conj_fn`.
template <class F, class Conj>
Matrix<F> adjoint(const Matrix<F>& a, Conj conj_fn) {
  std::size_t n = a.size();
  std::size_t m = n ? a[0].size() : 0;
  Matrix<F> out = zero_matrix<F>(m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[j][i] = conj_fn(a[i][j]);
  return out;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& a) {
  std::vector<std::size_t> pivots;
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    F inv = F(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j)
      if (!a[r][j].is_zero()) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      F f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank_of(Matrix<F> a) {
  return rref(a).size();
}

/// Basis of {v : a v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> a, std::size_t cols) {
  for (auto& row : a)
    if (row.size() != cols) throw DimensionMismatch("ragged matrix");
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(cols, F());
    v[f] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!a[r][f].is_zero()) v[pivots[r]] = -a[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

/// Rank of a family of vectors.
template <class F>
std::size_t span_rank(const std::vector<std::vector<F>>& vs) {
  if (vs.empty()) return 0;
  return rank_of(Matrix<F>(vs.begin(), vs.end()));
}

/// Leading principal minors.
template <class F>
std::vector<F> leading_minors(const Matrix<F>& a) {
  std::vector<F> out;
  std::size_t n = a.size();
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<F> m = zero_matrix<F>(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = a[i][j];
    F det(1);
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && m[p][c].is_zero()) ++p;
      if (p == k) {
        det = F();
        break;
      }
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det = det * m[c][c];
      F inv = F(1) / m[c][c];
      for (std::size_t i = c + 1; i < k; ++i) {
        if (m[i][c].is_zero()) continue;
        F f = m[i][c] * inv;
        for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[c][j];
      }
    }
    out.push_back(det);
  }
  return out;
}

}  // namespace tama
