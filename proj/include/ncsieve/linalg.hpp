#ifndef NCSIEVE_LINALG_HPP
#define NCSIEVE_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cyclo.hpp"

namespace ncsieve {

template <class F>
using Matrix = std::vector<std::vector<F>>;

using CMatrix = Matrix<Cyclotomic>;
using CVector = std::vector<Cyclotomic>;

template <class F>
Matrix<F> identity_matrix(std::size_t n) {
  Matrix<F> m(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  const std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  Matrix<F> out(r, std::vector<F>(c, F(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t l = 0; l < c; ++l)
        if (!b[j][l].is_zero()) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

template <class F>
std::vector<F> mat_vec(const Matrix<F>& a, const std::vector<F>& v) {
  std::vector<F> out(a.size(), F(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    F inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m).size();
}

// Basis of {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t cols) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
Matrix<F> inverse_matrix(const Matrix<F>& a) {
  const std::size_t n = a.size();
  Matrix<F> aug(n, std::vector<F>(2 * n, F(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = F(1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix<F> out(n, std::vector<F>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

// Common conductor of all entries, so that keys are comparable.
inline int common_conductor(const CMatrix& m) {
  int l = 1;
  for (const auto& row : m)
    for (const auto& x : row) l = std::lcm(l, x.conductor());
  return l;
}

inline CMatrix embed_matrix(const CMatrix& m, int conductor) {
  CMatrix out = m;
  for (auto& row : out)
    for (auto& x : row) x = x.embed(conductor);
  return out;
}

}  // namespace ncsieve

#endif
