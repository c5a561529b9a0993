#pragma once

// Exact elimination over a field of the tower: rank, nullspace, inverse.
// Pivots are chosen by smallest weight() among the candidates of a column,
// which keeps intermediate entries small.

#include <cstddef>
#include <vector>

#include "qgelfand/errors.hpp"
#include "qgelfand/matrix.hpp"

namespace qgelfand {

namespace detail {

template <class T>
std::size_t pick_pivot(const Matrix<T>& a, std::size_t col, std::size_t from) {
  std::size_t best = a.rows();
  std::size_t best_w = 0;
  for (std::size_t r = from; r < a.rows(); ++r) {
    const T& x = a(r, col);
    if (x.is_zero()) continue;
    const std::size_t w = x.weight();
    if (best == a.rows() || w < best_w) {
      best = r;
      best_w = w;
    }
  }
  return best;
}

template <class T>
void swap_rows(Matrix<T>& a, std::size_t r, std::size_t s) {
  if (r == s) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(s, j));
}

// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    const std::size_t p = pick_pivot(a, col, row);
    if (p == a.rows()) continue;
    swap_rows(a, p, row);
    const T inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) a(row, j) = a(row, j) * inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = col; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) nz.push_back(j);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const T f = a(r, col);
      for (std::size_t j : nz) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class T>
std::size_t rank(Matrix<T> a) {
  return detail::rref(a).size();
}

// Basis of the right nullspace, one column per free variable (free entry 1).
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> a) {
  const auto pivots = detail::rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(a.cols());
    v[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!a(r, f).is_zero()) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::pick_pivot(aug, col, col);
    if (p == n) throw SingularMatrix(col);
    detail::swap_rows(aug, p, col);
    const T inv = aug(col, col).inverse();
    std::vector<std::size_t> nz;
    for (std::size_t j = col; j < 2 * n; ++j)
      if (!aug(col, j).is_zero()) {
        aug(col, j) = aug(col, j) * inv;
        nz.push_back(j);
      }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug(r, col).is_zero()) continue;
      const T f = aug(r, col);
      for (std::size_t j : nz) aug(r, j) -= f * aug(col, j);
    }
  }
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  if (a.has_shape()) inv.set_shape(a.shape());
  return inv;
}

template <class T>
T determinant(Matrix<T> a) {
  if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::pick_pivot(a, col, col);
    if (p == n) return T{};
    if (p != col) {
      detail::swap_rows(a, p, col);
      det = -det;
    }
    det *= a(col, col);
    const T inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const T f = a(r, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

}  // namespace qgelfand
