#pragma once

// Dense matrices over any ring of the tower, with optional tensor-factor
// shape metadata for the t_a / tr_a calculus on (C^n)^{(x)k} (x) W.
//
// Sites are 1-based, as in L_a. Factor index order is big-endian: the first
// factor is the most significant digit of a row index.

#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgelfand/errors.hpp"

namespace qgelfand {

using Shape = std::vector<std::size_t>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, Shape shape) : Matrix(rows, cols) { set_shape(std::move(shape)); }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix identity(const Shape& shape) {
    Matrix m = identity(product(shape));
    m.set_shape(shape);
    return m;
  }
  // Matrix unit e_ij (0-based).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Shape& shape() const { return shape_; }
  bool has_shape() const { return !shape_.empty(); }

  void set_shape(Shape shape) {
    if (!shape.empty() && (product(shape) != rows_ || rows_ != cols_))
      throw ShapeError("factor shape does not match the matrix size");
    shape_ = std::move(shape);
  }
  Matrix with_shape(Shape shape) const {
    Matrix m = *this;
    m.set_shape(std::move(shape));
    return m;
  }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  std::size_t nonzeros() const {
    std::size_t k = 0;
    for (const auto& x : a_) k += x.is_zero() ? 0 : 1;
    return k;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  Matrix scaled(const T& s) const {
    Matrix r(rows_, cols_);
    r.shape_ = shape_;
    if (s.is_zero()) return r;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!a_[k].is_zero()) r.a_[k] = a_[k] * s;
    return r;
  }

  // Product skipping exact zeros on both sides.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    const auto bnz = b.row_nonzeros();
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j : bnz[k]) r(i, j) += aik * b(k, j);
      }
    }
    if (a.shape_ == b.shape_) r.shape_ = a.shape_;
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector product: size mismatch");
    std::vector<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      T acc{};
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& x = (*this)(i, j);
        if (!x.is_zero() && !v[j].is_zero()) acc += x * v[j];
      }
      r[i] = std::move(acc);
    }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    r.shape_ = shape_;
    return r;
  }

  T trace() const {
    if (!is_square()) throw ShapeError("trace of a non-square matrix");
    T acc{};
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    if (has_shape()) r.set_shape(shape_);
    return r;
  }

  // Column indices of the nonzero entries, row by row.
  std::vector<std::vector<std::size_t>> row_nonzeros() const {
    std::vector<std::vector<std::size_t>> nz(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) nz[i].push_back(j);
    return nz;
  }

  // Entry-wise equality; shape metadata is not compared.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  static std::size_t product(const Shape& s) {
    return std::accumulate(s.begin(), s.end(), std::size_t{1}, std::multiplies<>());
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum: sizes differ");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
  Shape shape_;
};

template <class T>
using Vector = std::vector<T>;

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const T& y = b(k, l);
          if (!y.is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  if (a.is_square() && b.is_square()) {
    Shape s = a.has_shape() ? a.shape() : Shape{a.rows()};
    const Shape sb = b.has_shape() ? b.shape() : Shape{b.rows()};
    s.insert(s.end(), sb.begin(), sb.end());
    r.set_shape(std::move(s));
  }
  return r;
}

namespace detail {

inline std::vector<std::size_t> digits(std::size_t index, const Shape& shape) {
  std::vector<std::size_t> d(shape.size());
  for (std::size_t f = shape.size(); f-- > 0;) {
    d[f] = index % shape[f];
    index /= shape[f];
  }
  return d;
}

inline std::size_t undigits(const std::vector<std::size_t>& d, const Shape& shape) {
  std::size_t index = 0;
  for (std::size_t f = 0; f < shape.size(); ++f) index = index * shape[f] + d[f];
  return index;
}

inline void check_site(std::size_t a, const Shape& shape) {
  if (shape.empty()) throw ShapeError("operation needs tensor-factor shape metadata");
  if (a < 1 || a > shape.size())
    throw ShapeError("site " + std::to_string(a) + " out of range 1.." + std::to_string(shape.size()));
}

}  // namespace detail

// A acting on the factors listed in sites (in that order), identity elsewhere.
template <class T>
Matrix<T> embed(const Matrix<T>& a, const std::vector<std::size_t>& sites, const Shape& shape) {
  for (std::size_t s : sites) detail::check_site(s, shape);
  for (std::size_t x = 0; x < sites.size(); ++x)
    for (std::size_t y = x + 1; y < sites.size(); ++y)
      if (sites[x] == sites[y]) throw ShapeError("embed: repeated site");
  Shape sub;
  for (std::size_t s : sites) sub.push_back(shape[s - 1]);
  if (Matrix<T>::product(sub) != a.rows() || !a.is_square()) throw ShapeError("embed: operator size does not match the sites");
  if (a.has_shape() && a.shape() != sub) throw ShapeError("embed: operator factor shape does not match the sites");

  const std::size_t dim = Matrix<T>::product(shape);
  Matrix<T> r(dim, dim, shape);
  const auto nz = a.row_nonzeros();
  for (std::size_t col = 0; col < dim; ++col) {
    const auto cd = detail::digits(col, shape);
    std::vector<std::size_t> sd(sites.size());
    for (std::size_t x = 0; x < sites.size(); ++x) sd[x] = cd[sites[x] - 1];
    const std::size_t acol = detail::undigits(sd, sub);
    for (std::size_t arow = 0; arow < a.rows(); ++arow) {
      const T& v = a(arow, acol);
      if (v.is_zero()) continue;
      auto rd = cd;
      const auto ad = detail::digits(arow, sub);
      for (std::size_t x = 0; x < sites.size(); ++x) rd[sites[x] - 1] = ad[x];
      r(detail::undigits(rd, shape), col) = v;
    }
  }
  return r;
}

template <class T>
Matrix<T> partial_transpose(const Matrix<T>& a, std::size_t site) {
  detail::check_site(site, a.shape());
  const Shape& shape = a.shape();
  Matrix<T> r(a.rows(), a.cols(), shape);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& v = a(i, j);
      if (v.is_zero()) continue;
      auto di = detail::digits(i, shape), dj = detail::digits(j, shape);
      std::swap(di[site - 1], dj[site - 1]);
      r(detail::undigits(di, shape), detail::undigits(dj, shape)) = v;
    }
  return r;
}

template <class T>
Matrix<T> partial_trace(const Matrix<T>& a, std::size_t site) {
  detail::check_site(site, a.shape());
  const Shape& shape = a.shape();
  Shape rest = shape;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(site - 1));
  const std::size_t dim = Matrix<T>::product(rest);
  Matrix<T> r(dim, dim);
  if (rest.size() > 1) r.set_shape(rest);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto di = detail::digits(i, shape);
    const std::size_t ti = di[site - 1];
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& v = a(i, j);
      if (v.is_zero()) continue;
      auto dj = detail::digits(j, shape);
      if (dj[site - 1] != ti) continue;
      auto ri = di, rj = dj;
      ri.erase(ri.begin() + static_cast<std::ptrdiff_t>(site - 1));
      rj.erase(rj.begin() + static_cast<std::ptrdiff_t>(site - 1));
      r(detail::undigits(ri, rest), detail::undigits(rj, rest)) += v;
    }
  }
  return r;
}

// First (row, col) where a and b differ, or nothing.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("comparison of matrices of different sizes");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return std::pair{i, j};
  return std::nullopt;
}

}  // namespace qgelfand
