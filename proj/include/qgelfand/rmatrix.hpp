#pragma once

// The type A R-matrices R, R~, the permutation operators P, P^q, Q and the
// diagonal matrix D, together with the spectral R-matrix R - xR~, the f(x)
// series and the Yang-Baxter and crossing checks.

#include <stdexcept>
#include <string>
#include <vector>

#include "qgelfand/check.hpp"
#include "qgelfand/linalg.hpp"
#include "qgelfand/matrix.hpp"
#include "qgelfand/poly.hpp"
#include "qgelfand/scalar.hpp"

namespace qgelfand {

using SMatrix = Matrix<Scalar>;
using XScalar = UScalar;  // Q(q)(x)

struct RMatrixSet {
  int n = 0;
  SMatrix R, Rtilde, P, Pq, Q, D;
};

inline std::size_t pair_index(int n, int i, int j) { return static_cast<std::size_t>(i * n + j); }

inline RMatrixSet build_rmatrix_set(int n) {
  if (n < 1) throw std::invalid_argument("rank n must be at least 1");
  const std::size_t nn = static_cast<std::size_t>(n * n);
  const Shape sh{static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
  RMatrixSet s;
  s.n = n;
  s.R = SMatrix(nn, nn, sh);
  s.Rtilde = SMatrix(nn, nn, sh);
  s.P = SMatrix(nn, nn, sh);
  s.Pq = SMatrix(nn, nn, sh);
  s.Q = SMatrix(nn, nn, sh);
  const Scalar q = Scalar::q(), qi = Scalar::q_pow(-1), h = q - qi;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // e_ii (x) e_jj sits at ((i,j),(i,j)); e_ij (x) e_ji at ((i,j),(j,i)).
      const std::size_t d = pair_index(n, i, j), x = pair_index(n, j, i);
      s.R(d, d) = i == j ? q : Scalar(1);
      s.Rtilde(d, d) = i == j ? qi : Scalar(1);
      if (i < j) s.R(d, x) = h;
      if (i > j) s.Rtilde(d, x) = -h;
      s.P(d, x) = Scalar(1);
      s.Pq(d, x) = i == j ? Scalar(1) : (i > j ? q : qi);
      s.Q(pair_index(n, i, i), pair_index(n, j, j)) = Scalar(1);
    }
  std::vector<Scalar> diag;
  for (int i = 0; i < n; ++i) diag.push_back(Scalar::q_pow(n - 1 - 2 * i));
  s.D = SMatrix::diagonal(diag);
  return s;
}

// Entries of a Q(q)-matrix lifted into a field F containing Q(q).
template <class F>
Matrix<F> lift(const SMatrix& m);

template <>
inline Matrix<Scalar> lift<Scalar>(const SMatrix& m) {
  return m;
}
template <>
inline Matrix<UScalar> lift<UScalar>(const SMatrix& m) {
  return m.map([](const Scalar& s) { return UScalar(s); });
}
template <>
inline Matrix<XYScalar> lift<XYScalar>(const SMatrix& m) {
  return m.map([](const Scalar& s) { return XYScalar(UScalar(s)); });
}

// R - x R~ with x in any field of the tower.
template <class F>
Matrix<F> r0_at(const RMatrixSet& s, const F& x) {
  Matrix<F> r = lift<F>(s.R);
  const Matrix<F> t = lift<F>(s.Rtilde);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (!t(i, j).is_zero()) r(i, j) -= x * t(i, j);
  return r;
}

inline Matrix<XScalar> r0(const RMatrixSet& s) { return r0_at(s, XScalar::var()); }

inline std::string render_x(const XScalar& v) { return to_string(v, "x"); }

template <class F, class Render>
Outcome compare_matrices(const Matrix<F>& a, const Matrix<F>& b, Render render) {
  if (auto d = first_difference(a, b)) {
    const auto [i, j] = *d;
    return Outcome::fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ")", render(a(i, j)),
                         render(b(i, j)));
  }
  return Outcome::ok();
}

// R0_12(x) R0_13(xy) R0_23(y) = R0_23(y) R0_13(xy) R0_12(x) over Q(q)(x)(y).
inline Outcome check_yang_baxter(const RMatrixSet& s) {
  const XYScalar x(XScalar::var()), y = XYScalar::var();
  const std::size_t n = static_cast<std::size_t>(s.n);
  const Shape sh{n, n, n};
  const auto r12 = embed(r0_at(s, x), {1, 2}, sh);
  const auto r13 = embed(r0_at(s, x * y), {1, 3}, sh);
  const auto r23 = embed(r0_at(s, y), {2, 3}, sh);
  const auto lhs = r12 * r13 * r23;
  const auto rhs = r23 * r13 * r12;
  auto out = compare_matrices(lhs, rhs, [](const XYScalar& v) { return to_string(v); });
  if (out.pass) {
    out.lhs = "R12(x)R13(xy)R23(y), " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols());
    out.rhs = "R23(y)R13(xy)R12(x)";
  }
  return out;
}

// c(x) forced by the crossing relation and the functional equation for f.
inline XScalar predicted_crossing_scalar(int n) {
  const XScalar x = XScalar::var();
  const Scalar q = Scalar::q(), qi = Scalar::q_pow(-1), q2n = Scalar::q_pow(2 * n);
  const XScalar one(1);
  auto lin = [&](const Scalar& a, const Scalar& b) { return XScalar(a) - x * XScalar(b); };  // a - b x
  return lin(q, qi * q2n) / lin(q, qi) * lin(Scalar(1), Scalar(1)) * lin(Scalar(1), q2n) /
         (lin(Scalar(1), Scalar::q_pow(2)) * lin(Scalar(1), Scalar::q_pow(2 * n - 2)));
}

struct CrossingResult {
  Outcome proportional;  // left side is c(x) D_2
  Outcome prediction;    // c(x) equals the predicted scalar
  XScalar c;
};

// (R0(x)^-1)^{t2} D_2 R0(x q^{2n})^{t2} = c(x) D_2.
inline CrossingResult crossing_scalar(const RMatrixSet& s) {
  const int n = s.n;
  const std::size_t un = static_cast<std::size_t>(n);
  const XScalar x = XScalar::var();
  const Matrix<XScalar> a = r0_at(s, x).with_shape({un, un});
  const Matrix<XScalar> b = r0_at(s, x * XScalar(Scalar::q_pow(2 * n))).with_shape({un, un});
  const Matrix<XScalar> d2 = lift<XScalar>(kron(SMatrix::identity(un), s.D)).with_shape({un, un});
  const Matrix<XScalar> lhs = partial_transpose(inverse(a), 2) * d2 * partial_transpose(b, 2);
  CrossingResult res;
  res.c = lhs(0, 0) / d2(0, 0);
  const Matrix<XScalar> rhs = d2.scaled(res.c);
  res.proportional = compare_matrices(lhs, rhs, render_x);
  if (res.proportional.pass) {
    res.proportional.lhs = "(R0(x)^-1)^t2 D2 R0(xq^" + std::to_string(2 * n) + ")^t2";
    res.proportional.rhs = "c(x) D2";
  }
  res.prediction = compare(res.c, predicted_crossing_scalar(n), render_x, "c(x) differs from the predicted scalar");
  return res;
}

// Coefficients f_0 = 1, f_1, ..., f_order of the series f(x).
struct FSeries {
  int n = 0;
  int order = 0;
  std::vector<Scalar> f;
};

namespace detail {

// (1 - a x)(1 - b x) as coefficients {1, -(a+b), ab}.
inline std::vector<Scalar> quadratic(const Scalar& a, const Scalar& b) { return {Scalar(1), -(a + b), a * b}; }

inline Scalar coeff_or_zero(const std::vector<Scalar>& c, int k) {
  return k >= 0 && k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : Scalar();
}

}  // namespace detail

// f(x q^{2n}) (1-x)(1-x q^{2n}) = f(x) (1-x q^2)(1-x q^{2n-2}), solved one
// coefficient at a time: f_k (q^{2nk} - 1) = sum_{j<k} f_j (B_{k-j} - q^{2nj} A_{k-j}).
inline FSeries f_series(int n, int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  const auto A = detail::quadratic(Scalar(1), Scalar::q_pow(2 * n));
  const auto B = detail::quadratic(Scalar::q_pow(2), Scalar::q_pow(2 * n - 2));
  FSeries s{n, order, {Scalar(1)}};
  for (int k = 1; k <= order; ++k) {
    Scalar rhs;
    for (int j = std::max(0, k - 2); j < k; ++j) {
      const Scalar& fj = s.f[static_cast<std::size_t>(j)];
      rhs += fj * (detail::coeff_or_zero(B, k - j) - Scalar::q_pow(2 * n * j) * detail::coeff_or_zero(A, k - j));
    }
    s.f.push_back(rhs / (Scalar::q_pow(2 * n * k) - Scalar(1)));
  }
  return s;
}

inline USeries as_series(const FSeries& f) { return USeries{f.order, f.f}; }

// f(x q^{2n}) A(x) - f(x) B(x), coefficient by coefficient.
inline std::vector<Scalar> f_series_residual(const FSeries& s) {
  const int n = s.n;
  Poly<Scalar> fx(s.f), fshift = fx.rescaled_var(Scalar::q_pow(2 * n));
  const Poly<Scalar> A(detail::quadratic(Scalar(1), Scalar::q_pow(2 * n)));
  const Poly<Scalar> B(detail::quadratic(Scalar::q_pow(2), Scalar::q_pow(2 * n - 2)));
  const auto r = truncate(fshift * A - fx * B, s.order);
  return r.coeffs;
}

// Crossing with the full scalar factor f(x)/(q - q^-1 x), to order s.order in x:
// c(x) * (q - q^-1 x)/(q - q^{2n-1} x) * f(x q^{2n}) = f(x).
inline Outcome check_crossing_with_f(const FSeries& s, const XScalar& c) {
  const int n = s.n;
  const XScalar x = XScalar::var();
  const Scalar q = Scalar::q(), qi = Scalar::q_pow(-1);
  const XScalar factor = c * (XScalar(q) - x * XScalar(qi)) / (XScalar(q) - x * XScalar(Scalar::q_pow(2 * n - 1)));
  const Poly<Scalar> fx(s.f);
  const auto lhs = series_mul(factor.expand(s.order), truncate(fx.rescaled_var(Scalar::q_pow(2 * n)), s.order));
  const auto rhs = truncate(fx, s.order);
  for (int k = 0; k <= s.order; ++k)
    if (!(lhs.coeffs[static_cast<std::size_t>(k)] == rhs.coeffs[static_cast<std::size_t>(k)]))
      return Outcome::fail("coefficient of x^" + std::to_string(k), lhs.coeffs[static_cast<std::size_t>(k)].str(),
                           rhs.coeffs[static_cast<std::size_t>(k)].str());
  return Outcome::ok("series of (R(x)^-1)^t2 D2 R(xq^2n)^t2 / D2 to x^" + std::to_string(s.order), "1");
}

}  // namespace qgelfand
