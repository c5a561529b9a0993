#pragma once

// Central elements of the RTT algebra on concrete representations: quantum
// minors, determinants and comatrices, the series z(u), the quantum Gelfand
// invariants tr_q M^m, and the closed-form eigenvalues with their q -> 1
// limits.
//
// Everything sign-dependent is computed in the pencil variable t of
// Pencil: t = u for sign +, t = u^-1 for sign -.

#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qgelfand/check.hpp"
#include "qgelfand/hecke.hpp"
#include "qgelfand/representation.hpp"

namespace qgelfand {

// q-numbers as used by the closed formulas. The perturbed variant adds
// sign(k) to [k]_q for |k| >= 2.
struct QNumbers {
  bool perturbed = false;

  Scalar operator()(int k) const {
    Scalar s = qnum(k);
    if (perturbed && (k >= 2 || k <= -2)) s += Scalar(k > 0 ? 1 : -1);
    return s;
  }
};

inline std::string render_u(const UScalar& r) { return to_string(r, "u"); }

// r(t) with t = u^-1, rewritten as a function of u.
inline UScalar t_inverse_in_u(const UScalar& r) {
  auto rev = [](const Poly<Scalar>& p) {
    std::vector<Scalar> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly<Scalar>(c);
  };
  const int dn = r.num().degree(), dd = r.den().degree();
  if (r.is_zero()) return r;
  Poly<Scalar> num = rev(r.num()), den = rev(r.den());
  if (dd > dn) num = num.shifted(dd - dn);
  if (dn > dd) den = den.shifted(dn - dd);
  return UScalar(num, den);
}

inline UScalar in_u(const UScalar& r_t, Sign s) { return s == Sign::plus ? r_t : t_inverse_in_u(r_t); }

namespace detail {

inline Scalar minus_q_pow(int l) { return (l % 2 == 0 ? Scalar(1) : Scalar(-1)) * Scalar::q_pow(-l); }  // (-q)^{-l}

inline SVector block_of(const SVector& v, int i, std::size_t d) {
  const auto b = v.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i) * d);
  return SVector(b, b + static_cast<std::ptrdiff_t>(d));
}

inline SVector lift_block(const SVector& x, int i, int n, std::size_t d) {
  SVector v(static_cast<std::size_t>(n) * d);
  std::copy(x.begin(), x.end(), v.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i) * d));
  return v;
}

inline void axpy(SVector& y, const Scalar& a, const SVector& x) {
  if (a.is_zero()) return;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) y[k] += a * x[k];
}

inline SMatrix sub_block(const SMatrix& m, int i, int j, std::size_t d) {
  SMatrix r(d, d);
  const std::size_t oi = static_cast<std::size_t>(i) * d, oj = static_cast<std::size_t>(j) * d;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) r(a, b) = m(oi + a, oj + b);
  return r;
}

inline std::vector<Scalar> d_weights(int n, bool inverse) {
  std::vector<Scalar> w;
  for (int i = 0; i < n; ++i) w.push_back(Scalar::q_pow(inverse ? -(n - 1 - 2 * i) : n - 1 - 2 * i));
  return w;
}

// sum_i w_i * block (i, i) of an operator on C^n (x) W
inline SMatrix aux_trace(const SMatrix& m, const std::vector<Scalar>& w, std::size_t d) {
  SMatrix r(d, d);
  for (std::size_t i = 0; i < w.size(); ++i) r += sub_block(m, static_cast<int>(i), static_cast<int>(i), d).scaled(w[i]);
  return r;
}

inline OpPoly aux_trace(const OpPoly& p, const std::vector<Scalar>& w, std::size_t d) {
  return p.map([&](const SMatrix& m) { return aux_trace(m, w, d); });
}

}  // namespace detail

// Row-sparse generator images, shared by the vector routes.
struct SparseImages {
  int n = 0;
  std::size_t d = 0;
  std::vector<SparseOp> plus, minus;

  explicit SparseImages(const Representation& rep) : n(rep.n), d(rep.d) {
    for (const auto& m : rep.plus) plus.emplace_back(m);
    for (const auto& m : rep.minus) minus.emplace_back(m);
  }
  const SparseOp& at(Sign s, int i, int j) const {
    const auto k = static_cast<std::size_t>(i * n + j);
    return s == Sign::plus ? plus[k] : minus[k];
  }
};

// The operators A, B of the pencil L(u) = A - B t and K = B A^-1.
class EvaluatedRep {
 public:
  EvaluatedRep(const Representation& rep, Sign s) : rep_(&rep), pencil_{s, rep.n, rep.d}, a_(rep, s), b_(rep, opposite(s)) {}

  const Representation& rep() const { return *rep_; }
  const Pencil& pencil() const { return pencil_; }
  const BlockOperator& a() const { return a_; }
  const BlockOperator& b() const { return b_; }
  int n() const { return pencil_.n; }
  std::size_t d() const { return pencil_.d; }
  std::size_t dim() const { return a_.dim(); }

  SVector apply_k(const SVector& v) const { return b_.apply(a_.solve(v)); }          // B A^-1
  SVector apply_k_left(const SVector& v) const { return a_.solve(b_.apply(v)); }     // A^-1 B

  SMatrix dense(const std::function<SVector(const SVector&)>& f) const {
    SMatrix m(dim(), dim(), {static_cast<std::size_t>(n()), d()});
    for (std::size_t c = 0; c < dim(); ++c) {
      SVector e(dim());
      e[c] = Scalar(1);
      const SVector col = f(e);
      for (std::size_t r = 0; r < dim(); ++r) m(r, c) = col[r];
    }
    return m;
  }

 private:
  const Representation* rep_;
  Pencil pencil_;
  BlockOperator a_, b_;
};

// tr W^m-type operators: sum_i w_i * block_ii(X^m) for m = 0..m_max, where X
// is applied to the vectors e_i (x) e_w.
inline std::vector<SMatrix> aux_trace_powers(int n, std::size_t d, const std::vector<Scalar>& w,
                                             const std::function<SVector(const SVector&)>& x, int m_max) {
  std::vector<SMatrix> out(static_cast<std::size_t>(m_max) + 1, SMatrix(d, d));
  for (int i = 0; i < n; ++i)
    for (std::size_t col = 0; col < d; ++col) {
      SVector e(d);
      e[col] = Scalar(1);
      SVector v = detail::lift_block(e, i, n, d);
      for (int m = 0; m <= m_max; ++m) {
        if (m > 0) v = x(v);
        const SVector blk = detail::block_of(v, i, d);
        for (std::size_t r = 0; r < d; ++r)
          if (!blk[r].is_zero()) out[static_cast<std::size_t>(m)](r, col) += w[static_cast<std::size_t>(i)] * blk[r];
      }
    }
  return out;
}

// Scalars by which sum_i w_i * block_ii(X^m) act on xi, m = 0..m_max.
inline std::vector<Scalar> aux_trace_power_scalars(int n, std::size_t d, const std::vector<Scalar>& w,
                                                   const std::function<SVector(const SVector&)>& x, const SVector& xi,
                                                   int m_max) {
  std::vector<SVector> acc(static_cast<std::size_t>(m_max) + 1, SVector(d));
  for (int i = 0; i < n; ++i) {
    SVector v = detail::lift_block(xi, i, n, d);
    for (int m = 0; m <= m_max; ++m) {
      if (m > 0) v = x(v);
      detail::axpy(acc[static_cast<std::size_t>(m)], w[static_cast<std::size_t>(i)], detail::block_of(v, i, d));
    }
  }
  std::vector<Scalar> out;
  for (const auto& a : acc) out.push_back(is_zero_vector(a) ? Scalar() : proportionality(a, xi));
  return out;
}

// tr_q M^m = tr D M^m with M = L- (L+)^-1, for m = 0..m_max.
inline std::vector<SMatrix> gelfand_invariants(const Representation& rep, int m_max) {
  const EvaluatedRep ev(rep, Sign::plus);
  return aux_trace_powers(rep.n, rep.d, detail::d_weights(rep.n, false), [&](const SVector& v) { return ev.apply_k(v); },
                          m_max);
}

inline SMatrix gelfand_invariant(const Representation& rep, int m) { return gelfand_invariants(rep, m).back(); }

inline std::vector<Scalar> gelfand_scalars(const Representation& rep, const SVector& xi, int m_max) {
  const EvaluatedRep ev(rep, Sign::plus);
  return aux_trace_power_scalars(rep.n, rep.d, detail::d_weights(rep.n, false),
                                 [&](const SVector& v) { return ev.apply_k(v); }, xi, m_max);
}

inline Outcome centrality_check(const Representation& rep, const SMatrix& op) {
  for (Sign s : {Sign::plus, Sign::minus})
    for (int i = 0; i < rep.n; ++i)
      for (int j = 0; j < rep.n; ++j) {
        const SMatrix& g = rep.image(s, i, j);
        if (g.is_zero()) continue;
        const SMatrix l = op * g, r = g * op;
        if (auto diff = first_difference(l, r))
          return Outcome::fail(std::string("[Z, l") + sign_name(s) + "_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                   "] != 0 at (" + std::to_string(diff->first) + "," + std::to_string(diff->second) + ")",
                               l(diff->first, diff->second).str(), r(diff->first, diff->second).str());
      }
  return Outcome::ok("[Z, l+-_ij]", "0");
}

// Linear dependence among successively added vectors, by incremental
// elimination with fully reduced rows.
class KrylovBasis {
 public:
  // If v = sum_k c_k v_k over the vectors added so far, returns c and leaves
  // the basis unchanged; otherwise stores v.
  std::optional<std::vector<Scalar>> add(const SVector& v) {
    SVector w = v;
    std::vector<Scalar> comb(count_ + 1);
    comb[count_] = Scalar(1);
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      const Scalar a = w[pivots_[j]];
      if (a.is_zero()) continue;
      detail::axpy(w, -a, rows_[j]);
      for (std::size_t k = 0; k < combs_[j].size(); ++k) comb[k] -= a * combs_[j][k];
    }
    if (is_zero_vector(w)) {
      std::vector<Scalar> c(count_);
      for (std::size_t k = 0; k < count_; ++k) c[k] = -comb[k];
      return c;
    }
    std::size_t p = 0;
    while (w[p].is_zero()) ++p;
    const Scalar inv = w[p].inverse();
    for (auto& x : w) x = x * inv;
    for (auto& x : comb) x = x * inv;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      const Scalar b = rows_[j][p];
      if (b.is_zero()) continue;
      detail::axpy(rows_[j], -b, w);
      combs_[j].resize(count_ + 1);
      for (std::size_t k = 0; k < comb.size(); ++k) combs_[j][k] -= b * comb[k];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    combs_.push_back(std::move(comb));
    ++count_;
    return std::nullopt;
  }

 private:
  std::vector<SVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Scalar>> combs_;
  std::size_t count_ = 0;
};

namespace detail {

// From K^r x = sum_{k<r} c_k K^k x: the reversed polynomial 1 - sum c_k t^{r-k}.
inline std::vector<Scalar> reversed_relation(const std::vector<Scalar>& c) {
  const std::size_t r = c.size();
  std::vector<Scalar> beta(r + 1);
  beta[0] = Scalar(1);
  for (std::size_t k = 0; k < r; ++k) beta[r - k] = -c[k];
  return beta;
}

}  // namespace detail

// (1 - K t)^-1 b = num(t) / den(t) with den(0) = 1.
struct VectorResolvent {
  Poly<Scalar> den;
  std::vector<SVector> num;  // coefficient of t^m
};

inline VectorResolvent vector_resolvent(const std::function<SVector(const SVector&)>& k, const SVector& b) {
  if (is_zero_vector(b)) return {Poly<Scalar>(Scalar(1)), {}};
  KrylovBasis basis;
  std::vector<SVector> powers{b};
  basis.add(b);
  std::vector<Scalar> c;
  for (;;) {
    SVector next = k(powers.back());
    if (auto rel = basis.add(next)) {
      c = *rel;
      break;
    }
    powers.push_back(std::move(next));
  }
  const auto beta = detail::reversed_relation(c);
  VectorResolvent res{Poly<Scalar>(beta), {}};
  for (std::size_t m = 0; m < c.size(); ++m) {
    SVector acc(b.size());
    for (std::size_t j = 0; j <= m; ++j) detail::axpy(acc, beta[j], powers[m - j]);
    res.num.push_back(std::move(acc));
  }
  return res;
}

// (1 - K t)^-1 = num(t) / den(t) from the minimal polynomial of K.
struct OpResolvent {
  Poly<Scalar> den;
  OpPoly num;
};

inline SVector flatten(const SMatrix& m) {
  SVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

inline OpResolvent operator_resolvent(const SMatrix& k) {
  KrylovBasis basis;
  std::vector<SMatrix> powers{SMatrix::identity(k.rows())};
  if (k.has_shape()) powers[0].set_shape(k.shape());
  basis.add(flatten(powers[0]));
  std::vector<Scalar> c;
  for (;;) {
    SMatrix next = powers.back() * k;
    if (auto rel = basis.add(flatten(next))) {
      c = *rel;
      break;
    }
    powers.push_back(std::move(next));
  }
  const auto beta = detail::reversed_relation(c);
  OpResolvent res{Poly<Scalar>(beta), {}};
  for (std::size_t m = 0; m < c.size(); ++m) {
    SMatrix acc(k.rows(), k.cols());
    for (std::size_t j = 0; j <= m; ++j) acc += powers[m - j].scaled(beta[j]);
    res.num.c.push_back(std::move(acc));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Quantum minors and determinants.

struct MinorFactor {
  int row, col, shift;  // l_{row,col}(u q^shift)
};

struct MinorTerm {
  Scalar coeff;
  std::vector<MinorFactor> factors;  // written order, left to right
};

inline bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] >= v[i + 1]) return false;
  return true;
}

// Expansion of the quantum minor with rows a and columns b (0-based), all
// u-shifts increased by base.
inline std::vector<MinorTerm> minor_terms(const std::vector<int>& a, const std::vector<int>& b, int base = 0) {
  const int k = static_cast<int>(a.size());
  if (b.size() != a.size()) throw std::invalid_argument("quantum minor needs equally many rows and columns");
  std::vector<MinorTerm> out;
  if (k == 0) return {MinorTerm{Scalar(1), {}}};
  const bool rows_sorted = strictly_increasing(a), cols_sorted = strictly_increasing(b);
  if (!rows_sorted && !cols_sorted) throw std::invalid_argument("quantum minor needs increasing rows or columns");
  for (const auto& sigma : all_perms(k)) {
    MinorTerm t;
    const int l = length(sigma);
    if (rows_sorted) {
      t.coeff = detail::minus_q_pow(l);
      for (int i = 0; i < k; ++i)
        t.factors.push_back({a[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])], b[static_cast<std::size_t>(i)],
                             base + 2 * k - 2 - 2 * i});
    } else {
      t.coeff = detail::minus_q_pow(-l);
      for (int i = k - 1; i >= 0; --i)
        t.factors.push_back({a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])],
                             base + 2 * k - 2 - 2 * i});
    }
    out.push_back(std::move(t));
  }
  return out;
}

inline OpPoly quantum_minor_eval(const Representation& rep, Sign s, const std::vector<int>& rows,
                                 const std::vector<int>& cols, int base = 0) {
  OpPoly total;
  for (const auto& term : minor_terms(rows, cols, base)) {
    OpPoly prod = OpPoly::constant(SMatrix::identity(rep.d).scaled(term.coeff));
    for (const auto& f : term.factors) prod = prod * evaluated_entry(rep, s, f.row, f.col, f.shift);
    total += prod;
  }
  return total;
}

inline std::vector<int> all_indices(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

inline std::vector<int> all_but(int n, int skip) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}

inline OpPoly qdet_eval(const Representation& rep, Sign s, int base = 0) {
  return quantum_minor_eval(rep, s, all_indices(rep.n), all_indices(rep.n), base);
}

// Vectors with polynomial coefficients in t.
using VecPoly = std::vector<SVector>;

namespace detail {

// (A_ab - c t B_ab) applied to a polynomial vector.
inline VecPoly apply_entry(const SparseImages& im, Sign s, int a, int b, const Scalar& c, const VecPoly& v) {
  VecPoly out(v.size() + 1, SVector(im.d));
  const SparseOp& A = im.at(s, a, b);
  const SparseOp& B = im.at(opposite(s), a, b);
  for (std::size_t k = 0; k < v.size(); ++k) {
    A.apply_add(v[k], 0, out[k], 0);
    SVector bv = B.apply(v[k]);
    detail::axpy(out[k + 1], -c, bv);
  }
  while (!out.empty() && is_zero_vector(out.back())) out.pop_back();
  return out;
}

inline Poly<Scalar> scalar_poly(const VecPoly& v, const SVector& xi) {
  std::vector<Scalar> c;
  for (const auto& x : v) c.push_back(is_zero_vector(x) ? Scalar() : proportionality(x, xi));
  return Poly<Scalar>(c);
}

}  // namespace detail

// The polynomial in t by which the quantum minor acts on xi.
inline Poly<Scalar> minor_scalar(const SparseImages& im, Sign s, const std::vector<int>& rows, const std::vector<int>& cols,
                                 const SVector& xi, int base = 0) {
  const Pencil p{s, im.n, im.d};
  VecPoly total(1, SVector(im.d));
  for (const auto& term : minor_terms(rows, cols, base)) {
    VecPoly v{xi};
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it)
      v = detail::apply_entry(im, s, it->row, it->col, p.shift(it->shift), v);
    if (total.size() < v.size()) total.resize(v.size(), SVector(im.d));
    for (std::size_t k = 0; k < v.size(); ++k) detail::axpy(total[k], term.coeff, v[k]);
  }
  return detail::scalar_poly(total, xi);
}

inline Poly<Scalar> qdet_scalar(const SparseImages& im, Sign s, const SVector& xi) {
  return minor_scalar(im, s, all_indices(im.n), all_indices(im.n), xi);
}

// hat l_ij(u q^base) = (-q)^{j-i} l^{1..^j..n}_{1..^i..n}(u q^base)
inline OpPoly comatrix_entry(const Representation& rep, Sign s, int i, int j, int base = 0) {
  const Scalar sign_pow = ((j - i) % 2 == 0 ? Scalar(1) : Scalar(-1)) * Scalar::q_pow(j - i);
  return quantum_minor_eval(rep, s, all_but(rep.n, j), all_but(rep.n, i), base).scaled(sign_pow);
}

inline std::vector<OpPoly> comatrix_eval(const Representation& rep, Sign s, int base = 0) {
  std::vector<OpPoly> out;
  for (int i = 0; i < rep.n; ++i)
    for (int j = 0; j < rep.n; ++j) out.push_back(comatrix_entry(rep, s, i, j, base));
  return out;
}

namespace detail {

inline std::string entry_label(int i, int k) { return "(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")"; }

}  // namespace detail

// hat L(u q^2) L(u) = qdet L(u) 1 and D hat L(u)^t D^-1 L(u q^{2n-2})^t = qdet L(u) 1.
inline Outcome comatrix_check(const Representation& rep, Sign s) {
  const int n = rep.n;
  const Pencil p{s, n, rep.d};
  const OpPoly qd = qdet_eval(rep, s);
  const auto hat_shift = comatrix_eval(rep, s, 2);
  const auto hat = comatrix_eval(rep, s, 0);
  const auto dw = detail::d_weights(n, false), dinv = detail::d_weights(n, true);
  OutcomeAccumulator acc;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      OpPoly left, right;
      for (int j = 0; j < n; ++j) {
        left += hat_shift[static_cast<std::size_t>(i * n + j)] * evaluated_entry(rep, s, j, k, 0);
        right += hat[static_cast<std::size_t>(j * n + i)].scaled(dw[static_cast<std::size_t>(i)] * dinv[static_cast<std::size_t>(j)]) *
                 evaluated_entry(rep, s, k, j, 2 * n - 2);
      }
      const OpPoly expect = i == k ? qd : OpPoly{};
      acc.add(compare_oppoly(left, expect, p.var()), "hat L(uq^2) L(u) entry " + detail::entry_label(i, k));
      acc.add(compare_oppoly(right, expect, p.var()), "D hat L(u)^t D^-1 L(uq^" + std::to_string(2 * n - 2) + ")^t entry " +
                                                          detail::entry_label(i, k));
    }
  return acc.result("hat L(uq^2) L(u), D hat L(u)^t D^-1 L(uq^" + std::to_string(2 * n - 2) + ")^t", "qdet L(u) 1");
}

// ---------------------------------------------------------------------------
// z(u).

// L(u)^-1 = Y(t) / den(t) on C^n (x) W with Y = A^-1 num(K).
struct InverseL {
  Poly<Scalar> den;
  OpPoly y;
  SMatrix a, b;  // dense A and B
};

inline InverseL inverse_evaluated_l(const EvaluatedRep& ev) {
  const SMatrix k = ev.dense([&](const SVector& v) { return ev.apply_k(v); });
  const SMatrix ainv = ev.dense([&](const SVector& v) { return ev.a().solve(v); });
  const OpResolvent res = operator_resolvent(k);
  InverseL out{res.den, res.num.map([&](const SMatrix& m) { return ainv * m; }), big_l(ev.rep(), ev.pencil().sign),
               big_l(ev.rep(), opposite(ev.pencil().sign))};
  return out;
}

// z(u) as num(t)/den(t), num an operator polynomial on W.
struct ZOperator {
  Poly<Scalar> den;
  OpPoly zu;    // from (1/[n]) tr D L(uq^2n) L(u)^-1
  OpPoly opzu;  // from (1/[n]) tr D^-1 L(u)^-1 L(uq^2n)
  Outcome inverse_ok;
};

inline ZOperator z_operator(const Representation& rep, Sign s, const QNumbers& qn = {}) {
  const EvaluatedRep ev(rep, s);
  const InverseL inv = inverse_evaluated_l(ev);
  const int n = rep.n;
  const Scalar c = ev.pencil().shift(2 * n);
  const OpPoly l_shift = OpPoly::linear(inv.a, inv.b.scaled(-c));
  const OpPoly l_plain = OpPoly::linear(inv.a, inv.b.scaled(Scalar(-1)));
  const Scalar norm = qn(n).inverse();
  ZOperator z;
  z.den = inv.den;
  z.zu = detail::aux_trace(l_shift * inv.y, detail::d_weights(n, false), rep.d).scaled(norm);
  z.opzu = detail::aux_trace(inv.y * l_shift, detail::d_weights(n, true), rep.d).scaled(norm);
  OpPoly ident;
  for (const auto& x : inv.den.coeffs()) ident.c.push_back(SMatrix::identity(ev.dim()).scaled(x));
  z.inverse_ok = compare_oppoly(l_plain * inv.y, ident, ev.pencil().var());
  return z;
}

// z(u) over Q(q)(u).
inline Matrix<UScalar> z_eval(const Representation& rep, Sign s, const QNumbers& qn = {}) {
  const ZOperator z = z_operator(rep, s, qn);
  Matrix<UScalar> out(rep.d, rep.d);
  for (std::size_t i = 0; i < rep.d; ++i)
    for (std::size_t j = 0; j < rep.d; ++j) {
      std::vector<Scalar> c;
      for (const auto& m : z.zu.c) c.push_back(m(i, j));
      out(i, j) = in_u(UScalar(Poly<Scalar>(c), z.den), s);
    }
  return out;
}

// zu = opzu, and the matrix relations
//   L(uq^2n)^t D (L(u)^-1)^t = z(u) D,  (L(u)^-1)^t D^-1 L(uq^2n)^t = z(u) D^-1.
inline Outcome z_matrix_check(const Representation& rep, Sign s, const QNumbers& qn = {}) {
  const EvaluatedRep ev(rep, s);
  const InverseL inv = inverse_evaluated_l(ev);
  const int n = rep.n;
  const std::size_t d = rep.d;
  const Scalar c = ev.pencil().shift(2 * n);
  const OpPoly l_shift = OpPoly::linear(inv.a, inv.b.scaled(-c));
  const Scalar norm = qn(n).inverse();
  const auto dw = detail::d_weights(n, false), dinv = detail::d_weights(n, true);
  const OpPoly zu = detail::aux_trace(l_shift * inv.y, dw, d).scaled(norm);
  const OpPoly opzu = detail::aux_trace(inv.y * l_shift, dinv, d).scaled(norm);
  auto blk = [&](const OpPoly& p, int i, int j) { return p.map([&](const SMatrix& m) { return detail::sub_block(m, i, j, d); }); };
  OutcomeAccumulator acc;
  acc.add(compare_oppoly(zu, opzu, ev.pencil().var()), "zu = opzu");
  std::vector<OpPoly> ls, ys;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ls.push_back(blk(l_shift, i, j));
      ys.push_back(blk(inv.y, i, j));
    }
  auto at = [&](const std::vector<OpPoly>& v, int i, int j) -> const OpPoly& { return v[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      OpPoly first, second;
      for (int j = 0; j < n; ++j) {
        first += (at(ls, j, i) * at(ys, k, j)).scaled(dw[static_cast<std::size_t>(j)]);
        second += (at(ys, j, i) * at(ls, k, j)).scaled(dinv[static_cast<std::size_t>(j)]);
      }
      const OpPoly e1 = i == k ? zu.scaled(dw[static_cast<std::size_t>(i)]) : OpPoly{};
      const OpPoly e2 = i == k ? zu.scaled(dinv[static_cast<std::size_t>(i)]) : OpPoly{};
      acc.add(compare_oppoly(first, e1, ev.pencil().var()), "L(uq^2n)^t D (L(u)^-1)^t entry " + detail::entry_label(i, k));
      acc.add(compare_oppoly(second, e2, ev.pencil().var()), "(L(u)^-1)^t D^-1 L(uq^2n)^t entry " + detail::entry_label(i, k));
    }
  return acc.result("L(uq^2n)^t D (L(u)^-1)^t, (L(u)^-1)^t D^-1 L(uq^2n)^t, opzu", "z(u) D, z(u) D^-1, zu");
}

// Coefficients of z(u) as a power series in t from L(u) X(t) = 1:
// A X_0 = 1, A X_m = B X_{m-1}, z_m = (1/[n]) tr D (A X_m - c B X_{m-1}).
inline std::vector<SMatrix> z_series_coefficients(const Representation& rep, Sign s, int order, const QNumbers& qn = {}) {
  const EvaluatedRep ev(rep, s);
  const int n = rep.n;
  const std::size_t d = rep.d;
  const Scalar c = ev.pencil().shift(2 * n);
  const Scalar norm = qn(n).inverse();
  const auto dw = detail::d_weights(n, false);
  std::vector<SMatrix> out(static_cast<std::size_t>(order) + 1, SMatrix(d, d));
  for (int i = 0; i < n; ++i)
    for (std::size_t col = 0; col < d; ++col) {
      SVector e(d);
      e[col] = Scalar(1);
      const SVector v = detail::lift_block(e, i, n, d);
      SVector prev_bx, x = ev.a().solve(v);
      for (int m = 0; m <= order; ++m) {
        if (m > 0) x = ev.a().solve(prev_bx);
        SVector y = ev.a().apply(x);
        if (m > 0) detail::axpy(y, -c, prev_bx);
        prev_bx = ev.b().apply(x);
        const SVector blk = detail::block_of(y, i, d);
        for (std::size_t r = 0; r < d; ++r)
          if (!blk[r].is_zero()) out[static_cast<std::size_t>(m)](r, col) += dw[static_cast<std::size_t>(i)] * norm * blk[r];
      }
    }
  return out;
}

// The function of t by which z(u) acts on xi, through vector resolvents.
inline UScalar z_scalar(const Representation& rep, Sign s, const SVector& xi, const QNumbers& qn = {}) {
  const EvaluatedRep ev(rep, s);
  const int n = rep.n;
  const std::size_t d = rep.d;
  const Scalar c = ev.pencil().shift(2 * n);
  const auto dw = detail::d_weights(n, false);
  auto k = [&](const SVector& v) { return ev.apply_k(v); };
  std::vector<VectorResolvent> res;
  Poly<Scalar> common(Scalar(1));
  for (int i = 0; i < n; ++i) {
    res.push_back(vector_resolvent(k, detail::lift_block(xi, i, n, d)));
    const Poly<Scalar> g = gcd(common, res.back().den);
    common = divide_exact(common, g) * res.back().den;
  }
  VecPoly total;
  for (int i = 0; i < n; ++i) {
    const auto& r = res[static_cast<std::size_t>(i)];
    // (1 - c K t) num(t), then multiply by common / den
    VecPoly v(r.num.size() + 1, SVector(n * d));
    for (std::size_t m = 0; m < r.num.size(); ++m) {
      detail::axpy(v[m], Scalar(1), r.num[m]);
      detail::axpy(v[m + 1], -c, k(r.num[m]));
    }
    const Poly<Scalar> factor = divide_exact(common, r.den);
    VecPoly w(v.size() + factor.coeffs().size(), SVector(d));
    for (std::size_t m = 0; m < v.size(); ++m) {
      const SVector blk = detail::block_of(v[m], i, d);
      for (std::size_t f = 0; f < factor.coeffs().size(); ++f)
        detail::axpy(w[m + f], factor.coeffs()[f] * dw[static_cast<std::size_t>(i)], blk);
    }
    if (total.size() < w.size()) total.resize(w.size(), SVector(d));
    for (std::size_t m = 0; m < w.size(); ++m) detail::axpy(total[m], Scalar(1), w[m]);
  }
  const Poly<Scalar> num = detail::scalar_poly(total, xi).scaled(qn(n).inverse());
  return UScalar(num, common);
}

// ---------------------------------------------------------------------------
// Closed forms.

inline void require_dominant(const Weight& w) {
  const auto ell = w.ell();
  for (std::size_t i = 0; i < ell.size(); ++i)
    for (std::size_t j = i + 1; j < ell.size(); ++j)
      if (ell[i] == ell[j])
        throw RepeatedShiftedWeight("repeated shifted weight l_" + std::to_string(i + 1) + " = l_" + std::to_string(j + 1) +
                                    " = " + std::to_string(ell[i]) + " for lambda = " + w.str());
  if (!w.dominant()) throw std::invalid_argument("lambda = " + w.str() + " is not dominant");
}

// prod_{i != k} [l_i - l_k + 1]_q / [l_i - l_k]_q
inline Scalar pp_factor(const std::vector<int>& ell, std::size_t k, const QNumbers& qn) {
  Scalar f(1);
  for (std::size_t i = 0; i < ell.size(); ++i) {
    if (i == k) continue;
    const Scalar den = qn(ell[i] - ell[k]);
    if (den.is_zero()) throw RepeatedShiftedWeight("denominator [0]_q");
    f = f * qn(ell[i] - ell[k] + 1) / den;
  }
  return f;
}

struct EigenvalueResult {
  Weight lambda;
  int m = 0;
  Scalar value;
  std::optional<BigRational> classical_value;
};

// sum_k q^{2 l_k m} prod_{i != k} [l_i - l_k + 1]_q / [l_i - l_k]_q; with
// inverted = true the powers are q^{-2 l_k m}.
inline Scalar closed_form_value(const Weight& w, int m, const QNumbers& qn = {}, bool inverted = false) {
  require_dominant(w);
  const auto ell = w.ell();
  Scalar total;
  for (std::size_t k = 0; k < ell.size(); ++k)
    total += Scalar::q_pow((inverted ? -2 : 2) * ell[k] * m) * pp_factor(ell, k, qn);
  return total;
}

inline EigenvalueResult closed_form_eigenvalue(const Weight& w, int m, const QNumbers& qn = {}) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  return EigenvalueResult{w, m, closed_form_value(w, m, qn), std::nullopt};
}

// prod (q^-l - q^{l+2} u) / prod (q^-l - q^l u)
inline UScalar qdet_ratio_closed_form(const Weight& w) {
  const UScalar u = UScalar::var();
  UScalar num(1), den(1);
  for (int l : w.ell()) {
    num = num * (UScalar(Scalar::q_pow(-l)) - UScalar(Scalar::q_pow(l + 2)) * u);
    den = den * (UScalar(Scalar::q_pow(-l)) - UScalar(Scalar::q_pow(l)) * u);
  }
  return num / den;
}

// Eigenvalue of qdet L(u) on the highest vector, in the pencil variable t:
// sign +: q^{n(n-1)/2} prod (q^-l - q^l t); sign -: q^{-n(n-1)/2} prod (q^l - q^-l t).
inline Poly<Scalar> qdet_closed_form(const Weight& w, Sign s) {
  const int n = w.n();
  const int e = s == Sign::plus ? 1 : -1;
  Poly<Scalar> p(Scalar::q_pow(e * n * (n - 1) / 2));
  for (int l : w.ell()) p = p * Poly<Scalar>(std::vector<Scalar>{Scalar::q_pow(-e * l), -Scalar::q_pow(e * l)});
  return p;
}

struct PartialFractions {
  std::vector<Scalar> a;
  Scalar c;
  UScalar reconstruction;
};

inline std::vector<Scalar> partial_fraction_constants(const Weight& w, const QNumbers& qn = {}) {
  require_dominant(w);
  const int n = w.n();
  const auto ell = w.ell();
  std::vector<Scalar> a;
  for (std::size_t k = 0; k < ell.size(); ++k) a.push_back((Scalar::q_pow(n - 1) - Scalar::q_pow(n + 1)) * pp_factor(ell, k, qn));
  return a;
}

// C + sum a_k / (1 - q^{2 l_k} u) with C the value at u = infinity of the ratio.
inline PartialFractions partial_fractions(const Weight& w, const QNumbers& qn = {}) {
  PartialFractions pf;
  pf.a = partial_fraction_constants(w, qn);
  pf.c = qdet_ratio_closed_form(w).at_infinity();
  const auto ell = w.ell();
  UScalar r(pf.c);
  for (std::size_t k = 0; k < ell.size(); ++k)
    r = r + UScalar(pf.a[k]) / (UScalar(1) - UScalar::var_times(Scalar::q_pow(2 * ell[k])));
  pf.reconstruction = r;
  return pf;
}

inline Outcome partial_fraction_check(const Weight& w, int order, const QNumbers& qn = {}) {
  const PartialFractions pf = partial_fractions(w, qn);
  const UScalar ratio = qdet_ratio_closed_form(w);
  OutcomeAccumulator acc;
  acc.add(compare(pf.reconstruction, ratio, render_u, "C + sum a_k/(1 - q^{2l_k} u) differs from the qdet ratio"), "reconstruction");
  const int n = w.n();
  const auto ell = w.ell();
  for (int m = 1; m <= order; ++m) {
    Scalar coeff;
    for (std::size_t k = 0; k < ell.size(); ++k) coeff += pf.a[k] * Scalar::q_pow(2 * ell[k] * m);
    const Scalar expect = (Scalar::q_pow(n - 1) - Scalar::q_pow(n + 1)) * closed_form_value(w, m, qn);
    acc.add(compare(coeff, expect, [](const Scalar& x) { return x.str(); }), "coefficient of u^" + std::to_string(m));
  }
  return acc.result("C + sum a_k/(1 - q^{2l_k}u) with C = " + pf.c.str(), render_u(ratio));
}

// sum_k l_k^m prod_{i != k} (l_i - l_k + 1)/(l_i - l_k)
inline BigRational perelomov_popov(const Weight& w, int m) {
  require_dominant(w);
  const auto ell = w.ell();
  BigRational total = 0;
  for (std::size_t k = 0; k < ell.size(); ++k) {
    BigRational t = 1;
    for (int r = 0; r < m; ++r) t *= ell[k];
    for (std::size_t i = 0; i < ell.size(); ++i)
      if (i != k) t *= BigRational(ell[i] - ell[k] + 1) / BigRational(ell[i] - ell[k]);
    total += t;
  }
  return total;
}

// (q - q^-1)^-m sum_r C(m, r) (-1)^{m-r} E_r at q = 1.
inline BigRational classical_limit_eigenvalue(const Weight& w, int m, const QNumbers& qn = {}) {
  Scalar comb;
  BigInt binom = 1;
  for (int r = 0; r <= m; ++r) {
    if (r > 0) binom = binom * (m - r + 1) / r;
    const Scalar term = Scalar(IntLaurent(binom)) * closed_form_value(w, r, qn);
    comb += (m - r) % 2 == 0 ? term : -term;
  }
  const Scalar h = Scalar::q() - Scalar::q_pow(-1);
  Scalar hm(1);
  for (int r = 0; r < m; ++r) hm = hm * h;
  return limit_q1(comb / hm);
}

inline std::string rational_str(const BigRational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline Outcome classical_limit_check(const Weight& w, int m, const QNumbers& qn = {}) {
  const BigRational lim = classical_limit_eigenvalue(w, m, qn), direct = perelomov_popov(w, m);
  if (lim == direct) return Outcome::ok(rational_str(lim), rational_str(direct));
  return Outcome::fail("q -> 1 limit differs from the classical formula", rational_str(lim), rational_str(direct));
}

// E_m(lambda + s) = q^{2sm} E_m(lambda), anchored at the shifted weight
// against the series of the qdet ratio (m >= 1) or the quotient form of
// [n]_q (m = 0).
inline Outcome shift_covariance_check(const Weight& w, int m, int s, const QNumbers& qn = {}) {
  Weight shifted = w;
  for (auto& x : shifted.lambda) x += s;
  const Scalar base = closed_form_value(w, m, qn), moved = closed_form_value(shifted, m, qn);
  OutcomeAccumulator acc;
  auto str = [](const Scalar& x) { return x.str(); };
  acc.add(compare(moved, Scalar::q_pow(2 * s * m) * base, str), "E_m(lambda+s) = q^{2sm} E_m(lambda)");
  const int n = w.n();
  const Scalar q = Scalar::q(), qi = Scalar::q_pow(-1);
  if (m == 0) {
    acc.add(compare(moved, (Scalar::q_pow(n) - Scalar::q_pow(-n)) / (q - qi), str), "E_0 = [n]_q");
  } else {
    const Scalar coeff = qdet_ratio_closed_form(shifted).expand(m).coeffs[static_cast<std::size_t>(m)];
    acc.add(compare((Scalar::q_pow(n - 1) - Scalar::q_pow(n + 1)) * moved, coeff, str), "anchor: u^m coefficient of the qdet ratio");
  }
  return acc.result(moved.str(), (Scalar::q_pow(2 * s * m) * base).str());
}

// ---------------------------------------------------------------------------
// Checks on representations.

// z(u) xi = qdet(uq^2)/qdet(u) xi, the qdet eigenvalue product, and for
// sign - the transport z^-(u) = q^{-2n} z^+(u).
inline Outcome liouville_check(const Representation& rep, const SVector& xi, const Weight& w, Sign s, const QNumbers& qn = {}) {
  const SparseImages im(rep);
  const Pencil p{s, rep.n, rep.d};
  const UScalar z = z_scalar(rep, s, xi, qn);
  const Poly<Scalar> qd = qdet_scalar(im, s, xi);
  const UScalar ratio = UScalar(qd.rescaled_var(p.shift(2))) / UScalar(qd);
  auto render_t = [&](const UScalar& r) { return render_u(in_u(r, s)); };
  OutcomeAccumulator acc;
  acc.add(compare(z, ratio, render_t, "z(u) differs from qdet L(uq^2)/qdet L(u)"), "Liouville");
  const Poly<Scalar> expect = qdet_closed_form(w, s);
  acc.add(compare(UScalar(qd), UScalar(expect), render_t, "qdet eigenvalue differs from the product formula"), "qdet eigenvalue");
  if (s == Sign::minus) {
    const UScalar zp = z_scalar(rep, Sign::plus, xi, qn);
    const UScalar lhs = in_u(z, Sign::minus), rhs = UScalar(Scalar::q_pow(-2 * rep.n)) * zp;
    acc.add(compare(lhs, rhs, render_u, "z-(u) differs from q^-2n z+(u)"), "transport");
  }
  return acc.result(render_t(z), render_t(ratio));
}

// Constant term 1 and u^m coefficient (q^{n-1} - q^{n+1}) tr_q M^m.
inline Outcome series_expansion_check(const Representation& rep, const SVector& xi, int order, const QNumbers& qn = {}) {
  const int n = rep.n;
  const auto series = z_scalar(rep, Sign::plus, xi, qn).expand(order);
  const auto traces = gelfand_scalars(rep, xi, order);
  OutcomeAccumulator acc;
  auto str = [](const Scalar& x) { return x.str(); };
  acc.add(compare(series.coeffs[0], Scalar(1), str), "constant term");
  for (int m = 1; m <= order; ++m)
    acc.add(compare(series.coeffs[static_cast<std::size_t>(m)],
                    (Scalar::q_pow(n - 1) - Scalar::q_pow(n + 1)) * traces[static_cast<std::size_t>(m)], str),
            "coefficient of u^" + std::to_string(m));
  std::string lhs = "1";
  for (int m = 1; m <= order; ++m) lhs += " + (" + series.coeffs[static_cast<std::size_t>(m)].str() + ")u^" + std::to_string(m);
  return acc.result(lhs, "1 + (q^" + std::to_string(n - 1) + " - q^" + std::to_string(n + 1) + ") sum tr_q M^m u^m");
}

// tr D^-1 ((L+)^-1 L-)^m = tr D M^m and tr D^-1 ((L-)^-1 L+)^m = tr D (L+ (L-)^-1)^m.
inline Outcome alternate_operator_check(const Representation& rep, int m_max) {
  const EvaluatedRep plus(rep, Sign::plus), minus(rep, Sign::minus);
  const int n = rep.n;
  const auto dw = detail::d_weights(n, false), dinv = detail::d_weights(n, true);
  auto run = [&](const EvaluatedRep& ev, const std::vector<Scalar>& w, bool left) {
    return aux_trace_powers(n, rep.d, w, [&](const SVector& v) { return left ? ev.apply_k_left(v) : ev.apply_k(v); }, m_max);
  };
  const auto a1 = run(plus, dinv, true), a2 = run(plus, dw, false);
  const auto b1 = run(minus, dinv, true), b2 = run(minus, dw, false);
  OutcomeAccumulator acc;
  auto render = [](const Scalar& x) { return x.str(); };
  for (int m = 0; m <= m_max; ++m) {
    const auto k = static_cast<std::size_t>(m);
    acc.add(compare_matrices(a1[k], a2[k], render), "(a) m=" + std::to_string(m));
    acc.add(compare_matrices(b1[k], b2[k], render), "(b) m=" + std::to_string(m));
  }
  return acc.result("tr D^-1((L+)^-1 L-)^m, tr D^-1((L-)^-1 L+)^m", "tr D M^m, tr D(L+(L-)^-1)^m");
}

// tr D (L+ (L-)^-1)^m acts on xi by the closed form with q^{-2 l_k m}.
inline Outcome alternate_eigenvalue_check(const Representation& rep, const SVector& xi, const Weight& w, int m_max,
                                          const QNumbers& qn = {}) {
  const EvaluatedRep minus(rep, Sign::minus);
  const auto vals = aux_trace_power_scalars(rep.n, rep.d, detail::d_weights(rep.n, false),
                                            [&](const SVector& v) { return minus.apply_k(v); }, xi, m_max);
  OutcomeAccumulator acc;
  std::string lhs, rhs;
  for (int m = 0; m <= m_max; ++m) {
    const Scalar expect = closed_form_value(w, m, qn, true);
    acc.add(compare(vals[static_cast<std::size_t>(m)], expect, [](const Scalar& x) { return x.str(); }), "(c) m=" + std::to_string(m));
    lhs += (m ? "; " : "") + vals[static_cast<std::size_t>(m)].str();
    rhs += (m ? "; " : "") + expect.str();
  }
  return acc.result(lhs, rhs);
}

}  // namespace qgelfand
