#pragma once

// Representations of the RTT algebra: generator images l^{+-}_{ij} as exact
// matrices, tensor powers through the matrix coproduct, the defining
// relations, weight spaces and highest weight vectors, and the evaluated
// matrices L^{+-}(u) on C^n (x) W.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qgelfand/check.hpp"
#include "qgelfand/errors.hpp"
#include "qgelfand/hecke.hpp"
#include "qgelfand/linalg.hpp"
#include "qgelfand/rmatrix.hpp"

namespace qgelfand {

enum class Sign { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline const char* sign_name(Sign s) { return s == Sign::plus ? "+" : "-"; }

using SVector = std::vector<Scalar>;

struct Representation {
  int n = 0;
  std::size_t d = 0;
  int tensor_factors = -1;  // N when built as a tensor power of the vector representation
  std::vector<SMatrix> plus, minus;  // index i*n + j, 0-based

  const SMatrix& image(Sign s, int i, int j) const {
    const auto k = static_cast<std::size_t>(i * n + j);
    return s == Sign::plus ? plus[k] : minus[k];
  }
  SMatrix& image(Sign s, int i, int j) {
    const auto k = static_cast<std::size_t>(i * n + j);
    return s == Sign::plus ? plus[k] : minus[k];
  }
  Shape shape() const {
    if (tensor_factors >= 1) return Shape(static_cast<std::size_t>(tensor_factors), static_cast<std::size_t>(n));
    return {d};
  }
};

namespace detail {

inline Representation empty_rep(int n, std::size_t d) {
  if (n < 1) throw std::invalid_argument("rank n must be at least 1");
  Representation r;
  r.n = n;
  r.d = d;
  r.plus.assign(static_cast<std::size_t>(n * n), SMatrix(d, d));
  r.minus.assign(static_cast<std::size_t>(n * n), SMatrix(d, d));
  return r;
}

inline SMatrix diag_with(int n, int i, const Scalar& value) {
  SMatrix m = SMatrix::identity(static_cast<std::size_t>(n));
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = value;
  return m;
}

}  // namespace detail

// l+_ii -> q^-1 e_ii + sum_{j != i} e_jj, l+_ij -> -(q - q^-1) e_ij (i < j),
// l-_ii -> q e_ii + sum_{j != i} e_jj,    l-_ij ->  (q - q^-1) e_ij (i > j).
// Highest weight (1, 0, ..., 0) with highest vector e_1.
inline Representation vector_rep(int n) {
  auto r = detail::empty_rep(n, static_cast<std::size_t>(n));
  r.tensor_factors = 1;
  const Scalar h = Scalar::q() - Scalar::q_pow(-1);
  for (int i = 0; i < n; ++i) {
    r.image(Sign::plus, i, i) = detail::diag_with(n, i, Scalar::q_pow(-1));
    r.image(Sign::minus, i, i) = detail::diag_with(n, i, Scalar::q());
    for (int j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      if (i < j) r.image(Sign::plus, i, j)(ui, uj) = -h;
      if (i > j) r.image(Sign::minus, i, j)(ui, uj) = h;
    }
  }
  return r;
}

// l+_ii -> q e_ii + ..., l+_ij -> (q - q^-1) e_ji (i < j),
// l-_ii -> q^-1 e_ii + ..., l-_ij -> -(q - q^-1) e_ji (i > j).
inline Representation dual_vector_rep(int n) {
  auto r = detail::empty_rep(n, static_cast<std::size_t>(n));
  const Scalar h = Scalar::q() - Scalar::q_pow(-1);
  for (int i = 0; i < n; ++i) {
    r.image(Sign::plus, i, i) = detail::diag_with(n, i, Scalar::q());
    r.image(Sign::minus, i, i) = detail::diag_with(n, i, Scalar::q_pow(-1));
    for (int j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      if (i < j) r.image(Sign::plus, i, j)(uj, ui) = h;
      if (i > j) r.image(Sign::minus, i, j)(uj, ui) = -h;
    }
  }
  return r;
}

inline Representation trivial_rep(int n) {
  auto r = detail::empty_rep(n, 1);
  r.tensor_factors = 0;
  for (int i = 0; i < n; ++i) {
    r.image(Sign::plus, i, i)(0, 0) = Scalar(1);
    r.image(Sign::minus, i, i)(0, 0) = Scalar(1);
  }
  return r;
}

// l_ij^{[N]} = sum_k l_ik^{[N-1]} (x) l_kj, first slot on the first factors.
inline Representation tensor_power(const Representation& base, int N) {
  if (N < 0) throw std::invalid_argument("tensor power N must be nonnegative");
  const int n = base.n;
  Representation r = trivial_rep(n);
  for (int step = 0; step < N; ++step) {
    auto next = detail::empty_rep(n, r.d * base.d);
    for (Sign s : {Sign::plus, Sign::minus})
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          SMatrix acc(next.d, next.d);
          for (int k = 0; k < n; ++k) {
            const SMatrix& a = r.image(s, i, k);
            const SMatrix& b = base.image(s, k, j);
            if (a.is_zero() || b.is_zero()) continue;
            acc += kron(a, b);
          }
          next.image(s, i, j) = std::move(acc);
        }
    next.tensor_factors = step + 1;
    r = std::move(next);
  }
  if (base.tensor_factors != 1) r.tensor_factors = -1;
  return r;
}

// Row-sparse copy of a matrix for fast matrix-vector products.
class SparseOp {
 public:
  SparseOp() = default;
  explicit SparseOp(const SMatrix& m) : rows_(m.rows()), cols_(m.cols()), entries_(m.rows()) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) entries_[i].emplace_back(j, m(i, j));
  }
  bool is_zero() const {
    for (const auto& r : entries_)
      if (!r.empty()) return false;
    return true;
  }
  SVector apply(const SVector& v) const {
    SVector out(rows_);
    apply_add(v, 0, out, 0);
    return out;
  }
  // out[off_out + i] += sum_j m(i, j) v[off_in + j]
  void apply_add(const SVector& v, std::size_t off_in, SVector& out, std::size_t off_out) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      Scalar acc;
      for (const auto& [j, x] : entries_[i]) {
        const Scalar& vj = v[off_in + j];
        if (!vj.is_zero()) acc += x * vj;
      }
      if (!acc.is_zero()) out[off_out + i] += acc;
    }
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> entries_;
};

namespace detail {

inline bool is_diagonal(const SMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

inline SMatrix block_inverse(const SMatrix& m) {
  if (!is_diagonal(m)) return inverse(m);
  SMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i).is_zero()) throw SingularMatrix(i);
    r(i, i) = m(i, i).inverse();
  }
  return r;
}

}  // namespace detail

// L^{sign} = sum e_ij (x) pi(l_ij) on C^n (x) W; vectors are indexed i*d + w.
class BlockOperator {
 public:
  BlockOperator(const Representation& rep, Sign s) : n_(rep.n), d_(rep.d), sign_(s) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) blocks_.emplace_back(rep.image(s, i, j));
    for (int i = 0; i < n_; ++i) diag_inv_.emplace_back(detail::block_inverse(rep.image(s, i, i)));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        const bool must_vanish = s == Sign::plus ? i > j : i < j;
        if (must_vanish && !block(i, j).is_zero())
          throw std::invalid_argument("L operator is not block triangular");
      }
  }

  int n() const { return n_; }
  std::size_t d() const { return d_; }
  std::size_t dim() const { return static_cast<std::size_t>(n_) * d_; }

  SVector apply(const SVector& v) const {
    SVector out(dim());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) block(i, j).apply_add(v, off(j), out, off(i));
    return out;
  }

  // Solves L x = v by block back- or forward-substitution.
  SVector solve(const SVector& v) const {
    SVector x(dim());
    auto step = [&](int i) {
      SVector rhs(v.begin() + static_cast<std::ptrdiff_t>(off(i)), v.begin() + static_cast<std::ptrdiff_t>(off(i) + d_));
      SVector acc(d_);
      for (int j = 0; j < n_; ++j)
        if (j != i) block(i, j).apply_add(x, off(j), acc, 0);
      for (std::size_t w = 0; w < d_; ++w) rhs[w] -= acc[w];
      SVector xi(d_);
      diag_inv_[static_cast<std::size_t>(i)].apply_add(rhs, 0, xi, 0);
      std::copy(xi.begin(), xi.end(), x.begin() + static_cast<std::ptrdiff_t>(off(i)));
    };
    if (sign_ == Sign::plus)
      for (int i = n_ - 1; i >= 0; --i) step(i);
    else
      for (int i = 0; i < n_; ++i) step(i);
    return x;
  }

 private:
  const SparseOp& block(int i, int j) const { return blocks_[static_cast<std::size_t>(i * n_ + j)]; }
  std::size_t off(int i) const { return static_cast<std::size_t>(i) * d_; }

  int n_;
  std::size_t d_;
  Sign sign_;
  std::vector<SparseOp> blocks_;
  std::vector<SparseOp> diag_inv_;
};

// The dense n d x n d matrix of L^{sign}, with factor shape (n, d).
inline SMatrix big_l(const Representation& rep, Sign s) {
  const std::size_t n = static_cast<std::size_t>(rep.n), d = rep.d;
  SMatrix m(n * d, n * d, {n, d});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SMatrix& b = rep.image(s, static_cast<int>(i), static_cast<int>(j));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t c = 0; c < d; ++c)
          if (!b(a, c).is_zero()) m(i * d + a, j * d + c) = b(a, c);
    }
  return m;
}

// R L1 L2 = L2 L1 R for (+,+), (-,-) and R L+1 L-2 = L-2 L+1 R, entry by entry:
// sum_ab R_{ij,ab} l_ak l'_bl = sum_ab l'_jb l_ia R_{ab,kl}.
inline Outcome verify_defining_relations(const Representation& rep, const RMatrixSet& rs) {
  const int n = rep.n;
  if (rs.n != n) throw std::invalid_argument("R-matrix rank differs from the representation rank");
  const SMatrix id = SMatrix::identity(rep.d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j && !rep.image(Sign::minus, i, j).is_zero())
        return Outcome::fail("l-_" + std::to_string(i + 1) + std::to_string(j + 1) + " must vanish", "nonzero", "0");
      if (i > j && !rep.image(Sign::plus, i, j).is_zero())
        return Outcome::fail("l+_" + std::to_string(i + 1) + std::to_string(j + 1) + " must vanish", "nonzero", "0");
    }
  for (int i = 0; i < n; ++i) {
    const SMatrix& p = rep.image(Sign::plus, i, i);
    const SMatrix& m = rep.image(Sign::minus, i, i);
    if (!(p * m == id) || !(m * p == id))
      return Outcome::fail("l+_" + std::to_string(i + 1) + std::to_string(i + 1) + " l-_" + std::to_string(i + 1) +
                               std::to_string(i + 1) + " != 1",
                           "l+_ii l-_ii", "1");
  }
  std::map<std::tuple<int, int, int, int, int, int>, SMatrix> cache;
  auto prod = [&](Sign s1, int a, int k, Sign s2, int b, int l) -> const SMatrix& {
    const auto key = std::make_tuple(static_cast<int>(s1), a, k, static_cast<int>(s2), b, l);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, rep.image(s1, a, k) * rep.image(s2, b, l)).first;
    return it->second;
  };
  const auto rnz = rs.R.row_nonzeros();
  const auto rt = rs.R.transpose();
  const auto cnz = rt.row_nonzeros();
  const std::vector<std::pair<Sign, Sign>> kinds{{Sign::plus, Sign::plus}, {Sign::minus, Sign::minus}, {Sign::plus, Sign::minus}};
  int checked = 0;
  for (const auto& [s1, s2] : kinds)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const std::size_t row = pair_index(n, i, j), col = pair_index(n, k, l);
            SMatrix lhs(rep.d, rep.d), rhs(rep.d, rep.d);
            for (std::size_t ab : rnz[row]) {
              const int a = static_cast<int>(ab) / n, b = static_cast<int>(ab) % n;
              lhs += prod(s1, a, k, s2, b, l).scaled(rs.R(row, ab));
            }
            for (std::size_t ab : cnz[col]) {
              const int a = static_cast<int>(ab) / n, b = static_cast<int>(ab) % n;
              rhs += prod(s2, j, b, s1, i, a).scaled(rs.R(ab, col));
            }
            ++checked;
            if (!(lhs == rhs)) {
              const auto diff = first_difference(lhs, rhs);
              return Outcome::fail(std::string("R L") + sign_name(s1) + "1 L" + sign_name(s2) + "2 = L" + sign_name(s2) +
                                       "2 L" + sign_name(s1) + "1 R at (" + std::to_string(i + 1) + std::to_string(j + 1) +
                                       "," + std::to_string(k + 1) + std::to_string(l + 1) + "), W entry (" +
                                       std::to_string(diff->first) + "," + std::to_string(diff->second) + ")",
                                   lhs(diff->first, diff->second).str(), rhs(diff->first, diff->second).str());
            }
          }
  return Outcome::ok(std::to_string(checked) + " RTT entries, dim W = " + std::to_string(rep.d),
                     "triangular, l+_ii l-_ii = 1");
}

struct Weight {
  std::vector<int> lambda;

  int n() const { return static_cast<int>(lambda.size()); }
  std::vector<int> ell() const {
    std::vector<int> l(lambda.size());
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = lambda[i] + n() - 1 - static_cast<int>(i);
    return l;
  }
  bool dominant() const {
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
      if (lambda[i] < lambda[i + 1]) return false;
    return true;
  }
  int size() const {
    int s = 0;
    for (int x : lambda) s += x;
    return s;
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
    return s + ")";
  }
};

// Coordinate tensors whose letter i occurs lambda_i times. Empty if the
// weight does not fit the tensor power.
inline std::vector<std::size_t> weight_subspace(const Representation& rep, const Weight& w) {
  if (rep.tensor_factors < 0) throw std::invalid_argument("weight_subspace needs a tensor power of the vector representation");
  if (w.n() != rep.n) throw std::invalid_argument("weight length differs from the rank");
  std::vector<std::size_t> out;
  for (int x : w.lambda)
    if (x < 0) return out;
  if (w.size() != rep.tensor_factors) return out;
  if (rep.tensor_factors == 0) return {0};
  const Shape sh = rep.shape();
  for (std::size_t idx = 0; idx < rep.d; ++idx) {
    std::vector<int> count(static_cast<std::size_t>(rep.n), 0);
    for (std::size_t letter : detail::digits(idx, sh)) ++count[letter];
    if (count == w.lambda) out.push_back(idx);
  }
  return out;
}

namespace detail {

inline SVector normalized_first(SVector v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      const Scalar inv = x.inverse();
      for (auto& y : v) y = y * inv;
      break;
    }
  return v;
}

}  // namespace detail

// All solutions of l+_ij xi = 0 (i < j), l-_ii xi = q^{lambda_i} xi inside the
// weight subspace, each normalized to first nonzero coordinate 1.
inline std::vector<SVector> highest_weight_vectors(const Representation& rep, const Weight& w) {
  const auto cols = weight_subspace(rep, w);
  if (cols.empty()) return {};
  const int n = rep.n;
  std::vector<const SMatrix*> ops;
  std::vector<Scalar> shifts;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ops.push_back(&rep.image(Sign::plus, i, j));
      shifts.emplace_back();
    }
  for (int i = 0; i < n; ++i) {
    ops.push_back(&rep.image(Sign::minus, i, i));
    shifts.push_back(Scalar::q_pow(w.lambda[static_cast<std::size_t>(i)]));
  }
  SMatrix sys(ops.size() * rep.d, cols.size());
  for (std::size_t o = 0; o < ops.size(); ++o)
    for (std::size_t r = 0; r < rep.d; ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        Scalar x = (*ops[o])(r, cols[c]);
        if (r == cols[c]) x -= shifts[o];
        sys(o * rep.d + r, c) = x;
      }
  std::vector<SVector> out;
  for (const auto& z : nullspace(sys)) {
    SVector v(rep.d);
    for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = z[c];
    out.push_back(detail::normalized_first(std::move(v)));
  }
  return out;
}

inline SVector highest_weight_vector(const Representation& rep, const Weight& w) {
  auto all = highest_weight_vectors(rep, w);
  if (all.empty())
    throw NoHighestWeight("weight " + w.str() + " is not a highest weight in this tensor power");
  return all.front();
}

inline bool is_zero_vector(const SVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// The scalar s with w = s v, checked on every coordinate.
inline Scalar proportionality(const SVector& w, const SVector& v) {
  if (w.size() != v.size()) throw ShapeError("vector sizes differ");
  std::optional<Scalar> s;
  for (std::size_t i = 0; i < v.size() && !s; ++i)
    if (!v[i].is_zero()) s = w[i] / v[i];
  if (!s) throw NotAnEigenvector(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(w[i] == *s * v[i])) throw NotAnEigenvector(i);
  return *s;
}

inline Scalar scalar_on_vector(const SMatrix& op, const SVector& v) { return proportionality(op.apply(v), v); }

// Polynomials in one variable with operator coefficients.
struct OpPoly {
  std::vector<SMatrix> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  std::size_t dim() const { return c.empty() ? 0 : c.front().rows(); }

  static OpPoly constant(SMatrix m) { return OpPoly{{std::move(m)}}; }
  static OpPoly linear(SMatrix a, SMatrix b) { return OpPoly{{std::move(a), std::move(b)}}; }

  // p(t) -> p(s t)
  OpPoly rescaled(const Scalar& s) const {
    OpPoly r = *this;
    Scalar p(1);
    for (auto& m : r.c) {
      m = m.scaled(p);
      p = p * s;
    }
    return r;
  }
  OpPoly scaled(const Scalar& s) const {
    OpPoly r = *this;
    for (auto& m : r.c) m = m.scaled(s);
    return r;
  }
  OpPoly map(const std::function<SMatrix(const SMatrix&)>& f) const {
    OpPoly r;
    for (const auto& m : c) r.c.push_back(f(m));
    return r;
  }

  OpPoly& operator+=(const OpPoly& o) {
    if (c.empty()) return *this = o;
    if (o.c.empty()) return *this;
    while (c.size() < o.c.size()) c.emplace_back(dim(), dim());
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
    return *this;
  }
  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a += b.scaled(Scalar(-1)); }
  friend OpPoly operator*(const OpPoly& a, const OpPoly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    OpPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, SMatrix(a.c.front().rows(), b.c.front().cols()));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        if (!b.c[j].is_zero()) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }
};

// Coefficientwise comparison; missing coefficients are zero.
inline Outcome compare_oppoly(const OpPoly& a, const OpPoly& b, const std::string& var = "u") {
  const std::size_t len = std::max(a.c.size(), b.c.size());
  for (std::size_t k = 0; k < len; ++k) {
    const bool az = k >= a.c.size() || a.c[k].is_zero(), bz = k >= b.c.size() || b.c[k].is_zero();
    if (az && bz) continue;
    const std::size_t rows = !az ? a.c[k].rows() : b.c[k].rows(), cols = !az ? a.c[k].cols() : b.c[k].cols();
    const SMatrix x = az ? SMatrix(rows, cols) : a.c[k];
    const SMatrix y = bz ? SMatrix(rows, cols) : b.c[k];
    if (auto diff = first_difference(x, y))
      return Outcome::fail("coefficient of " + var + "^" + std::to_string(k) + ", entry (" + std::to_string(diff->first) +
                               "," + std::to_string(diff->second) + ")",
                           x(diff->first, diff->second).str(), y(diff->first, diff->second).str());
  }
  return Outcome::ok();
}

// The evaluated series as a pencil A - B t: for sign + t = u, A = L+, B = L-;
// for sign - t = u^-1, A = L-, B = L+. Replacing u by u c multiplies t by
// c for sign + and by c^-1 for sign -.
struct Pencil {
  Sign sign;
  int n;
  std::size_t d;

  Scalar shift(int k) const { return Scalar::q_pow(sign == Sign::plus ? k : -k); }  // (q^k)^{+-1}
  const char* var() const { return sign == Sign::plus ? "u" : "u^-1"; }
};

// l^{sign}_ab(u q^k) acting on W, as a polynomial in t.
inline OpPoly evaluated_entry(const Representation& rep, Sign s, int a, int b, int k) {
  const Pencil p{s, rep.n, rep.d};
  return OpPoly::linear(rep.image(s, a, b), rep.image(opposite(s), a, b).scaled(-p.shift(k)));
}

// L^{sign}(u q^k) on C^n (x) W, as a polynomial in t.
inline OpPoly evaluated_big_l(const Representation& rep, Sign s, int k) {
  const Pencil p{s, rep.n, rep.d};
  return OpPoly::linear(big_l(rep, s), big_l(rep, opposite(s)).scaled(-p.shift(k)));
}

// L+ - L- u, or L- - L+ u^-1, over Q(q)(u).
inline Matrix<UScalar> evaluated_L(const Representation& rep, Sign s) {
  const SMatrix a = big_l(rep, s), b = big_l(rep, opposite(s));
  const UScalar u = UScalar::var();
  const UScalar t = s == Sign::plus ? u : UScalar(1) / u;
  Matrix<UScalar> r(a.rows(), a.cols(), a.shape());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero() && b(i, j).is_zero()) continue;
      r(i, j) = UScalar(a(i, j)) - t * UScalar(b(i, j));
    }
  return r;
}

namespace detail {

inline SMatrix embed_aux(const SMatrix& big, std::size_t site, int k, std::size_t n, std::size_t d) {
  Shape sh(static_cast<std::size_t>(k), n);
  sh.push_back(d);
  return embed(big, {site, static_cast<std::size_t>(k) + 1}, sh);
}

}  // namespace detail

// A L1(u q^{2k-2}) ... Lk(u) = Lk(u) ... L1(u q^{2k-2}) A on (C^n)^{(x)k} (x) W.
inline Outcome check_fusion(const Representation& rep, const RMatrixSet& rs, int k, Sign s) {
  const std::size_t n = static_cast<std::size_t>(rep.n), d = rep.d;
  if (k < 1) throw std::invalid_argument("fusion needs k >= 1");
  const Pencil p{s, rep.n, rep.d};
  const SMatrix a_big = big_l(rep, s), b_big = big_l(rep, opposite(s));
  std::vector<OpPoly> factors;
  for (int a = 1; a <= k; ++a) {
    const int shift = 2 * k - 2 * a;
    factors.push_back(OpPoly::linear(detail::embed_aux(a_big, static_cast<std::size_t>(a), k, n, d),
                                     detail::embed_aux(b_big, static_cast<std::size_t>(a), k, n, d).scaled(-p.shift(shift))));
  }
  const SMatrix anti = kron(antisymmetrizer(rs, k), SMatrix::identity(d));
  OpPoly left = OpPoly::constant(anti), right;
  for (const auto& f : factors) left = left * f;
  right = factors.back();
  for (int a = k - 2; a >= 0; --a) right = right * factors[static_cast<std::size_t>(a)];
  right = right * OpPoly::constant(anti);
  auto out = compare_oppoly(left, right, p.var());
  if (out.pass) {
    out.lhs = "A L1..L" + std::to_string(k) + ", " + std::to_string(left.dim()) + "x" + std::to_string(left.dim());
    out.rhs = "L" + std::to_string(k) + "..L1 A";
  }
  return out;
}

}  // namespace qgelfand
