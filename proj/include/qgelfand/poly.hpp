#pragma once

// Dense univariate polynomials over an exact field F, and the field of
// fractions built on top of them. The same construction gives Q(q)(u),
// Q(q)(x) and, nested once more, Q(q)(x)(y).
//
// Field requirements on F: value-initialized F is zero, F(1) is one,
// arithmetic operators, inverse(), is_zero(), operator==.

#include <string>
#include <utility>
#include <vector>

#include "qgelfand/errors.hpp"
#include "qgelfand/scalar.hpp"

namespace qgelfand {

template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(F c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(F c, int k) {
    if (c.is_zero()) return {};
    std::vector<F> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = std::move(c);
    Poly p;
    p.c_ = std::move(v);
    return p;
  }
  static Poly var() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  const F& lead() const { return c_.back(); }
  F coeff(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : F{}; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const F& s) const {
    if (s.is_zero()) return {};
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  // p(c*t)
  Poly rescaled_var(const F& c) const {
    Poly r = *this;
    F p(1);
    for (auto& a : r.c_) {
      a *= p;
      p *= c;
    }
    r.trim();
    return r;
  }

  // p(t) * t^k
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(static_cast<std::size_t>(k), F{});
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  F eval(const F& t) const {
    F acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Poly monic() const {
    if (is_zero() || lead() == F(1)) return *this;
    return scaled(lead().inverse());
  }

  // Euclidean division: a = quo * b + rem with deg rem < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<F> rem = a.c_;
    std::vector<F> quo(a.c_.size() - b.c_.size() + 1);
    const F inv_lead = b.lead().inverse();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t s = quo.size(); s-- > 0;) {
      F& top = rem[s + db];
      if (top.is_zero()) continue;
      F c = top * inv_lead;
      for (std::size_t k = 0; k < db; ++k)
        if (!b.c_[k].is_zero()) rem[s + k] -= c * b.c_[k];
      top = F{};
      quo[s] = std::move(c);
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

// Monic gcd (zero only if both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Poly<F>(F(1));
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

template <class F>
Poly<F> divide_exact(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).first;
}

// Truncated power series c_0 + c_1 t + ... + c_order t^order.
template <class F>
struct Series {
  int order = 0;
  std::vector<F> coeffs;  // size order + 1

  friend bool operator==(const Series&, const Series&) = default;
};

template <class F>
Series<F> truncate(const Poly<F>& p, int order) {
  Series<F> s{order, std::vector<F>(static_cast<std::size_t>(order) + 1)};
  for (int k = 0; k <= order && k <= p.degree(); ++k) s.coeffs[static_cast<std::size_t>(k)] = p.coeff(k);
  return s;
}

template <class F>
Series<F> series_mul(const Series<F>& a, const Series<F>& b) {
  const int order = std::min(a.order, b.order);
  Series<F> r{order, std::vector<F>(static_cast<std::size_t>(order) + 1)};
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j)
      r.coeffs[static_cast<std::size_t>(i + j)] += a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)];
  }
  return r;
}

// 1/p as a truncated series; p(0) must be nonzero.
template <class F>
Series<F> series_inverse(const Poly<F>& p, int order) {
  if (p.coeff(0).is_zero()) throw NoSeriesAtZero();
  Series<F> r{order, std::vector<F>(static_cast<std::size_t>(order) + 1)};
  const F inv0 = p.coeff(0).inverse();
  r.coeffs[0] = inv0;
  for (int k = 1; k <= order; ++k) {
    F acc{};
    for (int j = 1; j <= k && j <= p.degree(); ++j) {
      const F& pj = p.coeffs()[static_cast<std::size_t>(j)];
      if (!pj.is_zero()) acc += pj * r.coeffs[static_cast<std::size_t>(k - j)];
    }
    r.coeffs[static_cast<std::size_t>(k)] = -(acc * inv0);
  }
  return r;
}

template <class F>
class RatFunc {
 public:
  using Coeff = F;

  RatFunc() = default;
  RatFunc(long long c) : num_(F(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : num_(F(c)) {}        // NOLINT(google-explicit-constructor)
  RatFunc(F c) : num_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(Poly<F> p) : num_(std::move(p)) {}
  RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc var() { return RatFunc(Poly<F>::var()); }
  // c * t
  static RatFunc var_times(F c) { return RatFunc(Poly<F>::monomial(std::move(c), 1)); }

  const Poly<F>& num() const { return num_; }
  Poly<F> den() const { return den_.is_zero() ? Poly<F>(F(1)) : den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_zero(); }
  std::size_t weight() const { return num_.coeffs().size() + den_.coeffs().size(); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return combine(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return combine(a, b, true); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_zero() && b.den_.is_zero()) return RatFunc(a.num_ * b.num_);
    if (a.is_constant()) return b.times_constant(a.num_.coeff(0));
    if (b.is_constant()) return a.times_constant(b.num_.coeff(0));
    return RatFunc(a.num_ * b.num_, a.den() * b.den());
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) {
    if (den_.is_zero() && o.den_.is_zero()) {
      num_ += o.num_;
      return *this;
    }
    return *this = *this + o;
  }
  RatFunc& operator-=(const RatFunc& o) {
    if (den_.is_zero() && o.den_.is_zero()) {
      num_ -= o.num_;
      return *this;
    }
    return *this = *this - o;
  }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero();
    RatFunc r;
    r.num_ = den();
    r.den_ = num_;
    r.normalize_lead();
    return r;
  }

  // r(c*t)
  RatFunc rescaled_var(const F& c) const {
    if (den_.is_zero()) return RatFunc(num_.rescaled_var(c));
    return RatFunc(num_.rescaled_var(c), den_.rescaled_var(c));
  }

  // Value of the constant in t -> infinity when deg num <= deg den.
  F at_infinity() const {
    const Poly<F> d = den();
    if (num_.degree() > d.degree()) throw DivergentLimit();
    if (num_.degree() < d.degree()) return F{};
    return num_.lead() / d.lead();
  }

  F eval(const F& t) const {
    const F d = den().eval(t);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes at the evaluation point");
    return num_.eval(t) / d;
  }

  // Truncated power-series expansion around t = 0.
  Series<F> expand(int order) const {
    const Series<F> inv = series_inverse(den(), order);
    return series_mul(truncate(num_, order), inv);
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  bool is_constant() const { return den_.is_zero() && num_.degree() == 0; }

  RatFunc times_constant(const F& c) const {
    RatFunc r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
  }

  static RatFunc combine(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (a.den_.is_zero() && b.den_.is_zero()) return RatFunc(subtract ? a.num_ - b.num_ : a.num_ + b.num_);
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_ == b.den_) return RatFunc(subtract ? a.num_ - b.num_ : a.num_ + b.num_, a.den_);
    const Poly<F> da = a.den(), db = b.den();
    // Cancel the common factor of the denominators first.
    const Poly<F> g = gcd(da, db);
    if (g.degree() > 0) {
      const Poly<F> ca = divide_exact(da, g), cb = divide_exact(db, g);
      Poly<F> n = a.num_ * cb;
      if (subtract)
        n -= b.num_ * ca;
      else
        n += b.num_ * ca;
      return RatFunc(std::move(n), ca * db);
    }
    Poly<F> n = a.num_ * db;
    if (subtract)
      n -= b.num_ * da;
    else
      n += b.num_ * da;
    return RatFunc(std::move(n), da * db);
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = Poly<F>();
      return;
    }
    if (den_.degree() > 0) {
      const Poly<F> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
      }
    }
    normalize_lead();
  }

  void normalize_lead() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = Poly<F>();
      return;
    }
    if (!(den_.lead() == F(1))) {
      const F inv = den_.lead().inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
    if (den_.is_one()) den_ = Poly<F>();
  }

  Poly<F> num_;
  Poly<F> den_;  // zero encodes the denominator 1
};

// Q(q)(u): spectral-parameter functions. Also used for Q(q)(x).
using UScalar = RatFunc<Scalar>;
// Q(q)(x)(y), for the Yang-Baxter check.
using XYScalar = RatFunc<UScalar>;
using USeries = Series<Scalar>;

// ---- canonical text rendering ----------------------------------------------

inline std::string to_string(const Scalar& s) { return s.str(); }

template <class F>
std::string to_string(const Poly<F>& p, const std::vector<std::string>& vars, std::size_t level = 0);

template <class F>
std::string to_string(const RatFunc<F>& r, const std::vector<std::string>& vars, std::size_t level = 0);

namespace detail {

inline std::string coeff_string(const Scalar& s, const std::vector<std::string>&, std::size_t) { return s.str(); }
template <class F>
std::string coeff_string(const RatFunc<F>& r, const std::vector<std::string>& vars, std::size_t level) {
  return to_string(r, vars, level);
}

inline bool is_single_term(const Scalar& s) { return s.is_monomial(); }
template <class F>
bool is_single_term(const RatFunc<F>& r) {
  return r.is_polynomial() && r.num().degree() >= 0 &&
         [&] {
           int nz = 0;
           for (const auto& c : r.num().coeffs()) nz += c.is_zero() ? 0 : 1;
           return nz == 1 && is_single_term(r.num().lead());
         }();
}

inline bool starts_negative(const std::string& s) { return !s.empty() && s[0] == '-'; }

}  // namespace detail

// Descending powers of the variable vars[level]; coefficients rendered with
// the remaining variables.
template <class F>
std::string to_string(const Poly<F>& p, const std::vector<std::string>& vars, std::size_t level) {
  if (p.is_zero()) return "0";
  const std::string& var = vars.at(level);
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const F& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = detail::coeff_string(c, vars, level + 1);
    bool neg = false;
    if (detail::is_single_term(c) && detail::starts_negative(cs)) {
      neg = true;
      cs = cs.substr(1);
    } else if (!detail::is_single_term(c) && k > 0) {
      cs = "(" + cs + ")";
    }
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      std::string mono = k == 1 ? var : var + "^" + std::to_string(k);
      term = cs == "1" ? mono : cs + "*" + mono;
    }
    if (first)
      out += (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

template <class F>
std::string to_string(const RatFunc<F>& r, const std::vector<std::string>& vars, std::size_t level) {
  const std::string n = to_string(r.num(), vars, level);
  if (r.is_polynomial()) return n;
  const Poly<F> d = r.den();
  auto wrap = [](const std::string& s, bool single) { return single ? s : "(" + s + ")"; };
  auto single_poly = [](const Poly<F>& p) {
    int nz = 0;
    for (const auto& c : p.coeffs()) nz += c.is_zero() ? 0 : 1;
    return nz == 1 && detail::is_single_term(p.lead());
  };
  return wrap(n, single_poly(r.num())) + "/" + wrap(to_string(d, vars, level), single_poly(d));
}

inline std::string to_string(const UScalar& r, const char* var = "u") { return to_string(r, {var}, 0); }
inline std::string to_string(const XYScalar& r) { return to_string(r, {"y", "x"}, 0); }

}  // namespace qgelfand
