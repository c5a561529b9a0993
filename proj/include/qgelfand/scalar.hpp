#pragma once

// Scalar: exact elements of Q(q), kept as reduced ratios of integer Laurent
// polynomials.
//
// Canonical form: the denominator has lowest exponent 0 and a positive leading
// coefficient, numerator and denominator are coprime in Q[q, q^-1], and the
// integer contents of numerator and denominator are coprime. Zero is 0/1.
// Equality is structural on the canonical form.

#include <string>
#include <utility>

#include "qgelfand/errors.hpp"
#include "qgelfand/laurent.hpp"

namespace qgelfand {

class Scalar {
 public:
  Scalar() = default;
  Scalar(long long c) : num_(c) {}             // NOLINT(google-explicit-constructor)
  Scalar(int c) : num_(static_cast<long long>(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(BigInt c) : num_(std::move(c)) {}     // NOLINT(google-explicit-constructor)
  Scalar(IntLaurent p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Scalar(IntLaurent num, IntLaurent den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Scalar q_pow(int k) { return Scalar(IntLaurent::monomial(1, k)); }
  static Scalar q() { return q_pow(1); }

  const IntLaurent& num() const { return num_; }
  IntLaurent den() const { return den_.is_zero() ? IntLaurent(1) : den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_zero(); }
  bool is_laurent() const { return den_.is_zero(); }
  bool is_monomial() const { return den_.is_zero() && num_.is_monomial(); }

  // Rough size used for pivot selection.
  std::size_t weight() const { return num_.term_span() + den_.term_span(); }

  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return combine(a, b, false); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return combine(a, b, true); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_zero() && b.den_.is_zero()) return Scalar(a.num_ * b.num_);
    if (a.is_monomial()) return b.times_monomial(a.num_);
    if (b.is_monomial()) return a.times_monomial(b.num_);
    return Scalar(a.num_ * b.num_, a.den() * b.den());
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) {
    if (den_.is_zero() && o.den_.is_zero()) {
      num_ += o.num_;
      return *this;
    }
    return *this = *this + o;
  }
  Scalar& operator-=(const Scalar& o) {
    if (den_.is_zero() && o.den_.is_zero()) {
      num_ -= o.num_;
      return *this;
    }
    return *this = *this - o;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    r.num_ = den();
    r.den_ = num_;
    r.normalize_units();
    return r;
  }

  // Substitution q -> q^-1.
  Scalar invert_q() const { return Scalar(num_.reversed(), den().reversed()); }

  BigRational eval(const BigRational& q) const {
    const BigRational d = den().eval(q);
    if (d == 0) throw DivisionByZero("denominator vanishes at the evaluation point");
    return num_.eval(q) / d;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string str() const {
    if (den_.is_zero()) return num_.str();
    auto wrap = [](const IntLaurent& p) {
      std::string s = p.str();
      return p.is_monomial() ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  static Scalar combine(const Scalar& a, const Scalar& b, bool subtract) {
    if (a.den_.is_zero() && b.den_.is_zero()) return Scalar(subtract ? a.num_ - b.num_ : a.num_ + b.num_);
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_ == b.den_) return Scalar(subtract ? a.num_ - b.num_ : a.num_ + b.num_, a.den_);
    const IntLaurent da = a.den(), db = b.den();
    IntLaurent n = a.num_ * db;
    if (subtract)
      n -= b.num_ * da;
    else
      n += b.num_ * da;
    return Scalar(std::move(n), da * db);
  }

  // this * m for a Laurent monomial m; the canonical denominator only changes
  // through integer content.
  Scalar times_monomial(const IntLaurent& m) const {
    Scalar r;
    r.num_ = (num_ * IntLaurent::monomial(1, m.low()));
    r.den_ = den_;
    const BigInt& c = m.lead();
    if (den_.is_zero()) {
      r.num_ = r.num_.scaled(c);
      return r;
    }
    BigInt g = boost::multiprecision::gcd(c, den_.content());
    r.num_ = r.num_.scaled(c / g);
    if (g != 1) r.den_ = r.den_.divided_exact(g);
    if (r.den_.is_one()) r.den_ = IntLaurent();
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = IntLaurent();
      return;
    }
    if (!den_.is_monomial()) {
      IntLaurent g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
      }
    }
    normalize_units();
  }

  // Fixes q-power shift, sign and integer content, assuming the polynomial
  // parts are already coprime.
  void normalize_units() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = IntLaurent();
      return;
    }
    const int shift = den_.low();
    if (shift != 0) {
      num_ = num_.shifted(-shift);
      den_ = den_.shifted(-shift);
    }
    BigInt g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (den_.lead() < 0) g = -g;
    if (g != 1) {
      num_ = num_.divided_exact(g);
      den_ = den_.divided_exact(g);
    }
    if (den_.is_one()) den_ = IntLaurent();
  }

  IntLaurent num_;
  IntLaurent den_;  // zero encodes the denominator 1
};

// [k]_q = (q^k - q^-k)/(q - q^-1) = q^(k-1) + q^(k-3) + ... + q^(1-k).
inline Scalar qnum(int k) {
  if (k == 0) return {};
  const int m = k < 0 ? -k : k;
  std::vector<BigInt> c(static_cast<std::size_t>(2 * m - 1), BigInt(0));
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 1;
  IntLaurent p(std::move(c), 1 - m);
  return k < 0 ? Scalar(-p) : Scalar(p);
}

// Exact value at q=1. Clears negative powers, substitutes q = 1 + t by an exact
// Taylor shift, cancels the common power of t and returns the ratio of the
// lowest-order coefficients.
inline BigRational limit_q1(const Scalar& s) {
  if (s.is_zero()) return 0;
  const IntLaurent num = s.num(), den = s.den();
  const int low = std::min(num.low(), den.low());
  auto taylor_shift = [low](const IntLaurent& p) {
    // coefficients of p(q) * q^-low as a polynomial in q, then q -> 1 + t
    std::vector<BigInt> a(static_cast<std::size_t>(p.high() - low + 1), BigInt(0));
    for (int e = p.low(); e <= p.high(); ++e) a[static_cast<std::size_t>(e - low)] = p.coeff(e);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += a[j];
    return a;
  };
  const auto nt = taylor_shift(num), dt = taylor_shift(den);
  auto order = [](const std::vector<BigInt>& a) {
    std::size_t k = 0;
    while (k < a.size() && a[k].is_zero()) ++k;
    return k;
  };
  const std::size_t on = order(nt), od = order(dt);
  if (od > on) throw DivergentLimit();
  if (on > od) return 0;
  return BigRational(nt[on]) / BigRational(dt[od]);
}

}  // namespace qgelfand
