#pragma once

// Integer Laurent polynomials in q: the ring Z[q, q^-1].

#include <algorithm>
#include <cassert>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qgelfand/errors.hpp"

namespace qgelfand {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class IntLaurent {
 public:
  IntLaurent() = default;
  IntLaurent(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.emplace_back(c);
  }
  IntLaurent(BigInt c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  // coeffs[k] is the coefficient of q^(low + k).
  IntLaurent(std::vector<BigInt> coeffs, int low) : c_(std::move(coeffs)), low_(low) { trim(); }

  static IntLaurent monomial(BigInt c, int e) {
    IntLaurent r(std::move(c));
    if (!r.is_zero()) r.low_ = e;
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  bool is_monomial() const { return c_.size() == 1; }

  // Exponent range; meaningless for zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::size_t term_span() const { return c_.size(); }
  std::span<const BigInt> coeffs() const { return c_; }

  BigInt coeff(int e) const {
    if (c_.empty() || e < low_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
  }
  const BigInt& lead() const { return c_.back(); }
  const BigInt& trail() const { return c_.front(); }

  // Multiplication by q^k.
  IntLaurent shifted(int k) const {
    IntLaurent r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  // q -> q^-1.
  IntLaurent reversed() const {
    IntLaurent r;
    if (is_zero()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.low_ = -high();
    return r;
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : c_) {
      g = boost::multiprecision::gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  IntLaurent divided_exact(const BigInt& d) const {
    IntLaurent r = *this;
    for (auto& c : r.c_) c /= d;
    return r;
  }

  IntLaurent scaled(const BigInt& s) const {
    if (s.is_zero()) return {};
    IntLaurent r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  IntLaurent operator-() const {
    IntLaurent r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  IntLaurent& operator+=(const IntLaurent& o) { return accumulate(o, false); }
  IntLaurent& operator-=(const IntLaurent& o) { return accumulate(o, true); }

  friend IntLaurent operator+(IntLaurent a, const IntLaurent& b) { return a += b; }
  friend IntLaurent operator-(IntLaurent a, const IntLaurent& b) { return a -= b; }

  friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
    IntLaurent r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.low_ = a.low_ + b.low_;
    r.trim();
    return r;
  }
  IntLaurent& operator*=(const IntLaurent& o) { return *this = *this * o; }

  friend bool operator==(const IntLaurent& a, const IntLaurent& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
  }

  BigRational eval(const BigRational& q) const {
    if (is_zero()) return 0;
    // Horner on the polynomial part, then the q^low factor.
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + BigRational(*it);
    if (low_ != 0) {
      if (q == 0) throw DivisionByZero("negative power of q evaluated at q=0");
      BigRational p = 1;
      const BigRational base = low_ > 0 ? q : BigRational(1) / q;
      for (int k = 0; k < std::abs(low_); ++k) p *= base;
      acc *= p;
    }
    return acc;
  }

  // Coefficients of the polynomial q^-low * this, i.e. with the constant term first.
  const std::vector<BigInt>& raw() const { return c_; }

  std::string str(const char* var = "q") const;

 private:
  IntLaurent& accumulate(const IntLaurent& o, bool negate) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = negate ? -o : o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_) {
      c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), BigInt(0));
      low_ = lo;
    }
    c_.resize(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
    const std::size_t off = static_cast<std::size_t>(o.low_ - lo);
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
      if (negate)
        c_[off + k] -= o.c_[k];
      else
        c_[off + k] += o.c_[k];
    }
    trim();
    return *this;
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead_zeros = 0;
    while (lead_zeros < c_.size() && c_[lead_zeros].is_zero()) ++lead_zeros;
    if (lead_zeros > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
      low_ += static_cast<int>(lead_zeros);
    }
    if (c_.empty()) low_ = 0;
  }

  std::vector<BigInt> c_;
  int low_ = 0;
};

namespace detail {

using Coeffs = std::vector<BigInt>;

inline void trim_top(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline BigInt content_of(const Coeffs& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

inline void make_primitive(Coeffs& a) {
  if (a.empty()) return;
  BigInt g = content_of(a);
  if (a.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : a) c /= g;
}

inline std::optional<Coeffs> heuristic_gcd(const Coeffs& a, const Coeffs& b);

// Pseudo-remainder of a by b (dense polynomials, constant term first).
inline Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const BigInt la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= la * b[k];
    trim_top(a);
  }
  return a;
}

// Primitive gcd of two nonzero polynomials with positive leading coefficient.
inline Coeffs primitive_gcd(Coeffs a, Coeffs b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() > 1)
    if (auto h = heuristic_gcd(a, b)) return *h;
  while (!b.empty()) {
    if (b.size() == 1) return {BigInt(1)};
    Coeffs r = pseudo_remainder(std::move(a), b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

// a / b over Z[q] if b divides a exactly.
inline std::optional<Coeffs> try_divide(const Coeffs& a, const Coeffs& b) {
  if (a.empty()) return Coeffs{};
  if (a.size() < b.size()) return std::nullopt;
  Coeffs rem = a;
  Coeffs quo(a.size() - b.size() + 1, BigInt(0));
  const BigInt& lb = b.back();
  BigInt c, r;
  for (std::size_t s = quo.size(); s-- > 0;) {
    const BigInt& top = rem[s + b.size() - 1];
    if (top.is_zero()) continue;
    boost::multiprecision::divide_qr(top, lb, c, r);
    if (!r.is_zero()) return std::nullopt;
    for (std::size_t k = 0; k < b.size(); ++k) rem[s + k] -= c * b[k];
    quo[s] = c;
  }
  for (const auto& x : rem)
    if (!x.is_zero()) return std::nullopt;
  return quo;
}

inline BigInt max_norm(const Coeffs& a) {
  BigInt m = 0;
  for (const auto& c : a) m = std::max(m, BigInt(abs(c)));
  return m;
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd, read the
// digits back in symmetric base xi and accept the candidate only if it divides
// both inputs. Inputs primitive with positive leading coefficient.
inline std::optional<Coeffs> heuristic_gcd(const Coeffs& a, const Coeffs& b) {
  BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  auto eval_at = [](const Coeffs& p, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (int attempt = 0; attempt < 6; ++attempt) {
    const BigInt g = boost::multiprecision::gcd(eval_at(a, xi), eval_at(b, xi));
    Coeffs cand;
    BigInt rest = g;
    const BigInt half = xi / 2;
    while (!rest.is_zero()) {
      BigInt digit = rest % xi;
      if (digit < 0) digit += xi;
      if (digit > half) digit -= xi;
      cand.push_back(digit);
      rest = (rest - digit) / xi;
    }
    trim_top(cand);
    if (!cand.empty()) {
      make_primitive(cand);
      if (try_divide(a, cand) && try_divide(b, cand)) return cand;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// Exact quotient a / b over Z[q]; b must divide a.
inline Coeffs divide_exact(const Coeffs& a, const Coeffs& b) {
  if (a.empty()) return {};
  assert(a.size() >= b.size());
  Coeffs rem = a;
  Coeffs quo(a.size() - b.size() + 1, BigInt(0));
  const BigInt& lb = b.back();
  for (std::size_t s = quo.size(); s-- > 0;) {
    const BigInt& top = rem[s + b.size() - 1];
    if (top.is_zero()) continue;
    BigInt c = top / lb;
    for (std::size_t k = 0; k < b.size(); ++k) rem[s + k] -= c * b[k];
    quo[s] = std::move(c);
  }
  return quo;
}

}  // namespace detail

// Greatest common divisor in Z[q, q^-1], normalized to lowest exponent 0 and
// positive leading coefficient. Integer content is not included.
inline IntLaurent gcd(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero() && b.is_zero()) return IntLaurent(1);
  if (a.is_zero() || b.is_zero()) {
    detail::Coeffs c = a.is_zero() ? b.raw() : a.raw();
    detail::make_primitive(c);
    return IntLaurent(std::move(c), 0);
  }
  if (a.is_monomial() || b.is_monomial()) return IntLaurent(1);
  return IntLaurent(detail::primitive_gcd(a.raw(), b.raw()), 0);
}

// a / b where b divides a exactly in Z[q, q^-1] up to the integer content of b.
inline IntLaurent divide_exact(const IntLaurent& a, const IntLaurent& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  return IntLaurent(detail::divide_exact(a.raw(), b.raw()), a.low() - b.low());
}

namespace detail {

inline void append_term(std::string& out, const BigInt& c, int e, bool first, const char* var) {
  const bool neg = c < 0;
  const BigInt mag = neg ? BigInt(-c) : c;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  const bool unit = mag == 1;
  if (e == 0) {
    out += mag.str();
    return;
  }
  if (!unit) out += mag.str() + "*";
  out += var;
  if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace detail

inline std::string IntLaurent::str(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const BigInt& c = c_[static_cast<std::size_t>(e - low_)];
    if (c.is_zero()) continue;
    detail::append_term(out, c, e, first, var);
    first = false;
  }
  return out;
}

}  // namespace qgelfand
