#pragma once

// Symmetric-group action on (C^n)^{(x)k} through the q-permutation operator,
// and the q-antisymmetrizer.
//
// Permutations are 0-based one-line vectors, sigma[i] = sigma(i). Products
// compose as functions: (sigma tau)(i) = sigma(tau(i)).

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "qgelfand/check.hpp"
#include "qgelfand/linalg.hpp"
#include "qgelfand/rmatrix.hpp"

namespace qgelfand {

using Perm = std::vector<int>;
using Word = std::vector<int>;  // s_{i_1} ... s_{i_l}, 0-based generator indices

inline Perm identity_perm(int k) {
  Perm p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline Perm inverse_perm(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

inline int length(const Perm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j] ? 1 : 0;
  return inv;
}

inline int sign(const Perm& p) { return length(p) % 2 == 0 ? 1 : -1; }

inline std::vector<Perm> all_perms(int k) {
  std::vector<Perm> out;
  Perm p = identity_perm(k);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// sigma s_i: swaps the values in positions i and i+1.
inline Perm times_simple(Perm p, int i) {
  std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
  return p;
}

// Lexicographically first reduced word, peeled off from the right with the
// leftmost descent at each step.
inline Word reduced_word(Perm p) {
  Word w;
  for (;;) {
    int i = 0;
    while (i + 1 < static_cast<int>(p.size()) && p[static_cast<std::size_t>(i)] < p[static_cast<std::size_t>(i) + 1]) ++i;
    if (i + 1 >= static_cast<int>(p.size())) break;
    w.insert(w.begin(), i);
    p = times_simple(std::move(p), i);
  }
  return w;
}

inline std::vector<Word> all_reduced_words(const Perm& p) {
  std::vector<Word> out;
  bool any = false;
  for (int i = 0; i + 1 < static_cast<int>(p.size()); ++i) {
    if (p[static_cast<std::size_t>(i)] < p[static_cast<std::size_t>(i) + 1]) continue;
    any = true;
    for (auto w : all_reduced_words(times_simple(p, i))) {
      w.push_back(i);
      out.push_back(std::move(w));
    }
  }
  if (!any) out.push_back({});
  return out;
}

inline Perm perm_of_word(const Word& w, int k) {
  Perm p = identity_perm(k);
  for (int i : w) p = times_simple(std::move(p), i);
  return p;
}

inline Shape power_shape(int n, int k) { return Shape(static_cast<std::size_t>(k), static_cast<std::size_t>(n)); }

// P^q_{s_i} = P^q acting on factors i+1, i+2 (1-based sites).
inline SMatrix q_perm_simple(const RMatrixSet& s, int k, int i) {
  return embed(s.Pq, {static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i + 2)}, power_shape(s.n, k));
}

inline SMatrix q_perm_word(const RMatrixSet& s, int k, const Word& w) {
  SMatrix r = SMatrix::identity(power_shape(s.n, k));
  for (int i : w) r = r * q_perm_simple(s, k, i);
  return r;
}

inline SMatrix q_perm(const RMatrixSet& s, const Perm& sigma) {
  const int k = static_cast<int>(sigma.size());
  return q_perm_word(s, k, reduced_word(sigma));
}

inline SMatrix antisymmetrizer(const RMatrixSet& s, int k) {
  if (k < 1) throw std::invalid_argument("antisymmetrizer needs k >= 1");
  SMatrix a(Matrix<Scalar>::product(power_shape(s.n, k)), Matrix<Scalar>::product(power_shape(s.n, k)), power_shape(s.n, k));
  for (const auto& p : all_perms(k)) {
    const SMatrix pq = q_perm(s, p);
    a += sign(p) > 0 ? pq : -pq;
  }
  return a;
}

// Rank of an operator on (C^n)^{(x)k} that preserves the letter content of
// coordinate tensors, computed block by block.
inline std::size_t content_block_rank(const SMatrix& a, int n, int k) {
  const Shape sh = power_shape(n, k);
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> blocks;
  for (std::size_t idx = 0; idx < a.rows(); ++idx) {
    auto dg = detail::digits(idx, sh);
    std::sort(dg.begin(), dg.end());
    blocks[dg].push_back(idx);
  }
  std::map<std::size_t, const std::vector<std::size_t>*> block_of;
  for (const auto& [key, members] : blocks)
    for (std::size_t m : members) block_of[m] = &members;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && block_of[i] != block_of[j]) return rank(a);
  std::size_t total = 0;
  for (const auto& [key, members] : blocks) {
    SMatrix b(members.size(), members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j) b(i, j) = a(members[i], members[j]);
    total += rank(b);
  }
  return total;
}

inline SMatrix basis_tensor_column(const std::vector<int>& letters, int n) {
  const std::size_t k = letters.size();
  std::vector<std::size_t> d(letters.begin(), letters.end());
  SMatrix v(Matrix<Scalar>::product(power_shape(n, static_cast<int>(k))), 1);
  v(detail::undigits(d, power_shape(n, static_cast<int>(k))), 0) = Scalar(1);
  return v;
}

// P^q_sigma (e_{a_tau(1)} ... e_{a_tau(k)}) = q^{l(sigma tau^-1) - l(tau)} e_{a_{tau sigma^-1 (1)}} ...
// for every sigma, tau in S_k and a_1 < ... < a_k.
inline Outcome check_pq_action(const RMatrixSet& s, int k) {
  const int n = s.n;
  std::vector<SMatrix> ops;
  const auto perms = all_perms(k);
  for (const auto& sg : perms) ops.push_back(q_perm(s, sg));
  std::vector<int> a(static_cast<std::size_t>(k));
  std::vector<bool> choose(static_cast<std::size_t>(n), false);
  std::fill(choose.begin(), choose.begin() + std::min(n, k), true);
  if (k > n) return Outcome::ok("no index choices", "");
  int checked = 0;
  do {
    a.clear();
    for (int i = 0; i < n; ++i)
      if (choose[static_cast<std::size_t>(i)]) a.push_back(i);
    for (std::size_t si = 0; si < perms.size(); ++si) {
      const Perm& sigma = perms[si];
      for (const auto& tau : perms) {
        std::vector<int> in(static_cast<std::size_t>(k)), out(static_cast<std::size_t>(k));
        const Perm ts = compose(tau, inverse_perm(sigma));
        for (int i = 0; i < k; ++i) {
          in[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)])];
          out[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(ts[static_cast<std::size_t>(i)])];
        }
        const int e = length(compose(sigma, inverse_perm(tau))) - length(tau);
        const SMatrix lhs = ops[si] * basis_tensor_column(in, n);
        const SMatrix rhs = basis_tensor_column(out, n).scaled(Scalar::q_pow(e));
        ++checked;
        if (!(lhs == rhs)) {
          std::string w = "sigma=";
          for (int x : sigma) w += std::to_string(x + 1);
          w += " tau=";
          for (int x : tau) w += std::to_string(x + 1);
          return Outcome::fail(w, "P^q_sigma e_(a tau)", "q^" + std::to_string(e) + " e_(a tau sigma^-1)");
        }
      }
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return Outcome::ok(std::to_string(checked) + " actions", "matching q-power images");
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Rank C(n, k), A^2 = k! A, independence of reduced words, the action
// formula for k <= 3, and for k = 2 the relation R - q^2 R~ = (1 - q^2) A.
inline Outcome antisymmetrizer_check(const RMatrixSet& s, int k) {
  const int n = s.n;
  const SMatrix a = antisymmetrizer(s, k);
  OutcomeAccumulator acc;
  const BigInt expect_rank = binomial(n, k);
  const std::size_t r = content_block_rank(a, n, k);
  acc.add(r == expect_rank ? Outcome::ok()
                           : Outcome::fail("rank differs from C(n,k)", std::to_string(r), expect_rank.str()),
          "rank");
  BigInt kf = 1;
  for (int i = 2; i <= k; ++i) kf *= i;
  acc.add(compare_matrices(a * a, a.scaled(Scalar(kf)), [](const Scalar& x) { return x.str(); }), "A^2 = k! A");
  if (k >= 2) {
    const SMatrix p0 = q_perm_simple(s, k, 0);
    acc.add(compare_matrices(p0 * p0, SMatrix::identity(p0.rows()), [](const Scalar& x) { return x.str(); }), "(P^q)^2 = 1");
  }
  if (k >= 3) {
    const SMatrix p0 = q_perm_simple(s, k, 0), p1 = q_perm_simple(s, k, 1);
    acc.add(compare_matrices(p0 * p1 * p0, p1 * p0 * p1, [](const Scalar& x) { return x.str(); }), "braid relation");
    for (const auto& p : all_perms(k)) {
      const SMatrix ref = q_perm(s, p);
      for (const auto& w : all_reduced_words(p)) {
        std::string label = "reduced word";
        for (int i : w) label += " s" + std::to_string(i + 1);
        acc.add(compare_matrices(q_perm_word(s, k, w), ref, [](const Scalar& x) { return x.str(); }), label);
      }
    }
  }
  if (k <= 3) acc.add(check_pq_action(s, k), "P^q_sigma action");
  if (k == 2) {
    const Scalar q2 = Scalar::q_pow(2);
    acc.add(compare_matrices(s.R - s.Rtilde.scaled(q2), a.scaled(Scalar(1) - q2), [](const Scalar& x) { return x.str(); }),
            "R - q^2 R~ = (1 - q^2) A^(2)");
  }
  return acc.result("rank " + std::to_string(r) + ", A^2 = " + kf.str() + " A", "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + expect_rank.str());
}

}  // namespace qgelfand
