#include <gtest/gtest.h>

#include "qgelfand/hecke.hpp"

using namespace qgelfand;

namespace {

Scalar q_() { return Scalar::q(); }
Scalar qi() { return Scalar::q_pow(-1); }

SMatrix column(const std::vector<std::pair<std::vector<int>, Scalar>>& terms, int n) {
  SMatrix v;
  bool first = true;
  for (const auto& [letters, c] : terms) {
    SMatrix t = basis_tensor_column(letters, n).scaled(c);
    v = first ? t : v + t;
    first = false;
  }
  return v;
}

}  // namespace

TEST(Perms, LengthAndWords) {
  EXPECT_EQ(length({0, 1, 2}), 0);
  EXPECT_EQ(length({2, 1, 0}), 3);
  EXPECT_EQ(all_perms(4).size(), 24u);
  for (const auto& p : all_perms(4)) {
    const auto w = reduced_word(p);
    EXPECT_EQ(static_cast<int>(w.size()), length(p));
    EXPECT_EQ(perm_of_word(w, 4), p);
    const auto words = all_reduced_words(p);
    for (const auto& v : words) {
      EXPECT_EQ(perm_of_word(v, 4), p);
      EXPECT_EQ(v.size(), w.size());
    }
  }
  EXPECT_EQ(all_reduced_words({2, 1, 0}).size(), 2u);
}

TEST(Perms, ComposeInverse) {
  for (const auto& p : all_perms(3)) {
    EXPECT_EQ(compose(p, inverse_perm(p)), identity_perm(3));
    for (const auto& r : all_perms(3)) EXPECT_EQ(sign(compose(p, r)), sign(p) * sign(r));
  }
}

TEST(QPerm, SimpleAction) {
  const auto s = build_rmatrix_set(2);
  // e1 (x) e2 -> q e2 (x) e1 and e2 (x) e1 -> q^-1 e1 (x) e2
  EXPECT_EQ(s.Pq * basis_tensor_column({0, 1}, 2), basis_tensor_column({1, 0}, 2).scaled(q_()));
  EXPECT_EQ(s.Pq * basis_tensor_column({1, 0}, 2), basis_tensor_column({0, 1}, 2).scaled(qi()));
  EXPECT_EQ(s.Pq * basis_tensor_column({1, 1}, 2), basis_tensor_column({1, 1}, 2));
}

TEST(QPerm, InvolutionAndBraid) {
  for (int n = 2; n <= 3; ++n) {
    const auto s = build_rmatrix_set(n);
    EXPECT_EQ(s.Pq * s.Pq, SMatrix::identity(s.Pq.rows())) << n;
    const auto a = q_perm_simple(s, 3, 0), b = q_perm_simple(s, 3, 1);
    EXPECT_EQ(a * b * a, b * a * b) << n;
  }
}

TEST(QPerm, IndependentOfReducedWord) {
  const auto s = build_rmatrix_set(3);
  for (const auto& p : all_perms(3)) {
    const auto ref = q_perm(s, p);
    for (const auto& w : all_reduced_words(p)) EXPECT_EQ(q_perm_word(s, 3, w), ref);
  }
}

TEST(QPerm, ActionFormula) {
  for (int n = 2; n <= 3; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto o = check_pq_action(build_rmatrix_set(n), k);
      EXPECT_TRUE(o.pass) << n << "," << k << ": " << o.witness;
    }
}

TEST(QPerm, ActionFormulaDetectsWrongCoefficient) {
  auto s = build_rmatrix_set(2);
  s.Pq(2, 1) = qi();
  s.Pq(1, 2) = q_();
  EXPECT_FALSE(check_pq_action(s, 2).pass);
}

TEST(Antisymmetrizer, TwoFactors) {
  const auto s = build_rmatrix_set(2);
  const auto a = antisymmetrizer(s, 2);
  // A (e1 (x) e2) = e1 (x) e2 - q e2 (x) e1
  EXPECT_EQ(a * basis_tensor_column({0, 1}, 2), column({{{0, 1}, Scalar(1)}, {{1, 0}, -q_()}}, 2));
  EXPECT_TRUE((a * basis_tensor_column({0, 0}, 2)).is_zero());
  // R - q^2 R~ = (1 - q^2) A
  EXPECT_EQ(s.R - s.Rtilde.scaled(q_() * q_()), a.scaled(Scalar(1) - q_() * q_()));
}

TEST(Antisymmetrizer, Rank) {
  // rank is the binomial coefficient C(n, k)
  const int binom[5][5] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}};
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= std::min(n + 1, 4); ++k) {
      if (n == 4 && k > 3) continue;
      const auto s = build_rmatrix_set(n);
      const auto a = antisymmetrizer(s, k);
      const std::size_t expect = k <= n ? static_cast<std::size_t>(binom[n][k]) : 0u;
      EXPECT_EQ(content_block_rank(a, n, k), expect) << n << "," << k;
    }
}

TEST(Antisymmetrizer, Idempotent) {
  for (int n = 2; n <= 3; ++n)
    for (int k = 2; k <= 3; ++k) {
      const auto s = build_rmatrix_set(n);
      const auto a = antisymmetrizer(s, k);
      const Scalar kf = k == 2 ? Scalar(2) : Scalar(6);
      EXPECT_EQ(a * a, a.scaled(kf)) << n << "," << k;
    }
}
