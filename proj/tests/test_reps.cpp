#include <gtest/gtest.h>

#include "qgelfand/representation.hpp"

using namespace qgelfand;

namespace {

Scalar q_() { return Scalar::q(); }
Scalar qi() { return Scalar::q_pow(-1); }
Scalar h() { return q_() - qi(); }

SVector unit(std::size_t d, std::size_t i) {
  SVector v(d);
  v[i] = Scalar(1);
  return v;
}

std::vector<Weight> dominant_weights(int n, int total) {
  std::vector<Weight> out;
  std::vector<int> lam(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, int)> rec = [&](int pos, int left, int cap) {
    if (pos == n) {
      if (left == 0) out.push_back({lam});
      return;
    }
    for (int x = std::min(left, cap); x >= 0; --x) {
      lam[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1, left - x, x);
    }
  };
  rec(0, total, total);
  return out;
}

}  // namespace

TEST(VectorRep, RankOne) {
  const auto v = vector_rep(1);
  EXPECT_EQ(v.image(Sign::plus, 0, 0)(0, 0), qi());
  EXPECT_EQ(v.image(Sign::minus, 0, 0)(0, 0), q_());
  const auto dv = dual_vector_rep(1);
  EXPECT_EQ(dv.image(Sign::plus, 0, 0)(0, 0), q_());
  EXPECT_EQ(dv.image(Sign::minus, 0, 0)(0, 0), qi());
}

TEST(VectorRep, OffDiagonalImages) {
  const auto dv = dual_vector_rep(2);
  SMatrix e21(2, 2);
  e21(1, 0) = h();
  EXPECT_EQ(dv.image(Sign::plus, 0, 1), e21);
  const auto v = vector_rep(2);
  SMatrix e12(2, 2);
  e12(0, 1) = -h();
  EXPECT_EQ(v.image(Sign::plus, 0, 1), e12);
}

TEST(VectorRep, HighestWeight) {
  const auto v = vector_rep(2);
  const SVector e1 = unit(2, 0);
  EXPECT_TRUE(is_zero_vector(v.image(Sign::plus, 0, 1).apply(e1)));
  EXPECT_EQ(scalar_on_vector(v.image(Sign::minus, 0, 0), e1), q_());
  EXPECT_EQ(scalar_on_vector(v.image(Sign::minus, 1, 1), e1), Scalar(1));
  EXPECT_EQ(highest_weight_vector(tensor_power(v, 1), Weight{{1, 0}}), e1);
}

TEST(DefiningRelations, VectorReps) {
  for (int n = 1; n <= 4; ++n) {
    const auto rs = build_rmatrix_set(n);
    EXPECT_TRUE(verify_defining_relations(vector_rep(n), rs).pass) << n;
    EXPECT_TRUE(verify_defining_relations(dual_vector_rep(n), rs).pass) << n;
    EXPECT_TRUE(verify_defining_relations(trivial_rep(n), rs).pass) << n;
  }
}

TEST(DefiningRelations, TensorPowers) {
  for (auto [n, N] : {std::pair{2, 3}, std::pair{3, 2}}) {
    const auto rs = build_rmatrix_set(n);
    EXPECT_TRUE(verify_defining_relations(tensor_power(vector_rep(n), N), rs).pass) << n << "," << N;
    EXPECT_TRUE(verify_defining_relations(tensor_power(dual_vector_rep(n), N), rs).pass) << n << "," << N;
  }
}

TEST(DefiningRelations, DetectPerturbation) {
  auto v = tensor_power(vector_rep(2), 2);
  v.image(Sign::minus, 1, 0) = v.image(Sign::minus, 1, 0).scaled(q_());
  const auto o = verify_defining_relations(v, build_rmatrix_set(2));
  EXPECT_FALSE(o.pass);
  EXPECT_NE(o.witness.find("R L"), std::string::npos) << o.witness;
  auto w = vector_rep(2);
  w.image(Sign::plus, 1, 0)(0, 0) = Scalar(1);
  EXPECT_FALSE(verify_defining_relations(w, build_rmatrix_set(2)).pass);
}

TEST(TensorPower, Basics) {
  const auto t0 = tensor_power(vector_rep(3), 0);
  EXPECT_EQ(t0.d, 1u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(t0.image(Sign::plus, i, i)(0, 0), Scalar(1));
  const auto t1 = tensor_power(vector_rep(3), 1);
  const auto v = vector_rep(3);
  for (std::size_t k = 0; k < 9; ++k) {
    EXPECT_EQ(t1.plus[k], v.plus[k]);
    EXPECT_EQ(t1.minus[k], v.minus[k]);
  }
}

TEST(TensorPower, CoproductExample) {
  // Delta(l-_21) = l-_21 (x) l-_11 + l-_22 (x) l-_21 on e1 (x) e1:
  // h e2 (x) q e1 + e1 (x) h e2
  const auto t = tensor_power(vector_rep(2), 2);
  const SVector out = t.image(Sign::minus, 1, 0).apply(unit(4, 0));
  SVector expect(4);
  expect[2] = h() * q_();
  expect[1] = h();
  EXPECT_EQ(out, expect);
}

TEST(TensorPower, DiagonalImagesCountLetters) {
  const auto t = tensor_power(vector_rep(2), 3);
  const Shape sh = t.shape();
  for (std::size_t idx = 0; idx < t.d; ++idx) {
    const auto dg = detail::digits(idx, sh);
    for (int i = 0; i < 2; ++i) {
      const int c = static_cast<int>(std::count(dg.begin(), dg.end(), static_cast<std::size_t>(i)));
      EXPECT_EQ(scalar_on_vector(t.image(Sign::minus, i, i), unit(t.d, idx)), Scalar::q_pow(c));
      EXPECT_EQ(scalar_on_vector(t.image(Sign::plus, i, i), unit(t.d, idx)), Scalar::q_pow(-c));
    }
  }
}

TEST(Weights, Subspace) {
  const auto t22 = tensor_power(vector_rep(2), 2);
  EXPECT_EQ(weight_subspace(t22, Weight{{1, 1}}), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(weight_subspace(t22, Weight{{2, 0}}), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(weight_subspace(t22, Weight{{2, 1}}).empty());
  EXPECT_EQ(weight_subspace(tensor_power(vector_rep(3), 3), Weight{{1, 1, 1}}).size(), 6u);
  EXPECT_EQ((Weight{{2, 1, 0}}.ell()), (std::vector<int>{4, 2, 0}));
}

TEST(Weights, HighestWeightVectorExample) {
  // solved by hand from Delta(l+_12) = l+_11 (x) l+_12 + l+_12 (x) l+_22
  const auto t = tensor_power(vector_rep(2), 2);
  SVector expect(4);
  expect[1] = Scalar(1);
  expect[2] = -qi();
  EXPECT_EQ(highest_weight_vector(t, Weight{{1, 1}}), expect);
  EXPECT_THROW(highest_weight_vector(t, Weight{{0, 2}}), NoHighestWeight);
  const SVector xi = highest_weight_vector(t, Weight{{2, 0}});
  EXPECT_EQ(scalar_on_vector(t.image(Sign::minus, 0, 0), xi), Scalar::q_pow(2));
}

TEST(Weights, ExistenceMatchesDominance) {
  for (auto [n, N] : {std::pair{2, 4}, std::pair{3, 3}}) {
    const auto t = tensor_power(vector_rep(n), N);
    std::vector<int> lam(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == n - 1) {
        lam[static_cast<std::size_t>(pos)] = left;
        const Weight w{lam};
        EXPECT_EQ(highest_weight_vectors(t, w).empty(), !w.dominant()) << w.str();
        return;
      }
      for (int x = 0; x <= left; ++x) {
        lam[static_cast<std::size_t>(pos)] = x;
        rec(pos + 1, left - x);
      }
    };
    rec(0, N);
  }
  EXPECT_EQ(highest_weight_vectors(tensor_power(vector_rep(2), 3), Weight{{2, 1}}).size(), 2u);
  EXPECT_EQ(dominant_weights(3, 3).size(), 3u);
}

TEST(ScalarOnVector, Errors) {
  EXPECT_EQ(scalar_on_vector(SMatrix::identity(3).scaled(qnum(2)), unit(3, 1)), qnum(2));
  SMatrix m(2, 2);
  m(1, 0) = Scalar(1);
  EXPECT_THROW(scalar_on_vector(m, unit(2, 0)), NotAnEigenvector);
}

TEST(BlockOperator, SolveMatchesDenseInverse) {
  const auto t = tensor_power(vector_rep(2), 2);
  for (Sign s : {Sign::plus, Sign::minus}) {
    const BlockOperator op(t, s);
    const SMatrix dense = big_l(t, s);
    const SMatrix inv = inverse(dense);
    for (std::size_t c = 0; c < op.dim(); ++c) {
      const SVector e = unit(op.dim(), c);
      EXPECT_EQ(op.apply(e), dense.apply(e));
      EXPECT_EQ(op.solve(e), inv.apply(e));
    }
  }
  auto bad = vector_rep(2);
  bad.image(Sign::plus, 1, 0)(0, 0) = Scalar(1);
  EXPECT_THROW(BlockOperator(bad, Sign::plus), std::invalid_argument);
}

TEST(EvaluatedL, TrivialAndSigns) {
  const auto t0 = trivial_rep(2);
  const UScalar u = UScalar::var();
  const auto lp = evaluated_L(t0, Sign::plus);
  EXPECT_EQ(lp, Matrix<UScalar>::identity(2).scaled(UScalar(1) - u));
  const auto v = tensor_power(vector_rep(2), 1);
  const auto plus = evaluated_L(v, Sign::plus), minus = evaluated_L(v, Sign::minus);
  EXPECT_EQ(minus, plus.scaled(-(UScalar(1) / u)));
  // u -> 0 limit of the + case
  EXPECT_EQ(plus.map([](const UScalar& x) { return x.eval(Scalar(0)); }), big_l(v, Sign::plus));
}

TEST(Fusion, VectorRep) {
  for (int n = 2; n <= 3; ++n) {
    const auto rs = build_rmatrix_set(n);
    for (Sign s : {Sign::plus, Sign::minus})
      for (int k = 1; k <= 2; ++k) EXPECT_TRUE(check_fusion(vector_rep(n), rs, k, s).pass) << n << " " << k;
  }
  EXPECT_TRUE(check_fusion(vector_rep(3), build_rmatrix_set(3), 3, Sign::plus).pass);
  EXPECT_TRUE(check_fusion(tensor_power(vector_rep(2), 2), build_rmatrix_set(2), 2, Sign::minus).pass);
}

TEST(Fusion, DetectsPerturbation) {
  auto v = vector_rep(2);
  v.image(Sign::minus, 1, 0) = v.image(Sign::minus, 1, 0).scaled(q_());
  EXPECT_FALSE(check_fusion(v, build_rmatrix_set(2), 2, Sign::plus).pass);
}
