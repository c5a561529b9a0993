#include <gtest/gtest.h>

#include "qgelfand/central.hpp"
#include "qgelfand/suite.hpp"

using namespace qgelfand;

namespace {

Scalar q_() { return Scalar::q(); }
Scalar qi() { return Scalar::q_pow(-1); }
Scalar qp(int k) { return Scalar::q_pow(k); }

SVector unit(std::size_t d, std::size_t i) {
  SVector v(d);
  v[i] = Scalar(1);
  return v;
}

// tr D (L- (L+)^-1)^m with dense inverses and an explicit auxiliary trace.
SMatrix dense_gelfand(const Representation& rep, int m) {
  const SMatrix lp = big_l(rep, Sign::plus), lm = big_l(rep, Sign::minus);
  const SMatrix k = lm * inverse(lp);
  SMatrix pw = SMatrix::identity(k.rows());
  for (int i = 0; i < m; ++i) pw = pw * k;
  SMatrix out(rep.d, rep.d);
  for (int i = 0; i < rep.n; ++i)
    for (std::size_t a = 0; a < rep.d; ++a)
      for (std::size_t b = 0; b < rep.d; ++b)
        out(a, b) += qp(rep.n - 1 - 2 * i) * pw(static_cast<std::size_t>(i) * rep.d + a, static_cast<std::size_t>(i) * rep.d + b);
  return out;
}

}  // namespace

TEST(QNumbers, PerturbationOnlyAboveOne) {
  const QNumbers plain, bad{true};
  EXPECT_EQ(bad(1), plain(1));
  EXPECT_EQ(bad(0), Scalar());
  EXPECT_EQ(bad(2), plain(2) + Scalar(1));
  EXPECT_EQ(bad(-3), plain(-3) - Scalar(1));
}

TEST(Resolvent, VectorAndOperator) {
  const Representation rep = tensor_power(vector_rep(2), 2);
  const EvaluatedRep ev(rep, Sign::plus);
  auto k = [&](const SVector& v) { return ev.apply_k(v); };
  const SVector b = unit(ev.dim(), 1);
  const VectorResolvent r = vector_resolvent(k, b);
  EXPECT_EQ(r.den.coeff(0), Scalar(1));
  // (1 - Kt) num(t) = den(t) b
  for (std::size_t m = 0; m <= r.num.size(); ++m) {
    SVector lhs(ev.dim());
    if (m < r.num.size()) lhs = r.num[m];
    if (m > 0) {
      const SVector kb = k(r.num[m - 1]);
      for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= kb[i];
    }
    SVector rhs(ev.dim());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = r.den.coeff(static_cast<int>(m)) * b[i];
    EXPECT_EQ(lhs, rhs) << "t^" << m;
  }
  const SMatrix kd = ev.dense(k);
  const OpResolvent op = operator_resolvent(kd);
  OpPoly left = OpPoly::linear(SMatrix::identity(kd.rows()), kd.scaled(Scalar(-1))) * op.num, right;
  for (const auto& c : op.den.coeffs()) right.c.push_back(SMatrix::identity(kd.rows()).scaled(c));
  EXPECT_TRUE(compare_oppoly(left, right).pass);
}

TEST(Gelfand, MatchesDenseInverse) {
  for (const auto& rep : {vector_rep(2), vector_rep(3), tensor_power(vector_rep(2), 2), dual_vector_rep(3)}) {
    const auto inv = gelfand_invariants(rep, 3);
    for (int m = 0; m <= 3; ++m) EXPECT_EQ(inv[static_cast<std::size_t>(m)], dense_gelfand(rep, m)) << "m=" << m;
  }
}

TEST(Gelfand, VectorRepScalars) {
  const Representation rep = vector_rep(2);
  const auto s = gelfand_scalars(rep, unit(2, 0), 2);
  EXPECT_EQ(s[0], q_() + qi());
  EXPECT_EQ(s[1], qp(3) + qi());
  EXPECT_EQ(s[1], closed_form_value(Weight{{1, 0}}, 1));
  EXPECT_EQ(s[2], closed_form_value(Weight{{1, 0}}, 2));
}

TEST(Gelfand, Central) {
  const Representation rep = tensor_power(vector_rep(2), 2);
  const auto inv = gelfand_invariants(rep, 3);
  for (const auto& z : inv) EXPECT_TRUE(centrality_check(rep, z).pass);
  SMatrix bad = inv[1];
  bad(0, 1) += Scalar(1);
  EXPECT_FALSE(centrality_check(rep, bad).pass);
}

TEST(ClosedForm, Values) {
  EXPECT_EQ(closed_form_value(Weight{{5}}, 3), qp(30));
  EXPECT_EQ(closed_form_value(Weight{{1, 0}}, 0), q_() + qi());
  EXPECT_EQ(closed_form_value(Weight{{0, 0, 0}}, 0), qnum(3));
  EXPECT_THROW(closed_form_eigenvalue(Weight{{0, 1}}, 1), RepeatedShiftedWeight);
  EXPECT_THROW(closed_form_eigenvalue(Weight{{0, 2}}, 1), std::invalid_argument);
}

TEST(ClosedForm, ClassicalLimit) {
  const Weight w{{1, 0}};
  EXPECT_EQ(classical_limit_eigenvalue(w, 1), BigRational(1));
  EXPECT_EQ(classical_limit_eigenvalue(w, 2), BigRational(2));
  EXPECT_EQ(classical_limit_eigenvalue(w, 0), BigRational(2));
  EXPECT_EQ(classical_limit_eigenvalue(Weight{{0, 0, 0}}, 0), BigRational(3));
  EXPECT_EQ(classical_limit_eigenvalue(Weight{{0, 0, 0}}, 2), BigRational(0));
  EXPECT_EQ(perelomov_popov(Weight{{0, 0, 0}}, 0), BigRational(3));
  for (int m = 0; m <= 4; ++m) EXPECT_TRUE(classical_limit_check(Weight{{2, 1, 0}}, m).pass);
  EXPECT_FALSE(classical_limit_check(w, 2, QNumbers{true}).pass);
}

TEST(ClosedForm, ShiftCovariance) {
  EXPECT_EQ(closed_form_value(Weight{{0, -1}}, 1), qp(-2) * closed_form_value(Weight{{1, 0}}, 1));
  for (int m = 0; m <= 3; ++m) EXPECT_TRUE(shift_covariance_check(Weight{{2, 0}}, m, 1).pass) << m;
  EXPECT_FALSE(shift_covariance_check(Weight{{2, 0}}, 1, 1, QNumbers{true}).pass);
  EXPECT_FALSE(shift_covariance_check(Weight{{2, 0}}, 0, 1, QNumbers{true}).pass);
}

TEST(ClosedForm, PartialFractions) {
  const Weight w{{1, 0}};
  const auto pf = partial_fractions(w);
  EXPECT_EQ(pf.c, qp(4));
  EXPECT_TRUE(partial_fraction_check(w, 4).pass);
  EXPECT_TRUE(partial_fraction_check(Weight{{2, 1, 0}}, 4).pass);
  EXPECT_FALSE(partial_fraction_check(w, 4, QNumbers{true}).pass);
  const UScalar u = UScalar::var();
  const UScalar expect = (UScalar(qp(-2)) - UScalar(qp(4)) * u) * (UScalar(1) - UScalar(qp(2)) * u) /
                         ((UScalar(qp(-2)) - UScalar(qp(2)) * u) * (UScalar(1) - u));
  EXPECT_EQ(qdet_ratio_closed_form(w), expect);
}

TEST(Minors, QdetVectorRep) {
  const Representation rep = vector_rep(2);
  const OpPoly qd = qdet_eval(rep, Sign::plus);
  const Poly<Scalar> expect = qdet_closed_form(Weight{{1, 0}}, Sign::plus);
  // q (q^-2 - q^2 u)(1 - u)
  EXPECT_EQ(expect, Poly<Scalar>(std::vector<Scalar>{qi(), -(qi() + qp(3)), qp(3)}));
  const SparseImages im(rep);
  EXPECT_EQ(qdet_scalar(im, Sign::plus, unit(2, 0)), expect);
  // central: qdet acts on the irreducible vector representation by a scalar
  for (std::size_t k = 0; k < qd.c.size(); ++k) EXPECT_EQ(qd.c[k], SMatrix::identity(2).scaled(expect.coeff(static_cast<int>(k))));
  EXPECT_THROW(minor_terms({1, 0}, {1, 0}), std::invalid_argument);
  EXPECT_EQ(minor_terms({}, {}).size(), 1u);
}

TEST(Minors, RowAndColumnExpansionsAgree) {
  const Representation rep = vector_rep(3);
  for (Sign s : {Sign::plus, Sign::minus}) {
    const OpPoly a = quantum_minor_eval(rep, s, {0, 2}, {2, 1});
    const OpPoly b = quantum_minor_eval(rep, s, {0, 2}, {1, 2}).scaled(Scalar(-1) * qi());
    EXPECT_TRUE(compare_oppoly(a, b).pass) << sign_name(s);
  }
}

TEST(Comatrix, Identities) {
  for (const auto& rep : {vector_rep(2), vector_rep(3), tensor_power(vector_rep(2), 2)})
    for (Sign s : {Sign::plus, Sign::minus}) EXPECT_TRUE(comatrix_check(rep, s).pass) << rep.n << sign_name(s);
}

TEST(ZOperator, TrivialRep) {
  for (int n = 1; n <= 3; ++n) {
    const auto z = z_eval(trivial_rep(n), Sign::plus);
    const UScalar u = UScalar::var();
    EXPECT_EQ(z(0, 0), (UScalar(1) - UScalar(qp(2 * n)) * u) / (UScalar(1) - u));
    const auto zm = z_eval(trivial_rep(n), Sign::minus);
    EXPECT_EQ(zm(0, 0), UScalar(qp(-2 * n)) * z(0, 0));
  }
}

TEST(ZOperator, MatrixRelations) {
  for (const auto& rep : {vector_rep(2), vector_rep(3), tensor_power(vector_rep(2), 2)})
    for (Sign s : {Sign::plus, Sign::minus}) {
      EXPECT_TRUE(z_matrix_check(rep, s).pass) << rep.n << sign_name(s);
      EXPECT_TRUE(z_operator(rep, s).inverse_ok.pass);
    }
}

TEST(ZOperator, SeriesCoefficientsCentralAndConsistent) {
  const Representation rep = tensor_power(vector_rep(2), 2);
  const auto coeffs = z_series_coefficients(rep, Sign::plus, 4);
  EXPECT_EQ(coeffs[0], SMatrix::identity(rep.d));
  for (const auto& c : coeffs) EXPECT_TRUE(centrality_check(rep, c).pass);
  const auto zm = z_eval(rep, Sign::plus);
  for (std::size_t i = 0; i < rep.d; ++i) {
    const auto ser = zm(i, i).expand(4);
    for (int m = 0; m <= 4; ++m) EXPECT_EQ(ser.coeffs[static_cast<std::size_t>(m)], coeffs[static_cast<std::size_t>(m)](i, i));
  }
  const auto gel = gelfand_invariants(rep, 4);
  for (int m = 1; m <= 4; ++m)
    EXPECT_EQ(coeffs[static_cast<std::size_t>(m)], gel[static_cast<std::size_t>(m)].scaled(qp(1) - qp(3)));
}

TEST(Liouville, VectorAndTensor) {
  const Representation v2 = vector_rep(2);
  for (Sign s : {Sign::plus, Sign::minus}) EXPECT_TRUE(liouville_check(v2, unit(2, 0), Weight{{1, 0}}, s).pass) << sign_name(s);
  EXPECT_EQ(in_u(z_scalar(v2, Sign::plus, unit(2, 0)), Sign::plus), qdet_ratio_closed_form(Weight{{1, 0}}));
  const Representation t = tensor_power(vector_rep(2), 2);
  const Weight w{{1, 1}};
  const SVector xi = highest_weight_vector(t, w);
  for (Sign s : {Sign::plus, Sign::minus}) EXPECT_TRUE(liouville_check(t, xi, w, s).pass) << sign_name(s);
  EXPECT_FALSE(liouville_check(v2, unit(2, 0), Weight{{1, 0}}, Sign::plus, QNumbers{true}).pass);
}

TEST(Liouville, SeriesExpansion) {
  const Representation t = tensor_power(vector_rep(3), 2);
  const Weight w{{2, 0, 0}};
  const SVector xi = highest_weight_vector(t, w);
  EXPECT_TRUE(series_expansion_check(t, xi, 4).pass);
  EXPECT_FALSE(series_expansion_check(t, xi, 4, QNumbers{true}).pass);
}

TEST(Alternate, Families) {
  for (const auto& rep : {vector_rep(2), tensor_power(vector_rep(2), 2), vector_rep(3)}) EXPECT_TRUE(alternate_operator_check(rep, 3).pass);
  const Representation t = tensor_power(vector_rep(2), 2);
  const Weight w{{2, 0}};
  EXPECT_TRUE(alternate_eigenvalue_check(t, highest_weight_vector(t, w), w, 3).pass);
  const Weight v{{1, 0}};
  EXPECT_EQ(closed_form_value(v, 1, {}, true), (qp(-4) + qnum(3)) / qnum(2));
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(closed_form_value(v, m, {}, true), closed_form_value(v, m).invert_q());
  EXPECT_FALSE(alternate_eigenvalue_check(t, highest_weight_vector(t, w), w, 3, QNumbers{true}).pass);
}

TEST(Conversion, TInverse) {
  const UScalar u = UScalar::var();
  // t = 1/u: (1 - 2t)/(1 + t) = (u - 2)/(u + 1)
  const UScalar r_t = (UScalar(1) - UScalar(Scalar(2)) * u) / (UScalar(1) + u);
  EXPECT_EQ(t_inverse_in_u(r_t), (u - UScalar(2)) / (u + UScalar(1)));
  EXPECT_EQ(t_inverse_in_u(u), UScalar(1) / u);
}

TEST(Property, SmallWeightSweep) {
  for (int n : {2, 3})
    for (int N = 0; N <= 3; ++N) {
      const Representation rep = tensor_power(vector_rep(n), N);
      for (const Weight& w : dominant_weights(n, N))
        for (const SVector& xi : highest_weight_vectors(rep, w)) {
          const auto vals = gelfand_scalars(rep, xi, 3);
          for (int m = 0; m <= 3; ++m) EXPECT_EQ(vals[static_cast<std::size_t>(m)], closed_form_value(w, m)) << w.str() << " m=" << m;
          for (Sign s : {Sign::plus, Sign::minus}) EXPECT_TRUE(liouville_check(rep, xi, w, s).pass) << w.str();
          EXPECT_TRUE(series_expansion_check(rep, xi, 3).pass) << w.str();
          EXPECT_TRUE(partial_fraction_check(w, 3).pass) << w.str();
          for (int m = 0; m <= 3; ++m) {
            EXPECT_TRUE(classical_limit_check(w, m).pass) << w.str();
            EXPECT_TRUE(shift_covariance_check(w, m, -2).pass) << w.str();
          }
        }
    }
}
