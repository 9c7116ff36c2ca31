#include <gtest/gtest.h>

#include "krall/gkn_em.hpp"

using namespace krall;

namespace {
const KrallParams kUnit(1, 1);
const std::array<KrallParams, 3> kAll{kUnit, KrallParams(1, 2), KrallParams(frac(3, 2), frac(5, 2))};
}  // namespace

TEST(WSpace, InnerProduct) {
  EXPECT_EQ(w_inner({1, 0}, {1, 0}, KrallParams(2, 1)), frac(1, 2));
  EXPECT_EQ(w_inner({1, 0}, {0, 1}, kUnit), 0);
}

TEST(WSpace, XiCoordinates) {
  EXPECT_EQ(psi(0, 0).dot(psi(0, 0)), 0);
  const XiCoords c = psi(1, 0);
  EXPECT_EQ(c.alpha1, 1);
  EXPECT_EQ(c.alpha2, 0);
  const auto s = c.standard(KrallParams(frac(9, 4), 1));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->a, frac(3, 2));
  EXPECT_FALSE(c.standard(KrallParams(2, 1)).has_value());
}

TEST(Omega, GlobalOneIsZero) { EXPECT_EQ(omega(Poly::constant(1), kUnit).value(), (WVector{0, 0})); }

TEST(Omega, GknSet) {
  for (const auto& p : kAll) {
    const auto ys = krall_gkn_set(p);
    const Rational& A = p.A();
    const Rational& B = p.B();
    EXPECT_EQ(omega(ys[0].fn, p).value(), (WVector{0, -192 * B}));
    EXPECT_EQ(omega(ys[1].fn, p).value(), (WVector{-192 * A, 0}));
    EXPECT_EQ(omega(ys[2].fn, p).value(), (WVector{0, 48 * B * (A + 2)}));
    EXPECT_EQ(omega(ys[3].fn, p).value(), (WVector{48 * A * (B + 2), 0}));
    for (const auto& y : ys) EXPECT_EQ(omega(y.fn, p).value(), omega_direct(y.fn, p).value());
  }
}

TEST(Brackets, ZeroWPartsReduceToH) {
  const auto ys = krall_gkn_set(kUnit);
  const GknCandidate u{Poly{0, 0, 1}, {}};
  EXPECT_EQ(symplectic_HW(u, ys[0], kUnit).value(), symplectic_H(Poly{0, 0, 1}, ys[0].fn, kUnit).value());
  EXPECT_EQ(symplectic_HW(u, u, kUnit).value(), 0);
  const GknCandidate pure_w{Poly{}, {1, 0}};
  EXPECT_EQ(symplectic_HW(pure_w, ys[2], kUnit).value(), 0);
}

TEST(Brackets, GknSetIsSymmetric) {
  for (const auto& p : kAll) EXPECT_TRUE(gkn_symmetry_check(krall_gkn_set(p), p).all_zero());
}

TEST(Brackets, F2AgainstY3) {
  const KrallParams p(1, 2);
  const TestFunctions tf(p);
  EXPECT_EQ(symplectic_H(tf.f2(), tf.y3(), p).value(), -48 * (p.A() + 2));
  const std::vector<GknCandidate> set{{tf.y3(), {}}, {tf.f2(), {}}};
  EXPECT_FALSE(gkn_symmetry_check(set, p).all_zero());
}

TEST(Certificate, NonsingularProbeMatrix) {
  for (const auto& p : kAll) {
    const TestFunctions tf(p);
    const auto c = independence_certificate(
        krall_gkn_set(p), {{tf.f1(), {}}, {tf.f2(), {}}, {tf.h_plus(), {}}, {tf.h_minus(), {}}}, p);
    ASSERT_TRUE(c);
    EXPECT_TRUE(c->certified());
    EXPECT_EQ(c->matrix[0][1], 192);
    EXPECT_EQ(c->matrix[1][0], 192);
    EXPECT_EQ(c->matrix[1][2], -48 * (p.A() + 2));
    EXPECT_EQ(c->matrix[0][3], -48 * (p.B() + 2));
  }
}

TEST(Certificate, DuplicateIsInconclusive) {
  const auto ys = krall_gkn_set(kUnit);
  const TestFunctions tf(kUnit);
  const auto c = independence_certificate({ys[0], ys[0]}, {{tf.f1(), {}}, {tf.f2(), {}}}, kUnit);
  ASSERT_TRUE(c);
  EXPECT_FALSE(c->certified());
}

TEST(Domain, Examples) {
  const auto x = domain_membership({Poly::x(), -1, 1}, kUnit);
  ASSERT_TRUE(x);
  EXPECT_TRUE(x->member());
  const auto bad = domain_membership({Poly::x(), 0, 1}, kUnit);
  ASSERT_TRUE(bad);
  EXPECT_FALSE(bad->member());
  EXPECT_TRUE(bad->routes_agree());
  EXPECT_EQ(bad->conditions[1], -192);
  const TestFunctions tf(kUnit);
  const auto h = domain_membership({tf.h_plus(), 0, 0}, kUnit);
  ASSERT_TRUE(h);
  EXPECT_FALSE(h->member());
  EXPECT_TRUE(h->routes_agree());
  EXPECT_NE(h->lambda_plus, 0);
}

TEST(THat, Examples) {
  const THatImage one = apply_T_hat(embed(Poly::constant(1)), kUnit);
  EXPECT_EQ(one.value.f.poly(), Poly{});
  EXPECT_EQ(one.value.a, 0);
  EXPECT_EQ(one.value.b, 0);
  const THatImage sq = apply_T_hat(embed(Poly{0, 0, 1}), kUnit);
  EXPECT_EQ(sq.value.f.poly(), (Poly{-288, 0, 432}));
  EXPECT_EQ(sq.value.a, 144);
  EXPECT_EQ(sq.value.b, 144);
  EXPECT_TRUE(sq.forms_agree());
  EXPECT_THROW(apply_T_hat({Poly::x(), 0, 1}, kUnit), NotInDomain);
}

TEST(THat, KrallPolynomialsAreEigenvectors) {
  for (const auto& p : kAll)
    for (int n = 0; n <= 10; ++n) EXPECT_TRUE(eigen_verify(n, p).holds()) << p.label() << " n=" << n;
  const EigenReport r = eigen_verify(1, KrallParams(1, 2));
  EXPECT_EQ(r.lambda, 84);
  EXPECT_EQ(r.K, (Poly{frac(1, 7), 1}));
}

TEST(OperatorMatrix, Diagonal) {
  for (const auto& p : kAll) {
    const Matrix M = operator_matrix(5, p);
    for (int i = 0; i <= 5; ++i)
      for (int j = 0; j <= 5; ++j) EXPECT_EQ(M[i][j], i == j ? krall_eigenvalue(i, p) : Rational(0));
  }
}

TEST(Determinant, Small) {
  EXPECT_EQ(determinant({{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant({{1, 2}, {2, 4}}), 0);
}
