#include <gtest/gtest.h>

#include "krall/krall_operator.hpp"

using namespace krall;

namespace {
const KrallParams kUnit(1, 1);
const KrallParams kOneTwo(1, 2);
const KrallParams kHalves(frac(3, 2), frac(5, 2));
const std::array<KrallParams, 3> kAll{kUnit, kOneTwo, kHalves};
}  // namespace

TEST(ApplyKrall, ConstantsAreAnnihilated) { EXPECT_TRUE(apply_krall(Poly::constant(1), kUnit).is_zero()); }

TEST(ApplyKrall, LinearAndQuadratic) {
  EXPECT_EQ(apply_krall(Poly::x(), kUnit), (Poly{0, 48}));
  EXPECT_EQ(apply_krall(Poly{0, 0, 1}, kUnit), (Poly{-288, 0, 432}));
}

TEST(ApplyKrall, LinearGeneralParameters) {
  // (24AB + 12A + 12B) x + 12B - 12A
  EXPECT_EQ(apply_krall(Poly::x(), kOneTwo), (Poly{12, 84}));
}

TEST(SymmetricForm, MatchesExpandedFormOnPolynomials) {
  for (const auto& p : kAll) {
    EXPECT_EQ(apply_krall_symmetric(Poly{0, 0, 0, 1}, p), apply_krall(Poly{0, 0, 0, 1}, p));
    const Poly w3 = Poly::one_minus_x2().pow(3);
    EXPECT_EQ(apply_krall_symmetric(w3, p), apply_krall(w3, p));
  }
}

TEST(SymmetricForm, ConsistencyOnlyWithConcomitantPi) {
  for (const auto& p : kAll) {
    const ConsistencyReport r = consistency_check(p);
    EXPECT_TRUE(r.corrected_ok());
    EXPECT_FALSE(r.stated_ok());
  }
}

TEST(Eigenvalue, SmallValues) {
  EXPECT_EQ(krall_eigenvalue(0, kUnit), 0);
  EXPECT_EQ(krall_eigenvalue(1, kUnit), 48);
  EXPECT_EQ(krall_eigenvalue(2, kUnit), 432);
  EXPECT_EQ(krall_eigenvalue(1, kOneTwo), 84);
}

TEST(Eigenvalue, AgreesWithLeadingCoefficient) {
  for (const auto& p : kAll)
    for (long n = 0; n <= 20; ++n) EXPECT_EQ(krall_eigenvalue(n, p), leading_operator_coefficient(n, p)) << n;
}

TEST(Eigenvalue, StatedFactorVanishesAtOne) {
  EXPECT_EQ(stated_eigenvalue(1, kUnit), 0);
  EXPECT_NE(leading_operator_coefficient(1, kUnit), 0);
}

TEST(KrallPolynomial, LowDegrees) {
  EXPECT_EQ(krall_polynomial(0, kUnit), Poly::constant(1));
  EXPECT_EQ(krall_polynomial(1, kOneTwo), (Poly{frac(1, 7), 1}));
  EXPECT_EQ(krall_polynomial(1, kUnit), Poly::x());
}

TEST(KrallPolynomial, EigenIdentity) {
  for (const auto& p : kAll)
    for (int n = 0; n <= 12; ++n) {
      const Poly K = krall_polynomial(n, p);
      EXPECT_EQ(K.degree(), n);
      EXPECT_TRUE((apply_krall(K, p) - K * krall_eigenvalue(n, p)).is_zero()) << p.label() << " n=" << n;
    }
}

TEST(ClosedForm, ZeroDegree) {
  EXPECT_EQ(krall_polynomial_closed_form(0, kOneTwo, ParseVariant::CloseAtEnd), Poly::constant(frac(2, 1)));
  for (auto v : kParseVariants) EXPECT_FALSE(krall_polynomial_closed_form(0, kHalves, v).is_zero());
}

TEST(ClosedForm, Proportionality) {
  EXPECT_EQ(proportionality(Poly{2, 4}, Poly{1, 2}), Rational(2));
  EXPECT_FALSE(proportionality(Poly{2, 4}, Poly{1, 3}).has_value());
}

TEST(LegendreType, FirstTwo) {
  const LegendreType p0 = legendre_type(0, Rational(3));
  EXPECT_EQ(p0.eigenvalue, 0);
  EXPECT_EQ(p0.poly.degree(), 0);
  const LegendreType p1 = legendre_type(1, Rational(3));
  EXPECT_EQ(p1.eigenvalue, 24);
  EXPECT_EQ(apply_legendre_type(Poly::x(), Rational(3)), (Poly{0, 24}));
  EXPECT_THROW(legendre_type(1, Rational(0)), std::invalid_argument);
}

TEST(Params, RejectNonPositive) {
  EXPECT_THROW(KrallParams(1, -1), std::invalid_argument);
  EXPECT_THROW(KrallParams(0, 1), std::invalid_argument);
}
