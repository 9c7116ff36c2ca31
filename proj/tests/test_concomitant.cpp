#include <gtest/gtest.h>

#include "jet_check.hpp"
#include "krall/concomitant.hpp"

using namespace krall;

namespace {

const KrallParams kUnit(1, 1);

}  // namespace

TEST(ConcomitantWithOne, ClosedFormExamples) {
  EXPECT_EQ(concomitant_with_one(Poly::constant(1), Endpoint::Plus, kUnit).value(), 0);
  EXPECT_EQ(concomitant_with_one(Poly{0, 0, 1}, Endpoint::Plus, kUnit).value(), -144);
  const KrallParams p(1, 2);
  EXPECT_EQ(concomitant_with_one(Poly::x(), Endpoint::Minus, p).value(), -24 * (p.B() + 1));
  EXPECT_EQ(concomitant(Poly::x(), Poly::constant(1), Endpoint::Minus, p).value(), -24 * (p.B() + 1));
}

TEST(Concomitant, Antisymmetric) {
  const Poly f{1, 2, 0, -1}, g{0, 0, 3, 0, 1};
  for (Endpoint e : {Endpoint::Plus, Endpoint::Minus})
    EXPECT_EQ(concomitant(f, g, e, kUnit).value(), -concomitant(g, f, e, kUnit).value());
  EXPECT_EQ(concomitant(f, f, Endpoint::Plus, kUnit).value(), 0);
}

TEST(Concomitant, CubeTimesSquaredWeight) {
  const EndpointFn w2 = Poly::one_minus_x2().pow(2);
  EXPECT_EQ(concomitant(Poly{0, 0, 0, 1}, w2, Endpoint::Plus, kUnit).value(), 192);
  EXPECT_EQ(concomitant(Poly{0, 0, 0, 1}, w2, Endpoint::Minus, kUnit).value(), 192);
}

TEST(Concomitant, DivergenceNamesTheLine) {
  const EndpointFn log_fn = EndpointFn::piecewise(LogGerm(Endpoint::Minus), LogGerm::log(Endpoint::Plus));
  const LimitResult r = concomitant(log_fn, Poly::x(), Endpoint::Plus, kUnit);
  ASSERT_FALSE(r);
  EXPECT_NE(r.error().context.find("line"), std::string::npos);
}

TEST(Greens, QuadraticAndCubic) {
  for (const KrallParams& p : {kUnit, KrallParams(1, 2)}) {
    const GreensReport r = greens_formula_check(Poly{0, 0, 1}, Poly{0, 0, 0, 1}, p);
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(greens_formula_check(Poly{1, 1}, Poly{1, 1}, p).lhs, 0);
  }
}

TEST(Lambda, HPlusAgreesWithFloatingPointJets) {
  for (const KrallParams& p : {kUnit, KrallParams(1, 2), KrallParams(frac(3, 2), frac(5, 2))}) {
    const Rational exact = lambda_at(TestFunctions(p).h_plus(), Endpoint::Plus, p).value();
    EXPECT_NEAR(static_cast<double>(jet::lambda_h_plus_numeric(p, 1 - 1e-4L)), exact.get_d(), 0.1) << p.label();
  }
}

TEST(Lambda, HPlusMatchesWeightedConcomitant) {
  const TestFunctions tf(kUnit);
  const Rational lam = lambda_at(tf.h_plus(), Endpoint::Plus, kUnit).value();
  EXPECT_EQ(concomitant(tf.h_plus(), Poly::one_minus_x2(), Endpoint::Plus, kUnit).value(), 2 * lam);
  EXPECT_EQ(symplectic_H(tf.h_plus(), tf.y3(), kUnit).value(), 2 * lam);
}

TEST(HProbe, IdentityOnCanonicalFunctions) {
  for (const KrallParams& p : {kUnit, KrallParams(1, 2)}) {
    const TestFunctions tf(p);
    for (const auto& [name, f] : tf.all()) {
      const LimitResult lhs = concomitant(f, tf.h_plus(), Endpoint::Plus, p);
      const LimitResult rhs = h_probe_rhs(f, Endpoint::Plus, p);
      if (lhs && rhs) EXPECT_EQ(*lhs, *rhs) << name;
    }
  }
}

TEST(Reduction, MatchesFiveLineForm) {
  const TestFunctions tf(kUnit);
  for (const auto& [fn, f] : tf.all())
    for (const auto& [gn, g] : tf.all()) {
      const LimitResult lhs = concomitant(f, g, Endpoint::Plus, kUnit);
      const LimitResult rhs = concomitant_reduction(f, g, Endpoint::Plus, kUnit);
      if (lhs && rhs) EXPECT_EQ(*lhs, *rhs) << fn << " " << gn;
    }
}

TEST(Delta, Membership) {
  const TestFunctions tf(kUnit);
  for (int k = 0; k <= 12; ++k) EXPECT_TRUE(delta_membership(Poly::monomial(1, k), kUnit)->member) << k;
  EXPECT_TRUE(delta_membership(Poly::one_minus_x2().pow(2), kUnit)->member);
  const auto h = delta_membership(tf.h_plus(), kUnit);
  ASSERT_TRUE(h);
  EXPECT_FALSE(h->member);
  EXPECT_NE(h->lambda_plus, 0);
  EXPECT_TRUE(h->routes_agree());
}

TEST(SDomain, Examples) {
  EXPECT_TRUE(*s_domain_membership(Poly::one_minus_x2().pow(3), kUnit));
  EXPECT_FALSE(*s_domain_membership(Poly::x(), kUnit));
  EXPECT_TRUE(*s_domain_membership(Poly::constant(1), kUnit));
}
