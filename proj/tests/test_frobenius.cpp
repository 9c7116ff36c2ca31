#include <gtest/gtest.h>

#include <climits>

#include "krall/frobenius.hpp"

using namespace krall;

namespace {
const std::array<KrallParams, 3> kAll{KrallParams(1, 1), KrallParams(1, 2), KrallParams(frac(3, 2), frac(5, 2))};

const FrobeniusSolution& find(const std::vector<FrobeniusSolution>& basis, FrobeniusTag t) {
  for (const auto& s : basis)
    if (s.tag == t) return s;
  throw std::logic_error("missing tag");
}
}  // namespace

TEST(Indicial, RootsAtBothEndpoints) {
  const std::vector<Rational> expected{3, 2, 1, 1, 0, -1};
  for (const auto& p : kAll)
    for (Endpoint e : {Endpoint::Plus, Endpoint::Minus}) {
      const IndicialData d = indicial_polynomial(e, p);
      EXPECT_EQ(d.roots, expected) << p.label() << " " << to_string(e);
      EXPECT_EQ(d.rho.degree(), 6);
    }
}

TEST(Basis, RejectsShortTruncation) { EXPECT_THROW(frobenius_basis(Endpoint::Plus, 11, kAll[0]), std::invalid_argument); }

TEST(Basis, ResidualOrders) {
  for (const auto& p : kAll)
    for (Endpoint e : {Endpoint::Plus, Endpoint::Minus}) {
      const auto basis = frobenius_basis(e, 20, p);
      ASSERT_EQ(basis.size(), 6u);
      for (const auto& s : basis) EXPECT_GE(residual_order(s, p), 14) << to_string(s.tag);
    }
}

TEST(Basis, ConstantSolution) {
  const auto basis = frobenius_basis(Endpoint::Plus, 20, kAll[0]);
  const auto& phi0 = find(basis, FrobeniusTag::Phi0);
  EXPECT_EQ(residual_order(phi0, kAll[0]), INT_MAX);
  EXPECT_EQ(phi0.coeff(0, 0), 1);
}

TEST(Basis, CorruptedCoefficientIsDetected) {
  auto s = find(frobenius_basis(Endpoint::Plus, 20, kAll[1]), FrobeniusTag::Phi2);
  s.terms[{3, 0}] += frac(1, 5);
  EXPECT_LT(residual_order(s, kAll[1]), 14);
}

TEST(Basis, LinkedLogPart) {
  const auto basis = frobenius_basis(Endpoint::Minus, 20, kAll[2]);
  const auto& phi1 = find(basis, FrobeniusTag::Phi1);
  const auto& hat = find(basis, FrobeniusTag::PhiHat1);
  for (int m = 0; m <= 20; ++m) EXPECT_EQ(hat.coeff(m, 1), 3 * phi1.coeff(m, 0)) << m;
}

TEST(ResidualOrder, ZeroSeriesSentinel) {
  FrobeniusSolution z;
  z.endpoint = Endpoint::Plus;
  z.order = 20;
  EXPECT_EQ(leading_power(to_series(z)), INT_MAX);
}

TEST(L2, LimitFiveAtEachEndpoint) {
  for (const auto& p : kAll) {
    for (Endpoint e : {Endpoint::Plus, Endpoint::Minus}) {
      const L2Classification c = l2_classification(e, p);
      EXPECT_EQ(c.count, 5);
      for (const auto& [tag, ok] : c.in_l2) EXPECT_EQ(ok, tag != FrobeniusTag::PhiMinus1) << to_string(tag);
    }
    EXPECT_EQ(deficiency_index(p), 4);
  }
}

TEST(L2, Derivatives) {
  const auto basis = frobenius_basis(Endpoint::Plus, 20, kAll[0]);
  EXPECT_FALSE(derivative_l2(find(basis, FrobeniusTag::PhiHat1), 2));
  EXPECT_TRUE(derivative_l2(find(basis, FrobeniusTag::Phi3), 2));
  EXPECT_TRUE(derivative_l2(find(basis, FrobeniusTag::Phi1), 1));
}

TEST(Dump, HeaderAndLogTerms) {
  const auto basis = frobenius_basis(Endpoint::Plus, 20, kAll[0]);
  const std::string text = dump_series(find(basis, FrobeniusTag::PhiHat1));
  EXPECT_EQ(text.rfind("# phi-hat-1", 0), 0u);
  EXPECT_NE(text.find(", 1) "), std::string::npos);
}

TEST(Tags, RoundTrip) {
  for (auto t : kFrobeniusTags) EXPECT_EQ(parse_frobenius_tag(to_string(t)), t);
  EXPECT_FALSE(parse_frobenius_tag("phi-7").has_value());
}
