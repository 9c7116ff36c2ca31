#include <gtest/gtest.h>

#include "krall/endpoint_fn.hpp"
#include "krall/log_germ.hpp"
#include "krall/poly.hpp"
#include "krall/rational.hpp"

using namespace krall;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(parse_rational("6/4"), frac(3, 2));
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Rational, ExactSquareRoot) {
  EXPECT_EQ(exact_sqrt(frac(9, 4)), frac(3, 2));
  EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
}

TEST(Poly, PowerRule) { EXPECT_EQ(derive(Poly{0, 0, 0, 1}, 2), (Poly{0, 6})); }

TEST(Poly, DoubleRootAtOne) {
  const Poly w2 = Poly::one_minus_x2().pow(2);
  EXPECT_EQ(w2(Rational(1)), 0);
  EXPECT_EQ(w2.root_order(Rational(1)), 2);
}

TEST(Poly, DifferenceOfSquares) { EXPECT_EQ(Poly::one_minus_x2() * (Poly{1, 0, 1}), (Poly{1, 0, 0, 0, -1})); }

TEST(Poly, UnitIntervalIntegral) {
  EXPECT_EQ(integrate_unit_interval(Poly::constant(1)), 2);
  EXPECT_EQ(integrate_unit_interval(Poly::x()), 0);
  EXPECT_EQ(integrate_unit_interval(Poly{0, 0, 1}), frac(2, 3));
}

TEST(Poly, TextRoundTrip) {
  const Poly p{frac(-2, 3), 0, 1};
  EXPECT_EQ(to_string(p), "-2/3,0,1");
  EXPECT_EQ(parse_poly(to_string(p)), p);
}

TEST(Poly, DivisionAndGcd) {
  const Poly a = Poly{-1, 1} * Poly{2, 1};
  const auto [q, r] = divmod(a, Poly{-1, 1});
  EXPECT_EQ(q, (Poly{2, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, Poly{1, 0, -1}), (Poly{-1, 1}));
}

TEST(LogGerm, DerivativeOfLog) {
  const LogGerm L = LogGerm::log(Endpoint::Plus);
  const LogGerm d = derive(L);
  EXPECT_EQ(d.log_degree(), 0);
  EXPECT_EQ(d.term(0), RationalFn(Poly{0, -2}, Poly::one_minus_x2()));
}

TEST(LogGerm, ProductRule) {
  const LogGerm g = Poly::one_minus_x2() * LogGerm::log(Endpoint::Plus);
  const LogGerm expected = Poly{0, -2} * LogGerm::log(Endpoint::Plus) + LogGerm::from_poly(Endpoint::Plus, Poly{0, -2});
  EXPECT_EQ(derive(g), expected);
}

TEST(LogGerm, ConstantHasZeroDerivative) { EXPECT_TRUE(derive(LogGerm::from_poly(Endpoint::Minus, Poly{5})).is_zero()); }

TEST(LogGerm, Limits) {
  const LogGerm uL = Poly::one_minus_x2() * LogGerm::log(Endpoint::Plus);
  EXPECT_EQ(germ_limit(uL).value(), 0);
  EXPECT_EQ(germ_limit(LogGerm::from_poly(Endpoint::Plus, Poly{4, 0, -1})).value(), 3);
  const LimitResult bad = germ_limit(LogGerm::log(Endpoint::Plus));
  ASSERT_FALSE(bad);
  EXPECT_EQ(bad.error().log_power, 1);
  EXPECT_THROW(bad.value(), DivergentLimitError);
}

TEST(LogGerm, PoleDiverges) {
  const LogGerm g(Endpoint::Minus, {{0, RationalFn(Poly{1}, Poly{1, 1})}});
  EXPECT_FALSE(germ_limit(g));
}

TEST(EndpointFn, PiecewiseHasNoMiddle) {
  const EndpointFn f = EndpointFn::piecewise(Poly{0}, Poly{1});
  EXPECT_EQ(f(Rational(1)), 1);
  EXPECT_EQ(f(Rational(-1)), 0);
  EXPECT_THROW(f(Rational(0)), MiddleUnspecified);
  EXPECT_THROW(f.poly(), MiddleUnspecified);
}
