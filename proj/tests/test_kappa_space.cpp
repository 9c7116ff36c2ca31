#include <gtest/gtest.h>

#include "krall/kappa_space.hpp"

using namespace krall;

TEST(KappaInner, DirectEvaluation) {
  const KrallParams unit(1, 1);
  EXPECT_EQ(kappa_inner(Poly{1}, Poly{1}, unit), 4);
  EXPECT_EQ(kappa_inner(Poly::x(), Poly{1}, unit), 0);
  const KrallParams p(1, 2);
  EXPECT_EQ(kappa_inner(Poly{1}, Poly{frac(1, 7), 1}, p), 0);
}

TEST(MuInner, DirectEvaluation) {
  EXPECT_EQ(mu_inner(Poly{1}, Poly{1}, Rational(1)), 4);
  EXPECT_EQ(mu_inner(Poly::x(), Poly{1}, frac(7, 3)), 0);
  EXPECT_EQ(mu_inner(legendre_type(1, Rational(2)).poly, legendre_type(0, Rational(2)).poly, Rational(2)), 0);
}

TEST(ExtendedInner, Components) {
  const KrallParams unit(1, 1);
  EXPECT_EQ(extended_inner({Poly{1}, 1, 1}, {Poly{1}, 1, 1}, unit), 4);
  EXPECT_EQ(extended_inner({Poly{}, 1, 0}, {Poly{}, 0, 1}, unit), 0);
  EXPECT_EQ(extended_inner({Poly{}, 1, 0}, {Poly{}, 1, 0}, KrallParams(2, 1)), frac(1, 2));
}

TEST(Embed, EndpointValues) {
  const ExtendedVector e = embed(Poly::x());
  EXPECT_EQ(e.a, -1);
  EXPECT_EQ(e.b, 1);
  const ExtendedVector w = embed(Poly::one_minus_x2());
  EXPECT_EQ(w.a, 0);
  EXPECT_EQ(w.b, 0);
}

TEST(Gram, DiagonalWithPositiveEntries) {
  for (const KrallParams& p : {KrallParams(1, 1), KrallParams(1, 2), KrallParams(frac(3, 2), frac(5, 2))}) {
    const Matrix G = gram_matrix(10, p);
    ASSERT_EQ(G.size(), 11u);
    EXPECT_TRUE(is_diagonal(G));
    for (std::size_t i = 0; i < G.size(); ++i) EXPECT_GT(G[i][i], 0);
  }
}

TEST(Gram, SmallCase) {
  const Matrix G = gram_matrix(2, KrallParams(1, 2));
  EXPECT_EQ(G[0][0], frac(7, 2));
  EXPECT_EQ(G[0][1], 0);
}

TEST(Expansion, FiniteExactness) {
  const KrallParams p(frac(3, 2), frac(5, 2));
  for (const Poly& f : {Poly{0, 0, 0, 1}, Poly{0, 1, 0, 0, 1}}) {
    const KrallExpansion e = fourier_krall_expansion(f, p);
    EXPECT_EQ(e.reconstruction, f);
    EXPECT_EQ(e.coefficients.size(), static_cast<std::size_t>(f.degree()) + 1);
  }
}
