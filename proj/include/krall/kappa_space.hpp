#ifndef KRALL_KAPPA_SPACE_HPP
#define KRALL_KAPPA_SPACE_HPP

#include <vector>

#include "krall/krall_operator.hpp"

namespace krall {

using Matrix = std::vector<std::vector<Rational>>;

/// A vector (f, a, b) of L^2(-1,1) + C^2, with a sitting at -1 and b at +1.
struct ExtendedVector {
  EndpointFn f;
  Rational a;
  Rational b;

  friend bool operator==(const ExtendedVector&, const ExtendedVector&) = default;
};

/// f(-1)g(-1)/A + int f g + f(1)g(1)/B
inline Rational kappa_inner(const Poly& f, const Poly& g, const KrallParams& p) {
  return f(-1) * g(-1) / p.A() + integrate_unit_interval(f * g) + f(1) * g(1) / p.B();
}

/// The equal-jump case: both point masses carry 1/A.
inline Rational mu_inner(const Poly& f, const Poly& g, const Rational& A) {
  return kappa_inner(f, g, KrallParams(A, A));
}

inline Rational extended_inner(const ExtendedVector& u, const ExtendedVector& v, const KrallParams& p) {
  return u.a * v.a / p.A() + integrate_unit_interval(u.f.poly() * v.f.poly()) + u.b * v.b / p.B();
}

inline ExtendedVector embed(const Poly& f) { return {EndpointFn(f), f(-1), f(1)}; }

/// G[m][n] = kappa_inner(K_m, K_n) for the kernel-solver polynomials K_0..K_N.
inline Matrix gram_matrix(int N, const KrallParams& p) {
  const auto K = krall_polynomials(N, p);
  Matrix g(K.size(), std::vector<Rational>(K.size()));
  for (std::size_t m = 0; m < K.size(); ++m)
    for (std::size_t n = m; n < K.size(); ++n) g[m][n] = g[n][m] = kappa_inner(K[m], K[n], p);
  return g;
}

inline bool is_diagonal(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (i != j && sgn(m[i][j]) != 0) return false;
  return true;
}

struct KrallExpansion {
  std::vector<Rational> coefficients;  // c_n = <f, K_n> / <K_n, K_n>
  Poly reconstruction;                 // sum c_n K_n
};

/// Truncated Fourier-Krall expansion of f through degree(f).
inline KrallExpansion fourier_krall_expansion(const Poly& f, const KrallParams& p) {
  KrallExpansion out;
  const int N = f.is_zero() ? 0 : f.degree();
  for (const Poly& k : krall_polynomials(N, p)) {
    Rational c = kappa_inner(f, k, p) / kappa_inner(k, k, p);
    out.reconstruction += k * c;
    out.coefficients.push_back(std::move(c));
  }
  return out;
}

}  // namespace krall

#endif  // KRALL_KAPPA_SPACE_HPP
