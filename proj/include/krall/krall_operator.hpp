#ifndef KRALL_KRALL_OPERATOR_HPP
#define KRALL_KRALL_OPERATOR_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "krall/endpoint_fn.hpp"
#include "krall/params.hpp"

namespace krall {

/// Anything the differential expressions can act on: Poly, LogGerm, EndpointFn.
template <class F>
concept FunctionAlgebra = requires(const F& f, const Poly& p, const Rational& s) {
  { derive(f) } -> std::convertible_to<F>;
  { p * f } -> std::convertible_to<F>;
  { s * f } -> std::convertible_to<F>;
  { f + f } -> std::convertible_to<F>;
  { f - f } -> std::convertible_to<F>;
};

/// Coefficient polynomials of the expanded sixth-order form, indexed by
/// derivative order (index 0 is always zero: constants are annihilated).
struct ExpressionForm {
  std::array<Poly, 7> coeff;

  friend bool operator==(const ExpressionForm&, const ExpressionForm&) = default;
};

inline ExpressionForm expanded_form(const KrallParams& p) {
  const Rational& A = p.A();
  const Rational& B = p.B();
  const Poly x2m1{-1, 0, 1};  // x^2 - 1
  ExpressionForm f;
  f.coeff[6] = x2m1.pow(3);
  f.coeff[5] = Poly{0, 18} * x2m1.pow(2);
  f.coeff[4] = x2m1 * Poly{-3 * A - 3 * B - 36, 0, 3 * A + 3 * B + 96};
  f.coeff[3] = Poly{0, 24 * A + 24 * B + 168} * x2m1;
  f.coeff[2] = Poly{-12 * A * B - 30 * A - 30 * B - 72, 12 * B - 12 * A, 12 * A * B + 42 * A + 42 * B + 72};
  f.coeff[1] = Poly{12 * B - 12 * A, 24 * A * B + 12 * A + 12 * B};
  return f;
}

/// sum_i c_i(x) f^(i) for a form given by its coefficients.
template <FunctionAlgebra F>
F apply_form(const ExpressionForm& form, const F& f) {
  F out = Rational(0) * f;
  F d = f;
  for (std::size_t i = 1; i < form.coeff.size(); ++i) {
    d = derive(d);
    if (!form.coeff[i].is_zero()) out = out + form.coeff[i] * d;
  }
  return out;
}

/// The Krall expression in expanded form.
template <FunctionAlgebra F>
F apply_krall(const F& f, const KrallParams& p) {
  return apply_form(expanded_form(p), f);
}

/// Which polynomial to use in the third (first-order) term of the Lagrangian form.
enum class PiVariant {
  Concomitant,  // pi as it appears with the bilinear concomitant
  Stated,    // x^2 coefficient (6A - 6B - 12AB), as stated with the symmetric form
};

inline Poly lagrangian_pi(const KrallParams& p, PiVariant v) {
  if (v == PiVariant::Concomitant) return p.pi_poly();
  const Rational& A = p.A();
  const Rational& B = p.B();
  return Poly{12 * A * B + 18 * A + 18 * B + 24, 12 * A - 12 * B, 6 * A - 6 * B - 12 * A * B};
}

/// (1 - x^2)^3
inline Poly q_weight() { return Poly::one_minus_x2().pow(3); }

/// (1 - x^2)(12 + alpha (1 - x^2))
inline Poly p_weight(const KrallParams& p) {
  return Poly::one_minus_x2() * (Poly::constant(12) + p.alpha() * Poly::one_minus_x2());
}

/// -((1-x^2)^3 y''')''' + ((1-x^2)(12+alpha(1-x^2)) y'')'' - (pi y')'
template <FunctionAlgebra F>
F apply_krall_symmetric(const F& f, const KrallParams& p, PiVariant v = PiVariant::Concomitant) {
  const F d1 = derive(f);
  const F d2 = derive(d1);
  const F d3 = derive(d2);
  F first = q_weight() * d3;
  for (int i = 0; i < 3; ++i) first = derive(first);
  F second = p_weight(p) * d2;
  for (int i = 0; i < 2; ++i) second = derive(second);
  F third = derive(F(lagrangian_pi(p, v) * d1));
  return second - first - third;
}

inline int binomial(int n, int k) {
  int out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

/// Expanded coefficients of the Lagrangian form by the Leibniz rule.
inline ExpressionForm expand_symmetric(const KrallParams& p, PiVariant v) {
  ExpressionForm f;
  const Poly q = q_weight();
  const Poly w = p_weight(p);
  const Poly pi = lagrangian_pi(p, v);
  for (int k = 0; k <= 3; ++k) f.coeff[static_cast<std::size_t>(6 - k)] -= binomial(3, k) * derive(q, k);
  for (int k = 0; k <= 2; ++k) f.coeff[static_cast<std::size_t>(4 - k)] += binomial(2, k) * derive(w, k);
  f.coeff[2] -= pi;
  f.coeff[1] -= derive(pi);
  return f;
}

struct ConsistencyReport {
  ExpressionForm expanded;             // the expanded sixth-order form
  ExpressionForm symmetric_corrected;  // Lagrangian form with the concomitant's pi
  ExpressionForm symmetric_stated;    // Lagrangian form with the stated pi
  std::array<bool, 7> corrected_matches{};
  std::array<bool, 7> stated_matches{};

  bool corrected_ok() const {
    for (std::size_t i = 1; i < 7; ++i)
      if (!corrected_matches[i]) return false;
    return true;
  }
  bool stated_ok() const {
    for (std::size_t i = 1; i < 7; ++i)
      if (!stated_matches[i]) return false;
    return true;
  }
};

inline ConsistencyReport consistency_check(const KrallParams& p) {
  ConsistencyReport r;
  r.expanded = expanded_form(p);
  r.symmetric_corrected = expand_symmetric(p, PiVariant::Concomitant);
  r.symmetric_stated = expand_symmetric(p, PiVariant::Stated);
  for (std::size_t i = 0; i < 7; ++i) {
    r.corrected_matches[i] = r.expanded.coeff[i] == r.symmetric_corrected.coeff[i];
    r.stated_matches[i] = r.expanded.coeff[i] == r.symmetric_stated.coeff[i];
  }
  return r;
}

/// n(n+1)(n^4 + 2n^3 + (3A+3B-1)n^2 + (3A+3B-2)n + 12AB)
inline Rational krall_eigenvalue(long n, const KrallParams& p) {
  const Rational s = 3 * p.A() + 3 * p.B();
  const Rational nn = n;
  return nn * (nn + 1) * (nn * nn * nn * nn + 2 * nn * nn * nn + (s - 1) * nn * nn + (s - 2) * nn + 12 * p.A() * p.B());
}

/// The eigenvalue formula with the leading factor n(n-1) as stated.
inline Rational stated_eigenvalue(long n, const KrallParams& p) {
  const Rational s = 3 * p.A() + 3 * p.B();
  const Rational nn = n;
  return nn * (nn - 1) * (nn * nn * nn * nn + 2 * nn * nn * nn + (s - 1) * nn * nn + (s - 2) * nn + 12 * p.A() * p.B());
}

/// Coefficient of x^n in l_K[x^n], read off the expanded coefficients.
inline Rational leading_operator_coefficient(long n, const KrallParams& p) {
  const ExpressionForm form = expanded_form(p);
  Rational out = 0;
  for (int i = 1; i <= 6; ++i) out += falling_factorial(n, i) * form.coeff[static_cast<std::size_t>(i)].coeff(i);
  return out;
}

/// M[k][j] = coefficient of x^k in l_K[x^j], for 0 <= j, k <= n. Upper triangular.
inline std::vector<std::vector<Rational>> monomial_matrix(int n, const KrallParams& p) {
  const ExpressionForm form = expanded_form(p);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n) + 1, std::vector<Rational>(static_cast<std::size_t>(n) + 1));
  for (int j = 0; j <= n; ++j) {
    const Poly image = apply_form(form, Poly::monomial(1, j));
    for (int k = 0; k <= n; ++k) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = image.coeff(k);
  }
  return m;
}

class DegenerateEigenvalue : public std::runtime_error {
 public:
  DegenerateEigenvalue(long n, long m)
      : std::runtime_error("eigenvalue of degree " + std::to_string(n) + " collides with degree " + std::to_string(m)),
        n_(n),
        m_(m) {}
  long degree() const { return n_; }
  long colliding_degree() const { return m_; }

 private:
  long n_;
  long m_;
};

/// Monic degree-n solution of (l_K - lambda_n) p = 0 by back substitution in
/// the monomial basis, where l_K is upper triangular.
inline Poly krall_polynomial(int n, const KrallParams& p) {
  const auto m = monomial_matrix(n, p);
  const Rational lambda = m[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  for (int k = n - 1; k >= 0; --k) {
    const auto ku = static_cast<std::size_t>(k);
    const Rational gap = lambda - m[ku][ku];
    if (sgn(gap) == 0) throw DegenerateEigenvalue(n, k);
    Rational acc = 0;
    for (int j = k + 1; j <= n; ++j) acc += m[ku][static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(j)];
    c[ku] = acc / gap;
  }
  return Poly(std::move(c));
}

/// K_0 .. K_n from the kernel solver.
inline std::vector<Poly> krall_polynomials(int n, const KrallParams& p) {
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(krall_polynomial(k, p));
  return out;
}

/// Readings of the unbalanced parenthesis in the stated Q(n, j).
enum class ParseVariant {
  CloseAtEnd,     // (2+(-1)^j)/2 * ( n^4 + ... + 2j(n^2+n+A+B) + (1-(-1)^j)/2 (4B-4A) )
  CloseBefore2j,  // (2+(-1)^j)/2 * ( n^4 + (2A+2B-1)n^2 + 4AB ) + 2j(...) + (1-(-1)^j)/2 (4B-4A)
  CloseAfter2j,   // (2+(-1)^j)/2 * ( n^4 + ... + 2j(n^2+n+A+B) ) + (1-(-1)^j)/2 (4B-4A)
};

inline constexpr std::array<ParseVariant, 3> kParseVariants{ParseVariant::CloseAtEnd, ParseVariant::CloseBefore2j,
                                                            ParseVariant::CloseAfter2j};

inline std::string to_string(ParseVariant v) {
  switch (v) {
    case ParseVariant::CloseAtEnd: return "close-at-end";
    case ParseVariant::CloseBefore2j: return "close-before-2j";
    case ParseVariant::CloseAfter2j: return "close-after-2j";
  }
  return "?";
}

inline Rational closed_form_q(long n, long j, const KrallParams& p, ParseVariant v) {
  const Rational& A = p.A();
  const Rational& B = p.B();
  const Rational even = j % 2 == 0 ? frac(3, 2) : frac(1, 2);
  const Rational odd = j % 2 == 0 ? 0 : 1;
  const Rational nn = n;
  const Rational base = nn * nn * nn * nn + (2 * A + 2 * B - 1) * nn * nn + 4 * A * B;
  const Rational lin = 2 * j * (nn * nn + nn + A + B);
  const Rational tail = odd * (4 * B - 4 * A);
  switch (v) {
    case ParseVariant::CloseAtEnd: return even * (base + lin + tail);
    case ParseVariant::CloseBefore2j: return even * base + lin + tail;
    case ParseVariant::CloseAfter2j: return even * (base + lin) + tail;
  }
  return 0;
}

/// Literal evaluation of the stated closed-form sum for K_n under one reading of Q(n, j).
inline Poly krall_polynomial_closed_form(int n, const KrallParams& p, ParseVariant v) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const Rational nn = n;
  for (int j = 0; j <= n; ++j) {
    const long half = j / 2;
    const Rational sign = half % 2 == 0 ? 1 : -1;
    Rational num = sign * Rational(factorial(2L * n - j)) * closed_form_q(n, j, p, v);
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
    Rational den = Rational(pow2 * factorial(n - (j + 1) / 2) * factorial(half) * factorial(n - j)) *
                   (nn * nn + nn + p.A() + p.B());
    c[static_cast<std::size_t>(n - j)] += num / den;
  }
  return Poly(std::move(c));
}

/// If a = c * b for a nonzero rational c, returns c.
inline std::optional<Rational> proportionality(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return std::nullopt;
  const Rational c = a.leading() / b.leading();
  if (a == b * c) return c;
  return std::nullopt;
}

/// (1-x^2)^2 y'''' + 8x(x^2-1) y''' + (4A+12)(x^2-1) y'' + 8A x y'
template <FunctionAlgebra F>
F apply_legendre_type(const F& f, const Rational& A) {
  ExpressionForm form;
  const Poly x2m1{-1, 0, 1};
  form.coeff[4] = Poly::one_minus_x2().pow(2);
  form.coeff[3] = Poly{0, 8} * x2m1;
  form.coeff[2] = (4 * A + 12) * x2m1;
  form.coeff[1] = Poly{0, 8 * A};
  return apply_form(form, f);
}

/// ((1-x^2)^2 y'')'' - ((8 + 4A(1-x^2)) y')'
template <FunctionAlgebra F>
F apply_legendre_type_symmetric(const F& f, const Rational& A) {
  F first = Poly::one_minus_x2().pow(2) * derive(derive(f));
  first = derive(derive(first));
  F second = derive(F((Poly::constant(8) + 4 * A * Poly::one_minus_x2()) * derive(f)));
  return first - second;
}

struct LegendreType {
  Poly poly;
  Rational eigenvalue;
};

/// P_{n,A} from its closed-form sum, and mu_n = n(n+1)(n^2+n+4A-2).
inline LegendreType legendre_type(int n, const Rational& A) {
  if (sgn(A) <= 0) throw std::invalid_argument("A must be positive");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
  for (int j = 0; j <= n / 2; ++j) {
    const Rational sign = j % 2 == 0 ? 1 : -1;
    const Rational num = sign * Rational(factorial(2L * n - 2L * j)) * (A + frac(static_cast<long>(n) * (n - 1), 2) + 2 * j);
    const Rational den(pow2 * factorial(j) * factorial(n - j) * factorial(n - 2L * j));
    c[static_cast<std::size_t>(n - 2 * j)] = num / den;
  }
  const Rational nn = n;
  return {Poly(std::move(c)), nn * (nn + 1) * (nn * nn + nn + 4 * A - 2)};
}

}  // namespace krall

#endif  // KRALL_KRALL_OPERATOR_HPP
