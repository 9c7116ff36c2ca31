#ifndef KRALL_POLY_HPP
#define KRALL_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krall/rational.hpp"

namespace krall {

/// Dense univariate polynomial with exact rational coefficients, stored low
/// to high. Trailing zeros are always stripped, so the zero polynomial has an
/// empty coefficient vector and degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Rational& v) { return Poly(std::vector<Rational>{v}); }
  static Poly x() { return Poly{0, 1}; }
  static Poly monomial(const Rational& v, int power) {
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
    c.back() = v;
    return Poly(std::move(c));
  }
  /// 1 - x^2
  static Poly one_minus_x2() { return Poly{1, 0, -1}; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return c_[static_cast<std::size_t>(k)];
  }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(int e) const {
    Poly out = constant(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// p(x + shift), via repeated synthetic division (Taylor shift).
  Poly shifted(const Rational& shift) const {
    std::vector<Rational> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += shift * a[j];
    return Poly(std::move(a));
  }

  /// Order of the root x = root (0 if p(root) != 0). Zero polynomial is not allowed.
  int root_order(const Rational& root) const {
    std::vector<Rational> a = c_;
    int order = 0;
    while (a.size() > 1) {
      // synthetic division by (x - root)
      std::vector<Rational> q(a.size() - 1);
      Rational carry = 0;
      for (std::size_t i = a.size(); i-- > 0;) {
        carry = carry * root + a[i];
        if (i > 0) q[i - 1] = carry;
      }
      if (sgn(carry) != 0) break;
      a = std::move(q);
      ++order;
    }
    return order;
  }

  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

 private:
  std::vector<Rational> c_;
};

inline Poly derive(const Poly& p, int order = 1) {
  if (order <= 0) return p;
  if (p.degree() < order) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree() - order + 1));
  for (int k = order; k <= p.degree(); ++k)
    out[static_cast<std::size_t>(k - order)] = p.coeff(k) * falling_factorial(k, order);
  return Poly(std::move(out));
}

/// Exact integral over [-1, 1]; odd monomials drop out.
inline Rational integrate_unit_interval(const Poly& p) {
  Rational out = 0;
  for (int k = 0; k <= p.degree(); k += 2) out += p.coeff(k) * frac(2, k + 1);
  return out;
}

/// Quotient and remainder of a / b; b must be nonzero.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] / lead;
    if (sgn(q) == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeff(j);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

/// Monic gcd (gcd(0, 0) = 0).
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

/// Comma-separated coefficients, low to high ("0" for the zero polynomial).
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k) out += ',';
    out += to_string(p.coeff(k));
  }
  return out;
}

inline Poly parse_poly(std::string_view text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    c.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                 : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(c));
}

/// Rational roots with multiplicity, found by the rational root theorem on the
/// integer-scaled polynomial. Intended for small-coefficient polynomials.
inline std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  Poly rest = p;
  while (sgn(rest.coeff(0)) == 0) {
    roots.emplace_back(0);
    rest = divmod(rest, Poly::x()).first;
  }
  if (rest.degree() <= 0) return roots;
  Integer lcm = 1;
  for (const auto& v : rest.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  auto divisors = [](Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    if (n > Integer("1000000000000")) throw std::domain_error("rational_roots: coefficient too large");
    for (Integer d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
      }
    }
    return out;
  };
  Integer a0 = Integer(rest.coeff(0) * lcm);
  Integer an = Integer(rest.leading() * lcm);
  std::vector<Rational> candidates;
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(an)) {
      Rational r(num, den);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    const int m = rest.root_order(r);
    for (int i = 0; i < m; ++i) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace krall

#endif  // KRALL_POLY_HPP
