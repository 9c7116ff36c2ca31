#ifndef KRALL_RATIONAL_FN_HPP
#define KRALL_RATIONAL_FN_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "krall/poly.hpp"

namespace krall {

/// Quotient of polynomials in normal form: gcd(num, den) = 1 and den monic.
class RationalFn {
 public:
  RationalFn() : den_(Poly::constant(1)) {}
  RationalFn(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}  // NOLINT(implicit)
  RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// ord_{x=point}: root order of the numerator minus that of the denominator.
  int valuation(const Rational& point) const { return num_.root_order(point) - den_.root_order(point); }

  Rational operator()(const Rational& x) const {
    Rational d = den_(x);
    if (sgn(d) == 0) throw std::domain_error("rational function has a pole at " + to_string(x));
    return num_(x) / d;
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a) { return RationalFn(-a.num_, a.den_, Normalized{}); }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RationalFn(a.num_ * b.num_);
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator*(const Rational& s, const RationalFn& a) {
    return RationalFn(a.num_ * s, a.den_, Normalized{});
  }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Normalized {};
  RationalFn(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Poly::constant(1);
  }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    if (den_.degree() > 0) {
      Poly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    }
    Rational lead = den_.leading();
    if (lead != 1) {
      Rational inv = Rational(1) / lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly num_;
  Poly den_;
};

inline RationalFn derive(const RationalFn& f) {
  if (f.is_polynomial()) return RationalFn(derive(f.num()));
  return RationalFn(derive(f.num()) * f.den() - f.num() * derive(f.den()), f.den() * f.den());
}

inline std::string to_string(const RationalFn& f) {
  if (f.is_polynomial()) return "[" + to_string(f.num()) + "]";
  return "[" + to_string(f.num()) + "]/[" + to_string(f.den()) + "]";
}

}  // namespace krall

#endif  // KRALL_RATIONAL_FN_HPP
