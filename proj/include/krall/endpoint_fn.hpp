#ifndef KRALL_ENDPOINT_FN_HPP
#define KRALL_ENDPOINT_FN_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "krall/log_germ.hpp"

namespace krall {

/// Raised when an operation would need values of a piecewise function away
/// from its endpoint germs. The middle of such a function is never modelled.
class MiddleUnspecified : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A function on [-1, 1] known either globally as a polynomial or only
/// through its germs near -1 and +1.
class EndpointFn {
 public:
  struct Piecewise {
    LogGerm minus{Endpoint::Minus};
    LogGerm plus{Endpoint::Plus};
  };

  EndpointFn() : rep_(Poly{}) {}
  EndpointFn(Poly p) : rep_(std::move(p)) {}  // NOLINT(implicit)

  static EndpointFn piecewise(LogGerm minus, LogGerm plus) {
    if (minus.endpoint() != Endpoint::Minus || plus.endpoint() != Endpoint::Plus)
      throw std::invalid_argument("piecewise germs attached to the wrong endpoints");
    return EndpointFn(Piecewise{std::move(minus), std::move(plus)});
  }
  /// Given germs written as polynomials near each endpoint.
  static EndpointFn piecewise(const Poly& near_minus, const Poly& near_plus) {
    return piecewise(LogGerm::from_poly(Endpoint::Minus, near_minus), LogGerm::from_poly(Endpoint::Plus, near_plus));
  }

  bool is_global() const { return std::holds_alternative<Poly>(rep_); }

  const Poly& poly() const {
    if (!is_global()) throw MiddleUnspecified("piecewise function has no global polynomial form");
    return std::get<Poly>(rep_);
  }

  LogGerm germ(Endpoint e) const {
    if (const auto* p = std::get_if<Poly>(&rep_)) return LogGerm::from_poly(e, *p);
    const auto& pw = std::get<Piecewise>(rep_);
    return e == Endpoint::Plus ? pw.plus : pw.minus;
  }

  /// Value at an interior or endpoint x; interior values need a global form.
  Rational operator()(const Rational& x) const {
    if (is_global()) return std::get<Poly>(rep_)(x);
    if (x == 1) return germ_limit(germ(Endpoint::Plus)).value();
    if (x == -1) return germ_limit(germ(Endpoint::Minus)).value();
    throw MiddleUnspecified("value of a piecewise function at interior point " + to_string(x));
  }

  LimitResult at(Endpoint e) const { return germ_limit(germ(e)); }

  friend EndpointFn operator+(const EndpointFn& a, const EndpointFn& b) {
    if (a.is_global() && b.is_global()) return a.poly() + b.poly();
    return piecewise(a.germ(Endpoint::Minus) + b.germ(Endpoint::Minus), a.germ(Endpoint::Plus) + b.germ(Endpoint::Plus));
  }
  friend EndpointFn operator-(const EndpointFn& a) { return Rational(-1) * a; }
  friend EndpointFn operator-(const EndpointFn& a, const EndpointFn& b) { return a + (-b); }
  friend EndpointFn operator*(const Poly& p, const EndpointFn& f) {
    if (f.is_global()) return p * f.poly();
    return piecewise(p * f.germ(Endpoint::Minus), p * f.germ(Endpoint::Plus));
  }
  friend EndpointFn operator*(const Rational& s, const EndpointFn& f) { return Poly::constant(s) * f; }
  friend EndpointFn operator*(const EndpointFn& a, const EndpointFn& b) {
    if (a.is_global()) return a.poly() * b;
    if (b.is_global()) return b.poly() * a;
    return piecewise(a.germ(Endpoint::Minus) * b.germ(Endpoint::Minus), a.germ(Endpoint::Plus) * b.germ(Endpoint::Plus));
  }
  friend bool operator==(const EndpointFn& a, const EndpointFn& b) {
    if (a.is_global() && b.is_global()) return a.poly() == b.poly();
    return a.germ(Endpoint::Minus) == b.germ(Endpoint::Minus) && a.germ(Endpoint::Plus) == b.germ(Endpoint::Plus);
  }

 private:
  explicit EndpointFn(Piecewise pw) : rep_(std::move(pw)) {}

  std::variant<Poly, Piecewise> rep_;
};

inline EndpointFn derive(const EndpointFn& f, int order = 1) {
  if (f.is_global()) return derive(f.poly(), order);
  return EndpointFn::piecewise(derive(f.germ(Endpoint::Minus), order), derive(f.germ(Endpoint::Plus), order));
}

inline std::string to_string(const EndpointFn& f) {
  if (f.is_global()) return to_string(f.poly());
  return "{-1: " + to_string(f.germ(Endpoint::Minus)) + "; +1: " + to_string(f.germ(Endpoint::Plus)) + "}";
}

}  // namespace krall

#endif  // KRALL_ENDPOINT_FN_HPP
