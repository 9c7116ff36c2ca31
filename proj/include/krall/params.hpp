#ifndef KRALL_PARAMS_HPP
#define KRALL_PARAMS_HPP

#include <stdexcept>
#include <string>

#include "krall/poly.hpp"

namespace krall {

/// The positive jump parameters (A, B). Everything else is derived on demand.
class KrallParams {
 public:
  KrallParams(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (sgn(a_) <= 0) throw std::invalid_argument("A must be positive");
    if (sgn(b_) <= 0) throw std::invalid_argument("B must be positive");
  }

  const Rational& A() const { return a_; }
  const Rational& B() const { return b_; }

  /// 3A + 3B + 6
  Rational alpha() const { return 3 * a_ + 3 * b_ + 6; }

  /// (-6A-6B-12AB) x^2 + (12A-12B) x + (12AB+18A+18B+24)
  Poly pi_poly() const {
    return Poly{12 * a_ * b_ + 18 * a_ + 18 * b_ + 24, 12 * a_ - 12 * b_, -6 * a_ - 6 * b_ - 12 * a_ * b_};
  }

  std::string label() const { return "A=" + to_string(a_) + ", B=" + to_string(b_); }

  friend bool operator==(const KrallParams& x, const KrallParams& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  Rational a_;
  Rational b_;
};

}  // namespace krall

#endif  // KRALL_PARAMS_HPP
