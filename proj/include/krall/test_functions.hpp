#ifndef KRALL_TEST_FUNCTIONS_HPP
#define KRALL_TEST_FUNCTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krall/endpoint_fn.hpp"
#include "krall/params.hpp"

namespace krall {

namespace detail {

inline Poly w(int power) { return Poly::one_minus_x2().pow(power); }

/// Germ equal to p near e and zero near the other endpoint.
inline EndpointFn one_sided(Endpoint e, const LogGerm& g) {
  if (e == Endpoint::Plus) return EndpointFn::piecewise(LogGerm(Endpoint::Minus), g);
  return EndpointFn::piecewise(g, LogGerm(Endpoint::Plus));
}

inline EndpointFn one_sided(Endpoint e, const Poly& p) { return one_sided(e, LogGerm::from_poly(e, p)); }

}  // namespace detail

/// Functions used as probes, boundary data and GKN sets, each known only
/// near the endpoints unless it is a global polynomial.
class TestFunctions {
 public:
  explicit TestFunctions(KrallParams p) : p_(std::move(p)) {}

  const KrallParams& params() const { return p_; }

  /// 1/2 (1-x^2) + 1/8 (A+2)(1-x^2)^2 near 1, zero near -1.
  EndpointFn psi_plus() const {
    return detail::one_sided(Endpoint::Plus, detail::w(1) * frac(1, 2) + detail::w(2) * ((p_.A() + 2) / 8));
  }
  /// -1/2 (1-x^2) - 1/8 (B+2)(1-x^2)^2 near -1, zero near 1.
  EndpointFn psi_minus() const {
    return detail::one_sided(Endpoint::Minus, detail::w(1) * frac(-1, 2) - detail::w(2) * ((p_.B() + 2) / 8));
  }

  /// (1/8 (A+2)(1-x^2)^2 + 1/2 (1-x^2)) ln(1-x^2) near 1, zero near -1.
  EndpointFn h_plus() const { return detail::one_sided(Endpoint::Plus, h_germ(Endpoint::Plus, p_.A())); }
  EndpointFn h_minus() const { return detail::one_sided(Endpoint::Minus, h_germ(Endpoint::Minus, p_.B())); }

  EndpointFn one_plus() const { return detail::one_sided(Endpoint::Plus, Poly::constant(1)); }
  EndpointFn one_minus() const { return detail::one_sided(Endpoint::Minus, Poly::constant(1)); }

  /// sqrt(A) near -1; only representable when sqrt(A) is rational.
  std::optional<EndpointFn> t1() const {
    auto r = exact_sqrt(p_.A());
    if (!r) return std::nullopt;
    return detail::one_sided(Endpoint::Minus, Poly::constant(*r));
  }
  /// sqrt(B) near 1; only representable when sqrt(B) is rational.
  std::optional<EndpointFn> t2() const {
    auto r = exact_sqrt(p_.B());
    if (!r) return std::nullopt;
    return detail::one_sided(Endpoint::Plus, Poly::constant(*r));
  }

  EndpointFn y1() const { return detail::one_sided(Endpoint::Plus, detail::w(2)); }
  EndpointFn y2() const { return detail::one_sided(Endpoint::Minus, detail::w(2)); }
  EndpointFn y3() const { return detail::one_sided(Endpoint::Plus, detail::w(1)); }
  EndpointFn y4() const { return detail::one_sided(Endpoint::Minus, detail::w(1)); }
  std::vector<EndpointFn> y() const { return {y1(), y2(), y3(), y4()}; }

  EndpointFn f1() const { return one_minus(); }
  EndpointFn f2() const { return one_plus(); }

  /// Every canonical function with a display name, in a fixed order.
  std::vector<std::pair<std::string, EndpointFn>> all() const {
    std::vector<std::pair<std::string, EndpointFn>> out{
        {"psi+", psi_plus()},  {"psi-", psi_minus()}, {"h+", h_plus()},  {"h-", h_minus()},
        {"1+", one_plus()},    {"1-", one_minus()},   {"y1", y1()},      {"y2", y2()},
        {"y3", y3()},          {"y4", y4()},          {"f1", f1()},      {"f2", f2()},
        {"1", Poly::constant(1)}, {"(1-x^2)", detail::w(1)}, {"(1-x^2)^2", detail::w(2)}, {"(1-x^2)^3", detail::w(3)},
    };
    if (auto t = t1()) out.emplace_back("t1", *t);
    if (auto t = t2()) out.emplace_back("t2", *t);
    return out;
  }

 private:
  static LogGerm h_germ(Endpoint e, const Rational& jump) {
    const Poly r = detail::w(2) * ((jump + 2) / 8) + detail::w(1) * frac(1, 2);
    return LogGerm(e, {{1, RationalFn(r)}});
  }

  KrallParams p_;
};

}  // namespace krall

#endif  // KRALL_TEST_FUNCTIONS_HPP
