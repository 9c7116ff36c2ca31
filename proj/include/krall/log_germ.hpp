#ifndef KRALL_LOG_GERM_HPP
#define KRALL_LOG_GERM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "krall/rational_fn.hpp"

namespace krall {

enum class Endpoint { Minus = -1, Plus = 1 };

inline Rational point(Endpoint e) { return e == Endpoint::Plus ? 1 : -1; }
inline int sign(Endpoint e) { return e == Endpoint::Plus ? 1 : -1; }
inline std::string to_string(Endpoint e) { return e == Endpoint::Plus ? "+1" : "-1"; }

/// Why an endpoint limit failed to exist: the first offending log level and
/// its valuation, plus the sub-expression being evaluated when known.
struct DivergentLimit {
  Endpoint endpoint = Endpoint::Plus;
  int log_power = 0;
  int valuation = 0;
  std::string context;

  std::string describe() const {
    std::string out = "divergent limit at x=" + to_string(endpoint) + ": log power " + std::to_string(log_power) +
                      " has valuation " + std::to_string(valuation);
    if (!context.empty()) out += " in " + context;
    return out;
  }
};

class DivergentLimitError : public std::runtime_error {
 public:
  explicit DivergentLimitError(DivergentLimit info) : std::runtime_error(info.describe()), info_(std::move(info)) {}
  const DivergentLimit& info() const { return info_; }

 private:
  DivergentLimit info_;
};

/// Either a value or a DivergentLimit.
template <class T>
class Expected {
 public:
  Expected(T value) : v_(std::move(value)) {}              // NOLINT(implicit)
  Expected(DivergentLimit why) : v_(std::move(why)) {}     // NOLINT(implicit)

  bool has_value() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return has_value(); }
  const T& value() const {
    if (!has_value()) throw DivergentLimitError(std::get<DivergentLimit>(v_));
    return std::get<T>(v_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const DivergentLimit& error() const { return std::get<DivergentLimit>(v_); }

 private:
  std::variant<T, DivergentLimit> v_;
};

using LimitResult = Expected<Rational>;

/// Runs f, turning a thrown DivergentLimitError into the error alternative.
template <class F>
auto capture(F&& f) -> Expected<decltype(f())> {
  try {
    return f();
  } catch (const DivergentLimitError& e) {
    return e.info();
  }
}

/// Germ of a function at x = ±1 of the form sum_k r_k(x) * L(x)^k with
/// L(x) = ln(1 - x^2) and r_k rational functions. Zero r_k are never stored.
class LogGerm {
 public:
  explicit LogGerm(Endpoint e = Endpoint::Plus) : e_(e) {}
  LogGerm(Endpoint e, std::map<int, RationalFn> terms) : e_(e), t_(std::move(terms)) { prune(); }

  static LogGerm from_poly(Endpoint e, const Poly& p) { return LogGerm(e, {{0, RationalFn(p)}}); }
  static LogGerm log(Endpoint e) { return LogGerm(e, {{1, RationalFn(Poly::constant(1))}}); }

  Endpoint endpoint() const { return e_; }
  const std::map<int, RationalFn>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int log_degree() const { return t_.empty() ? 0 : t_.rbegin()->first; }
  RationalFn term(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? RationalFn() : it->second;
  }

  LogGerm& operator+=(const LogGerm& o) {
    check_same(o);
    for (const auto& [k, r] : o.t_) {
      auto it = t_.find(k);
      if (it == t_.end())
        t_.emplace(k, r);
      else
        it->second = it->second + r;
    }
    prune();
    return *this;
  }
  friend LogGerm operator+(LogGerm a, const LogGerm& b) { return a += b; }
  friend LogGerm operator-(const LogGerm& a) { return Rational(-1) * a; }
  friend LogGerm operator-(LogGerm a, const LogGerm& b) { return a += -b; }

  friend LogGerm operator*(const LogGerm& a, const LogGerm& b) {
    a.check_same(b);
    LogGerm out(a.e_);
    for (const auto& [i, r] : a.t_)
      for (const auto& [j, s] : b.t_) out += LogGerm(a.e_, {{i + j, r * s}});
    return out;
  }
  friend LogGerm operator*(const Poly& p, const LogGerm& g) {
    LogGerm out(g.e_);
    if (p.is_zero()) return out;
    for (const auto& [k, r] : g.t_) out.t_.emplace(k, RationalFn(p) * r);
    out.prune();
    return out;
  }
  friend LogGerm operator*(const Rational& s, const LogGerm& g) {
    LogGerm out(g.e_);
    if (sgn(s) == 0) return out;
    for (const auto& [k, r] : g.t_) out.t_.emplace(k, s * r);
    return out;
  }
  friend bool operator==(const LogGerm& a, const LogGerm& b) { return a.e_ == b.e_ && a.t_ == b.t_; }

 private:
  void check_same(const LogGerm& o) const {
    if (o.e_ != e_) throw std::invalid_argument("germs at different endpoints");
  }
  void prune() {
    for (auto it = t_.begin(); it != t_.end();) it = it->second.is_zero() ? t_.erase(it) : std::next(it);
  }

  Endpoint e_;
  std::map<int, RationalFn> t_;
};

/// d/dx, using L' = -2x / (1 - x^2).
inline LogGerm derive(const LogGerm& g) {
  static const RationalFn dlog(Poly{0, -2}, Poly::one_minus_x2());
  std::map<int, RationalFn> out;
  auto add = [&](int k, const RationalFn& r) {
    auto it = out.find(k);
    if (it == out.end())
      out.emplace(k, r);
    else
      it->second = it->second + r;
  };
  for (const auto& [k, r] : g.terms()) {
    add(k, derive(r));
    if (k > 0) add(k - 1, Rational(k) * (r * dlog));
  }
  return LogGerm(g.endpoint(), std::move(out));
}

inline LogGerm derive(const LogGerm& g, int order) {
  LogGerm out = g;
  for (int i = 0; i < order; ++i) out = derive(out);
  return out;
}

/// Endpoint limit by valuation counting in u = 1 ∓ x: the limit exists iff
/// ord(r_0) >= 0 and ord(r_k) >= 1 for k >= 1; its value is r_0(endpoint).
inline LimitResult germ_limit(const LogGerm& g, std::string context = {}) {
  const Rational e = point(g.endpoint());
  for (const auto& [k, r] : g.terms()) {
    const int ord = r.valuation(e);
    if ((k == 0 && ord < 0) || (k > 0 && ord < 1))
      return DivergentLimit{g.endpoint(), k, ord, std::move(context)};
  }
  auto it = g.terms().find(0);
  if (it == g.terms().end()) return Rational(0);
  return it->second(e);
}

inline std::string to_string(const LogGerm& g) {
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& [k, r] : g.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(r);
    if (k == 1) out += "*L";
    if (k > 1) out += "*L^" + std::to_string(k);
  }
  return out;
}

}  // namespace krall

#endif  // KRALL_LOG_GERM_HPP
