#ifndef KRALL_CONCOMITANT_HPP
#define KRALL_CONCOMITANT_HPP

#include <array>
#include <string>
#include <vector>

#include "krall/kappa_space.hpp"
#include "krall/test_functions.hpp"

namespace krall {

/// -((1-x^2)^3 f''')' + (1-x^2)(12 + alpha(1-x^2)) f''
template <FunctionAlgebra F>
F capital_lambda(const F& f, const KrallParams& p) {
  return p_weight(p) * derive(f, 2) - derive(F(q_weight() * derive(f, 3)));
}

/// -((1-x^2)^3 f''')'' + ((1-x^2)(12 + alpha(1-x^2)) f'')' - pi f'
template <FunctionAlgebra F>
F concomitant_one_expr(const F& f, const KrallParams& p) {
  return derive(capital_lambda(f, p)) - p.pi_poly() * derive(f);
}

/// The five lines of the concomitant as germs at one endpoint.
inline std::array<LogGerm, 5> concomitant_lines(const LogGerm& f, const LogGerm& g, const KrallParams& p) {
  const LogGerm df = derive(f);
  const LogGerm dg = derive(g);
  const LogGerm lf = capital_lambda(f, p);
  const LogGerm lg = capital_lambda(g, p);
  const LogGerm d2f = derive(df);
  const LogGerm d2g = derive(dg);
  return {
      concomitant_one_expr(f, p) * g,
      Rational(-1) * (concomitant_one_expr(g, p) * f),
      Rational(-1) * (lf * dg),
      lg * df,
      Rational(-1) * (q_weight() * (derive(d2f) * d2g - d2f * derive(d2g))),
  };
}

/// [f,g]_K as a germ at the endpoint.
inline LogGerm concomitant_germ(const EndpointFn& f, const EndpointFn& g, Endpoint e, const KrallParams& p) {
  const auto lines = concomitant_lines(f.germ(e), g.germ(e), p);
  LogGerm out(e);
  for (const auto& l : lines) out += l;
  return out;
}

/// lim [f,g]_K at the endpoint; on divergence the witness names the first diverging line.
inline LimitResult concomitant(const EndpointFn& f, const EndpointFn& g, Endpoint e, const KrallParams& p) {
  const auto lines = concomitant_lines(f.germ(e), g.germ(e), p);
  LogGerm total(e);
  for (const auto& l : lines) total += l;
  LimitResult r = germ_limit(total, "[f,g]_K");
  if (r) return r;
  DivergentLimit why = r.error();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!germ_limit(lines[i])) {
      why.context = "[f,g]_K line " + std::to_string(i + 1);
      break;
    }
  }
  return why;
}

/// [f,g]_K(1) - [f,g]_K(-1)
inline LimitResult symplectic_H(const EndpointFn& f, const EndpointFn& g, const KrallParams& p) {
  return capture([&]() -> Rational {
    return *concomitant(f, g, Endpoint::Plus, p) - *concomitant(f, g, Endpoint::Minus, p);
  });
}

/// lim [f,1]_K through its closed first-order form, independently of the five-line form.
inline LimitResult concomitant_with_one(const EndpointFn& f, Endpoint e, const KrallParams& p) {
  return germ_limit(concomitant_one_expr(f.germ(e), p), "[f,1]_K");
}

/// lim Lambda[f] at the endpoint.
inline LimitResult lambda_at(const EndpointFn& f, Endpoint e, const KrallParams& p) {
  return germ_limit(capital_lambda(f.germ(e), p), "Lambda[f]");
}

/// lim f^(k) at the endpoint.
inline LimitResult derivative_at(const EndpointFn& f, int k, Endpoint e) {
  return germ_limit(derive(f.germ(e), k), "f^(" + std::to_string(k) + ")");
}

struct GreensReport {
  Rational lhs;  // int l_K[f] g - int f l_K[g]
  Rational rhs;  // [f,g]_K(1) - [f,g]_K(-1)
  bool holds() const { return lhs == rhs; }
};

inline GreensReport greens_formula_check(const Poly& f, const Poly& g, const KrallParams& p) {
  GreensReport r;
  r.lhs = integrate_unit_interval(apply_krall(f, p) * g) - integrate_unit_interval(f * apply_krall(g, p));
  r.rhs = symplectic_H(f, g, p).value();
  return r;
}

/// Closed form for lim [f,1]_K on functions with endpoint values of f', f''.
inline LimitResult concomitant_with_one_closed(const EndpointFn& f, Endpoint e, const KrallParams& p) {
  return capture([&]() -> Rational {
    const Rational d1 = *derivative_at(f, 1, e);
    const Rational d2 = *derivative_at(f, 2, e);
    if (e == Endpoint::Plus) return -24 * d2 - 24 * (p.A() + 1) * d1;
    return 24 * d2 - 24 * (p.B() + 1) * d1;
  });
}

/// Closed form for lim [f,g]_K when f and g are smooth up to the endpoint.
inline LimitResult concomitant_closed(const EndpointFn& f, const EndpointFn& g, Endpoint e, const KrallParams& p) {
  return capture([&]() -> Rational {
    const Rational f0 = *f.at(e), g0 = *g.at(e);
    const Rational f1 = *derivative_at(f, 1, e), g1 = *derivative_at(g, 1, e);
    const Rational f2 = *derivative_at(f, 2, e), g2 = *derivative_at(g, 2, e);
    const Rational second = f2 * g0 - g2 * f0;
    const Rational first = f1 * g0 - g1 * f0;
    if (e == Endpoint::Plus) return -24 * second - 24 * (p.A() + 1) * first;
    return 24 * second - 24 * (p.B() + 1) * first;
  });
}

/// Right-hand side of the endpoint reduction
/// [f,1](e) g(e) - [g,1](e) f(e) + lim(-Lambda[f] g' + Lambda[g] f' - (1-x^2)^3 (f''' g'' - f'' g''')).
inline LimitResult concomitant_reduction(const EndpointFn& f, const EndpointFn& g, Endpoint e, const KrallParams& p) {
  return capture([&]() -> Rational {
    const LogGerm fg = f.germ(e), gg = g.germ(e);
    const LogGerm d2f = derive(fg, 2), d2g = derive(gg, 2);
    const LogGerm rest = capital_lambda(gg, p) * derive(fg) - capital_lambda(fg, p) * derive(gg) -
                         q_weight() * (derive(d2f) * d2g - d2f * derive(d2g));
    return *concomitant_with_one(f, e, p) * *g.at(e) - *concomitant_with_one(g, e, p) * *f.at(e) +
           *germ_limit(rest, "reduction remainder");
  });
}

/// Right-hand side of the h-probe identity at e, or DivergentLimit when a
/// sub-limit of the identity does not exist for this f.
inline LimitResult h_probe_rhs(const EndpointFn& f, Endpoint e, const KrallParams& p) {
  const TestFunctions tf(p);
  const LogGerm h = (e == Endpoint::Plus ? tf.h_plus() : tf.h_minus()).germ(e);
  const LogGerm fg = f.germ(e);
  return capture([&]() -> Rational {
    const Rational c = e == Endpoint::Plus ? Rational(32 * p.A() + 12 * p.B() - 16) : Rational(16 - 32 * p.B() - 12 * p.A());
    const LogGerm d2f = derive(fg, 2), d2h = derive(h, 2);
    const LogGerm rest = Rational(-1) * (capital_lambda(fg, p) * derive(h)) + Rational(32) * derive(fg) -
                         q_weight() * (derive(d2f) * d2h - derive(d2h) * d2f);
    return c * *f.at(e) + *germ_limit(rest, "h-probe remainder");
  });
}

struct DeltaWitness {
  bool member = false;
  Rational lambda_plus, lambda_minus;  // Lambda[f](+1), Lambda[f](-1)
  Rational psi_plus, psi_minus;        // [f,psi+]_K(1), [f,psi-]_K(-1)
  bool routes_agree() const { return lambda_plus == psi_plus && lambda_minus == psi_minus; }
};

/// f is in delta_K iff Lambda[f] vanishes at both endpoints.
inline Expected<DeltaWitness> delta_membership(const EndpointFn& f, const KrallParams& p) {
  const TestFunctions tf(p);
  return capture([&] {
    DeltaWitness w;
    w.lambda_plus = *lambda_at(f, Endpoint::Plus, p);
    w.lambda_minus = *lambda_at(f, Endpoint::Minus, p);
    w.psi_plus = *concomitant(f, tf.psi_plus(), Endpoint::Plus, p);
    w.psi_minus = *concomitant(f, tf.psi_minus(), Endpoint::Minus, p);
    w.member = sgn(w.lambda_plus) == 0 && sgn(w.lambda_minus) == 0;
    return w;
  });
}

/// Domain of the auxiliary operator: delta_K plus [f,1+](1) = [f,1-](-1) = 0.
inline Expected<bool> s_domain_membership(const EndpointFn& f, const KrallParams& p) {
  const TestFunctions tf(p);
  return capture([&] {
    const DeltaWitness w = *delta_membership(f, p);
    return w.member && sgn(*concomitant(f, tf.one_plus(), Endpoint::Plus, p)) == 0 &&
           sgn(*concomitant(f, tf.one_minus(), Endpoint::Minus, p)) == 0;
  });
}

}  // namespace krall

#endif  // KRALL_CONCOMITANT_HPP
