#ifndef KRALL_SUITES_HPP
#define KRALL_SUITES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "krall/frobenius.hpp"
#include "krall/gkn_em.hpp"
#include "krall/report.hpp"

namespace krall {

struct RunConfig {
  Rational A = 1;
  Rational B = 1;
  int nmax = 10;
  int series_order = 20;
  std::uint64_t seed = 20240601;
  bool serial = false;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"eigen", "polys", "gram",   "green",           "concomitant",
                                              "delta", "frobenius", "gkn", "operator-matrix", "errata"};
  return names;
}

/// Small random polynomials with coefficients p/q, |p| <= 9, 1 <= q <= 4, from a fixed seed.
class SeededPolys {
 public:
  explicit SeededPolys(std::uint64_t seed) : rng_(seed) {}

  Poly next(int max_degree) {
    const int deg = static_cast<int>(rng_() % static_cast<std::uint64_t>(max_degree + 1));
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = frac(static_cast<long>(rng_() % 19) - 9, static_cast<long>(rng_() % 4) + 1);
    if (sgn(c.back()) == 0) c.back() = 1;
    return Poly(std::move(c));
  }
  Rational scalar() { return frac(static_cast<long>(rng_() % 19) - 9, static_cast<long>(rng_() % 4) + 1); }

 private:
  std::mt19937_64 rng_;
};

namespace detail {

inline std::string pad(long n, int width = 2) {
  std::string s = std::to_string(n < 0 ? -n : n);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  return n < 0 ? "-" + s : s;
}

inline std::string show(const LimitResult& r) { return r ? to_string(*r) : "divergent"; }

/// Equality of two limits; a divergence on either side is inconclusive with
/// the given reason, never a pass.
inline Case limit_case(std::string name, std::string item, const LimitResult& lhs, const LimitResult& rhs,
                       const std::string& divergent_reason = "not in checkable class") {
  if (!lhs || !rhs) {
    Case c{std::move(name), std::move(item), show(lhs), show(rhs), Verdict::Inconclusive, divergent_reason};
    c.witness = divergent_reason + ": " + (lhs ? rhs.error().describe() : lhs.error().describe());
    return c;
  }
  return equality_case(std::move(name), std::move(item), *lhs, *rhs);
}

inline Report make_report(std::string suite, const KrallParams& p) {
  Report r;
  r.suite = std::move(suite);
  r.A = to_string(p.A());
  r.B = to_string(p.B());
  return r;
}

inline std::vector<std::pair<std::string, EndpointFn>> sample_functions(const KrallParams& p, std::uint64_t seed,
                                                                        int count) {
  auto out = TestFunctions(p).all();
  SeededPolys gen(seed);
  for (int i = 0; i < count; ++i) out.emplace_back("rand" + pad(i), gen.next(10));
  return out;
}

inline Rational endpoint_weight(Endpoint e, const KrallParams& p) { return e == Endpoint::Plus ? p.A() : p.B(); }

}  // namespace detail

inline Report eigen_suite(const RunConfig& cfg) {
  const KrallParams p(cfg.A, cfg.B);
  Report r = detail::make_report("eigen", p);
  for (int n = 0; n <= cfg.nmax; ++n) {
    const Poly K = krall_polynomial(n, p);
    const Poly residual = apply_krall(K, p) - K * krall_eigenvalue(n, p);
    r.cases.push_back(equality_case("identity n=" + detail::pad(n), "eigenpolynomial identity", to_string(residual), "0"));
  }
  for (int n = 0; n <= std::max(20, cfg.nmax); ++n)
    r.cases.push_back(equality_case("oracle n=" + detail::pad(n), "eigenvalue formula", krall_eigenvalue(n, p),
                                    leading_operator_coefficient(n, p)));
  for (int k = 0; k <= 12; ++k) {
    const Poly m = Poly::monomial(1, k);
    r.cases.push_back(equality_case("forms agree on x^" + detail::pad(k), "Lagrangian symmetric form",
                                    to_string(apply_krall_symmetric(m, p)), to_string(apply_krall(m, p))));
    const Poly image = apply_krall(m, p);
    const bool preserved = image.degree() <= k && ((image.degree() == k) == (sgn(krall_eigenvalue(k, p)) != 0));
    r.cases.push_back(bool_case("degree preserved x^" + detail::pad(k), "degree preservation", preserved,
                                std::to_string(image.degree()), std::to_string(k)));
  }
  const TestFunctions tf(p);
  for (const auto& [name, f] : {std::pair{"h+", tf.h_plus()}, std::pair{"h-", tf.h_minus()}})
    r.cases.push_back(equality_case(std::string("forms agree on ") + name, "Lagrangian symmetric form",
                                    to_string(apply_krall_symmetric(f, p)), to_string(apply_krall(f, p))));
  bool kernel_constants = true;
  for (int k = 1; k <= 12; ++k) kernel_constants = kernel_constants && sgn(krall_eigenvalue(k, p)) != 0;
  r.cases.push_back(bool_case("kernel on P_12 is the constants", "annihilation of constants",
                              kernel_constants && apply_krall(Poly::constant(1), p).is_zero(), "lambda_1..12 nonzero",
                              "true"));
  return r;
}

inline Report polys_suite(const RunConfig& cfg) {
  const KrallParams p(cfg.A, cfg.B);
  Report r = detail::make_report("polys", p);
  for (int n = 0; n <= cfg.nmax; ++n) {
    const Poly K = krall_polynomial(n, p);
    r.cases.push_back(bool_case("K n=" + detail::pad(n) + " monic of degree n", "polynomial solution of degree n",
                                K.degree() == n && K.leading() == 1, to_string(K), "degree " + std::to_string(n)));
  }
  std::vector<Poly> P;
  for (int n = 0; n <= cfg.nmax; ++n) {
    const LegendreType L = legendre_type(n, p.A());
    P.push_back(L.poly);
    r.cases.push_back(equality_case("Legendre-type n=" + detail::pad(n), "Legendre-type eigenpolynomial",
                                    to_string(apply_legendre_type(L.poly, p.A())), to_string(L.poly * L.eigenvalue)));
    r.cases.push_back(equality_case("Legendre-type symmetric n=" + detail::pad(n), "Legendre-type expression",
                                    to_string(apply_legendre_type_symmetric(L.poly, p.A())),
                                    to_string(apply_legendre_type(L.poly, p.A()))));
  }
  bool orth = true;
  std::string first;
  for (std::size_t m = 0; m < P.size(); ++m)
    for (std::size_t n = m + 1; n < P.size(); ++n)
      if (sgn(mu_inner(P[m], P[n], p.A())) != 0) {
        if (orth) first = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        orth = false;
      }
  r.cases.push_back(bool_case("Legendre-type orthogonality", "equal point-mass inner product", orth,
                              orth ? "0" : first, "0", orth ? std::nullopt : std::optional<std::string>(first)));
  return r;
}

inline Report gram_suite(const RunConfig& cfg) {
  const KrallParams p(cfg.A, cfg.B);
  Report r = detail::make_report("gram", p);
  const Matrix G = gram_matrix(cfg.nmax, p);
  std::optional<std::string> off;
  for (std::size_t i = 0; i < G.size() && !off; ++i)
    for (std::size_t j = 0; j < G.size(); ++j)
      if (i != j && sgn(G[i][j]) != 0) {
        off = "G[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + to_string(G[i][j]);
        break;
      }
  r.cases.push_back(bool_case("Gram matrix diagonal", "orthogonality of the Krall polynomials", !off,
                              off ? *off : "0", "0", off));
  bool positive = true;
  for (std::size_t i = 0; i < G.size(); ++i) positive = positive && sgn(G[i][i]) > 0;
  r.cases.push_back(bool_case("Gram diagonal positive", "orthogonality of the Krall polynomials", positive,
                              positive ? "all > 0" : "nonpositive entry", "all > 0"));
  SeededPolys gen(cfg.seed);
  for (int i = 0; i < 10; ++i) {
    const Poly f = gen.next(10), g = gen.next(10);
    r.cases.push_back(equality_case("embedding isometry " + detail::pad(i), "extended-space inner product",
                                    extended_inner(embed(f), embed(g), p), kappa_inner(f, g, p)));
  }
  for (const auto& [name, f] : {std::pair{"x^3", Poly{0, 0, 0, 1}}, std::pair{"x^4+x", Poly{0, 1, 0, 0, 1}}}) {
    const KrallExpansion e = fourier_krall_expansion(f, p);
    r.cases.push_back(equality_case(std::string("finite expansion ") + name, "expansion in Krall polynomials",
                                    to_string(e.reconstruction), to_string(f)));
  }
  r.cases.push_back({"completeness", "complete orthogonal set", "finite exactness only", "density in L^2_kappa",
                     Verdict::Inconclusive,
                     "analytic completeness rests on a classical density theorem and is out of scope"});
  r.matrix = G;
  return r;
}

inline Report green_suite(const RunConfig& cfg) {
  const KrallParams p(cfg.A, cfg.B);
  Report r = detail::make_report("green", p);
  auto add = [&](const std::string& name, const Poly& f, const Poly& g) {
    const GreensReport gr = greens_formula_check(f, g, p);
    r.cases.push_back(equality_case(name, "Green's formula", gr.lhs, gr.rhs));
  };
  add("x^2 vs x^3", Poly{0, 0, 1}, Poly{0, 0, 0, 1});
  SeededPolys gen(cfg.seed);
  for (int i = 0; i < 20; ++i) {
    const Poly f = gen.next(10), g = gen.next(10);
    add("random " + detail::pad(i), f, g);
  }
  return r;
}

inline Report concomitant_suite(const RunConfig& cfg) {
  const KrallParams p(cfg.A, cfg.B);
  Report r = detail::make_report("concomitant", p);
  const TestFunctions tf(p);
  const auto fns = detail::sample_functions(p, cfg.seed, 10);
  const EndpointFn w1 = Poly::one_minus_x2(), w2 = Poly::one_minus_x2().pow(2), w3 = Poly::one_minus_x2().pow(3);
  for (const auto& [name, f] : fns) {
    for (Endpoint e : {Endpoint::Plus, Endpoint::Minus}) {
      const std::string at = " at " + to_string(e) + " f=" + name;
      const int s = sign(e);
      for (int j = 1; j <= 3; ++j) {
        const LogGerm g = Poly::one_minus_x2().pow(j) * derive(f.germ(e), j);
        r.cases.push_back(detail::limit_case("(ii) j=" + std::to_string(j) + at, "maximal domain (ii)",
                                             germ_limit(g), Rational(0)));
      }
      const LimitResult iv_rhs = capture([&]() -> Rational {
        return s * (2 * *lambda_at(f, e, p) - 48 * (detail::endpoint_weight(e, p) + 2) * *f.at(e));
      });
      r.cases.push_back(detail::limit_case("(iv)" + at, "maximal domain (iv)", concomitant(f, w1, e, p), iv_rhs));
      const LimitResult v_rhs = capture([&]() -> Rational { return s * 192 * *f.at(e); });
      r.cases.push_back(detail::limit_case("(v)" + at, "maximal domain (v)", concomitant(f, w2, e, p), v_rhs));
      r.cases.push_back(detail::limit_case("(vi)" + at, "maximal domain (vi)",
                                           concomitant(f, e == Endpoint::Plus ? tf.h_plus() : tf.h_minus(), e, p),
                                           h_probe_rhs(f, e, p)));
      r.cases.push_back(
          detail::limit_case("(vii)" + at, "maximal domain (vii)", concomitant(f, w3, e, p), Rational(0)));
      r.cases.push_back(detail::limit_case("[f,1] two routes" + at, "concomitant with 1",
                                           concomitant(f, Poly::constant(1), e, p), concomitant_with_one(f, e, p)));
    }
  }
  for (const auto& [fname, f] : fns)
    for (const auto& [gname, g] : fns) {
      if (fname.starts_with("rand") && gname.starts_with("rand")) continue;
      for (Endpoint e : {Endpoint::Plus, Endpoint::Minus}) {
        const std::string at = " at " + to_string(e) + " f=" + fname + " g=" + gname;
        const LimitResult fg = concomitant(f, g, e, p);
        r.cases.push_back(detail::limit_case("(viii)" + at, "maximal domain (viii)", fg,
                                             concomitant_reduction(f, g, e, p)));
        const LimitResult gf = capture([&]() -> Rational { return -*concomitant(g, f, e, p); });
        r.cases.push_back(detail::limit_case("antisymmetry" + at, "antisymmetry of the concomitant", fg, gf));
      }
    }
  for (const auto& [name, f, e] : {std::tuple{"h+", tf.h_plus(), Endpoint::Plus},
                                   std::tuple{"h-", tf.h_minus(), Endpoint::Minus}}) {
    const LimitResult half = capture([&]() -> Rational {
      return sign(e) * *concomitant(f, w1, e, p) / 2;
    });
    r.cases.push_back(detail::limit_case(std::string("Lambda[") + name + "] at " + to_string(e),
                                         "Lambda at the endpoint", lambda_at(f, e, p), half));
  }
  SeededPolys gen(cfg.seed + 1);
  for (int i = 0; i < 10; ++i) {
    const Poly fp = gen.next(10), gp = gen.next(10);
    const EndpointFn f = fp, g = gp;
    for (Endpoint e : {Endpoint::Plus, Endpoint::Minus}) {
      const std::string at = " at " + to_string(e) + " rand" + detail::pad(i);
      const int s = sign(e);
      r.cases.push_back(detail::limit_case("(e) direct" + at, "delta_K (e)", concomitant(f, Poly::constant(1), e, p),
                                           concomitant_with_one_closed(f, e, p)));
      r.cases.push_back(detail::limit_case("(e) first-order" + at, "delta_K (e)", concomitant_with_one(f, e, p),
                                           concomitant_with_one_closed(f, e, p)));
      r.cases.push_back(detail::limit_case("(f)" + at, "delta_K (f)", concomitant(f, w1, e, p),
                                           Rational(-s * 48 * (detail::endpoint_weight(e, p) + 2) * fp(point(e)))));
      r.cases.push_back(
          detail::limit_case("(g)" + at, "delta_K (g)", concomitant(f, w2, e, p), Rational(s * 192 * fp(point(e)))));
      r.cases.push_back(
          detail::limit_case("(h)" + at, "delta_K (h)", concomitant(f, g, e, p), concomitant_closed(f, g, e, p)));
    }
  }
  return r;
}

inline Report delta_suite(const RunConfig& cfg) {
  const KrallParams p(cfg.A, cfg.B);
  Report r = detail::make_report("delta", p);
  const TestFunctions tf(p);
  auto membership = [&](const std::string& name, const EndpointFn& f, bool expected) {
    const auto w = delta_membership(f, p);
    if (!w) {
      r.cases.push_back({"delta " + name, "delta_K membership", "divergent", expected ? "member" : "non-member",
                         Verdict::Fail, w.error().describe()});
      return;
    }
    const std::string got = w->member ? "member" : "non-member";
    const std::string witness = "Lambda(-1)=" + to_string(w->lambda_minus) + " Lambda(1)=" + to_string(w->lambda_plus) +
                                " [f,psi-](-1)=" + to_string(w->psi_minus) + " [f,psi+](1)=" + to_string(w->psi_plus);
    r.cases.push_back(equality_case("delta " + name, "delta_K membership", got, expected ? "member" : "non-member",
                                    witness));
    r.cases.push_back(bool_case("psi routes " + name, "boundary conditions through psi", w->routes_agree(),
                                to_string(w->lambda_plus) + "," + to_string(w->lambda_minus),
                                to_string(w->psi_plus) + "," + to_string(w->psi_minus)));
  };
  for (int k = 0; k <= 12; ++k) membership("x^" + detail::pad(k), Poly::monomial(1, k), true);
  membership("(1-x^2)^2", Poly::one_minus_x2().pow(2), true);
  membership("h+", tf.h_plus(), false);
  membership("h-", tf.h_minus(), false);
  membership("psi+", tf.psi_plus(), true);
  membership("psi-", tf.psi_minus(), true);
  for (int n = 0; n <= cfg.nmax; ++n) membership("K n=" + detail::pad(n), krall_polynomial(n, p), true);
  auto s_dom = [&](const std::string& name, const EndpointFn& f, bool expected) {
    const auto m = s_domain_membership(f, p);
    r.cases.push_back(bool_case("S domain " + name, "auxiliary operator domain", m && *m == expected,
                                m ? (*m ? "member" : "non-member") : "divergent", expected ? "member" : "non-member"));
  };
  s_dom("(1-x^2)^3", Poly::one_minus_x2().pow(3), true);
  s_dom("x", Poly::x(), false);
  s_dom("1", Poly::constant(1), true);
  return r;
}

inline Report frobenius_suite(const RunConfig& cfg) {
  const KrallParams p(cfg.A, cfg.B);
  Report r = detail::make_report("frobenius", p);
  const int N = cfg.series_order;
  const Poly expected_rho = Poly{-3, 1} * Poly{-2, 1} * Poly{-1, 1}.pow(2) * Poly{0, 1} * Poly{1, 1};
  for (Endpoint e : {Endpoint::Plus, Endpoint::Minus}) {
    const std::string at = " at " + to_string(e);
    const IndicialData ind = indicial_polynomial(e, p);
    std::string roots;
    for (const auto& v : ind.roots) roots += (roots.empty() ? "" : ",") + to_string(v);
    r.cases.push_back(equality_case("indicial roots" + at, "indicial equation", roots, "3,2,1,1,0,-1"));
    r.cases.push_back(equality_case("indicial factorization" + at, "indicial equation", to_string(monic(ind.rho)),
                                    to_string(expected_rho)));
    const auto basis = frobenius_basis(e, N, p);
    static const std::array<int, 6> exps{3, 2, 1, 1, 0, -1};
    static const std::array<int, 6> logs{0, 1, 0, 1, 1, 1};
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& s = basis[i];
      const std::string nm = to_string(s.tag) + at;
      const int ro = residual_order(s, p);
      r.cases.push_back(bool_case("residual order " + nm, "Frobenius solutions", ro >= N - 6,
                                  ro == INT_MAX ? "none" : std::to_string(ro), ">= " + std::to_string(N - 6)));
      r.cases.push_back(equality_case("shape " + nm, "Frobenius solutions",
                                      std::to_string(leading_power(to_series(s))) + "/" + std::to_string(s.log_degree),
                                      std::to_string(exps[i]) + "/" + std::to_string(logs[i])));
    }
    const auto& phi1 = basis[2];
    const auto& hat = basis[3];
    bool linked = true;
    for (int m = 0; m <= N; ++m) linked = linked && hat.coeff(m, 1) == 3 * phi1.coeff(m, 0);
    r.cases.push_back(bool_case("phi-hat-1 log part is 3 phi-1" + at, "Frobenius solutions", linked,
                                "c(m,1) of phi-hat-1", "3 c(m,0) of phi-1"));
    auto offset = [](const FrobeniusSolution& s) {
      auto o = s.log_start();
      return o ? std::to_string(*o) : std::string("none");
    };
    r.cases.push_back(equality_case("phi-2 log part offset" + at, "solution offsets", offset(basis[1]), "1",
                                    "log series starts at t^3, the n=1 term of the reference series"));
    r.cases.push_back(equality_case("phi-minus-1 log part offset" + at, "solution offsets",
                                    offset(basis[5]), "1", "log series starts at t^0, the n=1 term of the reference series"));
    r.cases.push_back({"phi-0 log part" + at, "solution offsets", offset(basis[4]), "1 or none",
                       Verdict::Pass,
                       basis[4].has_log_terms() ? std::optional<std::string>("log part realized")
                                                : std::optional<std::string>("the constant 1 solves the equation, so "
                                                                             "the log part vanishes identically")});
    const L2Classification cls = l2_classification(e, p, N);
    for (const auto& [tag, ok] : cls.in_l2)
      r.cases.push_back(equality_case("L2 " + to_string(tag) + at, "limit-5 classification", ok ? "L2" : "not L2",
                                      tag == FrobeniusTag::PhiMinus1 ? "not L2" : "L2"));
    r.cases.push_back(equality_case("L2 count" + at, "limit-5 classification", std::to_string(cls.count), "5"));
    r.cases.push_back(bool_case("phi-hat-1'' not L2" + at, "smoothness is best possible", !derivative_l2(hat, 2),
                                derivative_l2(hat, 2) ? "L2" : "not L2", "not L2"));
    r.cases.push_back(bool_case("phi-3'' L2" + at, "smoothness is best possible", derivative_l2(basis[0], 2),
                                derivative_l2(basis[0], 2) ? "L2" : "not L2", "L2"));
    FrobeniusSolution corrupted = basis[0];
    corrupted.terms[{2, 0}] += 1;
    const int bad = residual_order(corrupted, p);
    r.cases.push_back(bool_case("corrupted phi-3 detected" + at, "residual verification", bad < N - 6,
                                std::to_string(bad), "< " + std::to_string(N - 6)));
  }
  r.cases.push_back(equality_case("deficiency index", "deficiency index", std::to_string(deficiency_index(p, N)), "4"));
  return r;
}

inline Report gkn_suite(const RunConfig& cfg) {
  const KrallParams p(cfg.A, cfg.B);
  Report r = detail::make_report("gkn", p);
  const TestFunctions tf(p);
  const auto ys = krall_gkn_set(p);
  const Rational& A = p.A();
  const Rational& B = p.B();
  const std::array<WVector, 4> omega_expected{WVector{0, -192 * B}, WVector{-192 * A, 0}, WVector{0, 48 * B * (A + 2)},
                                              WVector{48 * A * (B + 2), 0}};
  auto wtext = [](const WVector& w) { return "(" + to_string(w.a) + "," + to_string(w.b) + ")"; };
  for (std::size_t j = 0; j < 4; ++j) {
    const auto om = omega(ys[j].fn, p);
    const auto od = omega_direct(ys[j].fn, p);
    r.cases.push_back(equality_case("Omega y" + std::to_string(j + 1), "Omega on the GKN set",
                                    om ? wtext(*om) : "divergent", wtext(omega_expected[j])));
    r.cases.push_back(equality_case("Omega y" + std::to_string(j + 1) + " two routes", "Omega on the GKN set",
                                    om ? wtext(*om) : "divergent", od ? wtext(*od) : "divergent"));
  }
  const BracketGrid grid = gkn_symmetry_check(ys, p);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      r.cases.push_back(equality_case("[y" + std::to_string(i + 1) + ",y" + std::to_string(j + 1) + "]",
                                      "GKN symmetry", grid.values[i][j] ? to_string(*grid.values[i][j]) : "divergent",
                                      "0"));
  const std::vector<GknCandidate> probes{{tf.f1(), {}}, {tf.f2(), {}}, {tf.h_plus(), {}}, {tf.h_minus(), {}}};
  const auto cert = independence_certificate(ys, probes, p);
  if (cert) {
    const Rational lp = lambda_at(tf.h_plus(), Endpoint::Plus, p).value();
    const Rational lm = lambda_at(tf.h_minus(), Endpoint::Minus, p).value();
    const Matrix expected{{0, 192, 0, -48 * (B + 2)}, {192, 0, -48 * (A + 2), 0}, {0, 0, 2 * lp, 0}, {0, 0, 0, 2 * lm}};
    static const std::array<const char*, 4> pn{"f1", "f2", "h+", "h-"};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        r.cases.push_back(equality_case(std::string("probe ") + pn[i] + " vs y" + std::to_string(j + 1),
                                        "independence probes", cert->matrix[i][j], expected[i][j]));
    r.cases.push_back(bool_case("probe matrix nonsingular", "independence modulo the minimal domain",
                                cert->certified(), to_string(cert->det), "nonzero"));
  } else {
    r.cases.push_back({"probe matrix", "independence probes", "divergent", "finite", Verdict::Fail,
                       cert.error().describe()});
  }
  {
    const auto dup = independence_certificate({ys[0], ys[0]}, {probes[0], probes[1]}, p);
    r.cases.push_back(bool_case("duplicate candidate inconclusive", "independence modulo the minimal domain",
                                dup && !dup->certified(), dup ? to_string(dup->det) : "divergent", "0"));
  }
  {
    // t1 and t2 are sqrt(A) 1- and sqrt(B) 1+; nonzero scaling does not affect the certificate.
    const auto t1 = tf.t1(), t2 = tf.t2();
    const std::vector<GknCandidate> ts{{t1 ? *t1 : tf.one_minus(), {}}, {t2 ? *t2 : tf.one_plus(), {}}};
    const std::vector<GknCandidate> xp{{Poly::x() * tf.one_minus(), {}}, {Poly::x() * tf.one_plus(), {}}};
    const auto c = independence_certificate(ts, xp, p);
    r.cases.push_back(bool_case("partial GKN set independence", "partial GKN set", c && c->certified(),
                                c ? to_string(c->det) : "divergent", "nonzero",
                                t1 && t2 ? std::nullopt
                                         : std::optional<std::string>("sqrt(A) or sqrt(B) irrational; unit "
                                                                      "multiples used")));
    const BracketGrid tg = gkn_symmetry_check(ts, p);
    r.cases.push_back(bool_case("partial GKN set symmetry", "partial GKN set", tg.all_zero(), "brackets", "0"));
  }
  {
    SeededPolys gen(cfg.seed + 2);
    std::vector<std::pair<std::string, GknCandidate>> pool;
    for (std::size_t j = 0; j < 4; ++j) pool.push_back({"y" + std::to_string(j + 1), ys[j]});
    pool.push_back({"1-", {tf.one_minus(), {}}});
    pool.push_back({"1+", {tf.one_plus(), {}}});
    for (int i = 0; i < 6; ++i) {
      const Poly f = gen.next(8);
      pool.push_back({"rand" + detail::pad(i), {f, {f(-1), f(1)}}});
    }
    bool anti = true;
    for (const auto& [an, a] : pool)
      for (const auto& [bn, b] : pool) {
        const auto ab = symplectic_HW(a, b, p), ba = symplectic_HW(b, a, p);
        anti = anti && ab && ba && *ab == -*ba;
      }
    r.cases.push_back(bool_case("extended bracket antisymmetry", "extended symplectic form", anti, "[u,v]", "-[v,u]"));
  }
  const XiCoords xi1 = psi(1, 0), xi2 = psi(0, 1);
  r.cases.push_back(equality_case("xi orthonormal", "orthonormal basis of W",
                                  to_string(xi1.dot(xi1)) + "," + to_string(xi1.dot(xi2)) + "," + to_string(xi2.dot(xi2)),
                                  "1,0,1"));
  if (auto s = xi1.standard(p))
    r.cases.push_back(equality_case("xi1 norm in W", "inner product of W", w_inner(*s, *s, p), Rational(1)));
  {
    SeededPolys gen(cfg.seed + 3);
    for (int i = 0; i < 20; ++i) {
      const Poly f = gen.next(10);
      ExtendedVector u = embed(f);
      bool expect = true;
      std::string label = "embedded";
      switch (i % 4) {
        case 1: u.a += 1; expect = false; label = "shifted a"; break;
        case 2: u.b -= 1; expect = false; label = "shifted b"; break;
        case 3:
          u.f = f + tf.h_plus();
          u.a = f(-1);
          u.b = f(1);
          expect = false;
          label = "plus h+";
          break;
        default: break;
      }
      const auto w = domain_membership(u, p);
      const std::string nm = "domain " + detail::pad(i) + " " + label;
      if (!w) {
        r.cases.push_back({nm, "domain of the self-adjoint operator", "divergent", "finite", Verdict::Fail,
                           w.error().describe()});
        continue;
      }
      r.cases.push_back(bool_case(nm + " routes agree", "domain of the self-adjoint operator", w->routes_agree(),
                                  w->direct ? "member" : "non-member", w->reduced ? "member" : "non-member"));
      r.cases.push_back(equality_case(nm, "domain of the self-adjoint operator",
                                      w->member() ? "member" : "non-member", expect ? "member" : "non-member"));
      if (w->member()) {
        const THatImage im = apply_T_hat(u, p);
        r.cases.push_back(bool_case(nm + " two forms", "explicit form of the operator", im.forms_agree(),
                                    to_string(im.value.a) + "," + to_string(im.value.b),
                                    to_string(im.explicit_form.a) + "," + to_string(im.explicit_form.b)));
      }
    }
    for (const auto& [nm, f] : {std::pair{"psi+", tf.psi_plus()}, std::pair{"psi-", tf.psi_minus()}}) {
      const ExtendedVector u{f, f.at(Endpoint::Minus).value(), f.at(Endpoint::Plus).value()};
      const auto w = domain_membership(u, p);
      r.cases.push_back(bool_case(std::string("domain ") + nm, "domain of the self-adjoint operator",
                                  w && w->member() && w->routes_agree(), w && w->member() ? "member" : "non-member",
                                  "member"));
      if (w && w->member()) {
        const THatImage im = apply_T_hat(u, p);
        r.cases.push_back(bool_case(std::string("domain ") + nm + " two forms", "explicit form of the operator",
                                    im.forms_agree(), to_string(im.value.a) + "," + to_string(im.value.b),
                                    to_string(im.explicit_form.a) + "," + to_string(im.explicit_form.b)));
      }
    }
  }
  {
    SeededPolys gen(cfg.seed + 4);
    for (int i = 0; i < 20; ++i) {
      const ExtendedVector u = embed(gen.next(10)), v = embed(gen.next(10));
      const Rational lhs = extended_inner(apply_T_hat(u, p).value, v, p);
      const Rational rhs = extended_inner(u, apply_T_hat(v, p).value, p);
      r.cases.push_back(equality_case("operator symmetry " + detail::pad(i), "self-adjointness", lhs, rhs));
    }
  }
  for (int n = 0; n <= cfg.nmax; ++n) {
    const EigenReport e = eigen_verify(n, p);
    r.cases.push_back(bool_case("eigenvector n=" + detail::pad(n), "Krall polynomials as eigenvectors", e.holds(),
                                "(" + to_string(e.image.value.a) + "," + to_string(e.image.value.b) + ")",
                                "lambda=" + to_string(e.lambda)));
  }
  return r;
}

inline Report operator_matrix_suite(const RunConfig& cfg) {
  const KrallParams p(cfg.A, cfg.B);
  Report r = detail::make_report("operator-matrix", p);
  const Matrix M = operator_matrix(cfg.nmax, p);
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      r.cases.push_back(equality_case("M[" + detail::pad(static_cast<long>(i)) + "][" +
                                          detail::pad(static_cast<long>(j)) + "]",
                                      "discrete spectrum", M[i][j],
                                      i == j ? krall_eigenvalue(static_cast<long>(i), p) : Rational(0)));
  r.matrix = M;
  return r;
}

inline Report errata_suite(const RunConfig& cfg) {
  const KrallParams p(cfg.A, cfg.B);
  Report r = detail::make_report("errata", p);
  const ConsistencyReport cr = consistency_check(p);
  std::string mismatched;
  for (std::size_t i = 1; i < 7; ++i)
    if (!cr.stated_matches[i]) mismatched += (mismatched.empty() ? "" : ",") + std::string("y^(") + std::to_string(i) + ")";
  r.cases.push_back(bool_case("pi in the symmetric form: concomitant sign", "symmetric form vs expanded form",
                              cr.corrected_ok(), cr.corrected_ok() ? "all orders agree" : "mismatch",
                              "all orders agree"));
  r.cases.push_back(bool_case("pi in the symmetric form: stated sign", "symmetric form vs expanded form",
                              !cr.stated_ok(), mismatched.empty() ? "all orders agree" : "mismatch at " + mismatched,
                              "mismatch", "stated x^2 coefficient 6A-6B-12AB; the concomitant's -6A-6B-12AB "
                                          "reproduces the expanded form"));
  r.cases.push_back(equality_case("y'' coefficient x-term", "expanded form signs",
                                  to_string(cr.expanded.coeff[2].coeff(1)), to_string(12 * p.B() - 12 * p.A()),
                                  "expanded y'' carries (12B-12A)x, matching -pi''s x-coefficient sign convention"));
  r.cases.push_back(bool_case("stated eigenvalue factor n(n-1) at n=1", "eigenvalue formula",
                              stated_eigenvalue(1, p) != leading_operator_coefficient(1, p),
                              to_string(stated_eigenvalue(1, p)), to_string(leading_operator_coefficient(1, p)),
                              "stated factor gives 0 while l_K[x] has leading coefficient 24AB+12A+12B"));
  bool nn1 = true;
  for (int n = 0; n <= 20; ++n) nn1 = nn1 && krall_eigenvalue(n, p) == leading_operator_coefficient(n, p);
  r.cases.push_back(bool_case("eigenvalue factor n(n+1) for n<=20", "eigenvalue formula", nn1, "n(n+1)(...)",
                              "leading coefficient oracle"));
  r.cases.push_back(equality_case("closed-form constant at n=0", "closed-form Krall polynomials",
                                  to_string(krall_polynomial_closed_form(0, p, ParseVariant::CloseAtEnd)),
                                  to_string(Poly::constant(3 * p.A() * p.B() / (p.A() + p.B())))));
  for (int n = 0; n <= 8; ++n) {
    const Poly K = krall_polynomial(n, p);
    for (ParseVariant v : kParseVariants) {
      const Poly c = krall_polynomial_closed_form(n, p, v);
      const auto ratio = proportionality(c, K);
      Case cs{"closed form n=" + detail::pad(n) + " " + to_string(v), "closed-form Krall polynomials", to_string(c),
              to_string(K), ratio ? Verdict::Pass : Verdict::Inconclusive, std::nullopt};
      cs.witness = ratio ? "proportional with factor " + to_string(*ratio)
                         : std::string("not proportional to the kernel-solver polynomial");
      r.cases.push_back(std::move(cs));
    }
  }
  const TestFunctions tf(p);
  for (const auto& [name, f, e] : {std::tuple{"h+", tf.h_plus(), Endpoint::Plus},
                                   std::tuple{"h-", tf.h_minus(), Endpoint::Minus}}) {
    const LimitResult l = lambda_at(f, e, p);
    r.cases.push_back(bool_case(std::string("stated Lambda[") + name + "] = 24", "Lambda at the endpoint",
                                l && *l != 24, detail::show(l), "24",
                                "the five-line concomitant gives [h,1-x^2] = 2 Lambda[h], confirming the computed "
                                "value; the h-probe identity with its stated constant holds for this h"));
    const std::size_t yi = e == Endpoint::Plus ? 2 : 3;
    const LimitResult b = symplectic_H(f, krall_gkn_set(p)[yi].fn, p);
    r.cases.push_back(bool_case(std::string("stated [") + name + ",y" + std::to_string(yi + 1) + "]_H = 48",
                                "independence probes", b && *b != 48, detail::show(b), "48",
                                "equals 2 Lambda[h]; the probe matrix stays nonsingular"));
  }
  return r;
}

inline Report run_suite(const std::string& name, const RunConfig& cfg) {
  Report r;
  if (name == "eigen") r = eigen_suite(cfg);
  else if (name == "polys") r = polys_suite(cfg);
  else if (name == "gram") r = gram_suite(cfg);
  else if (name == "green") r = green_suite(cfg);
  else if (name == "concomitant") r = concomitant_suite(cfg);
  else if (name == "delta") r = delta_suite(cfg);
  else if (name == "frobenius") r = frobenius_suite(cfg);
  else if (name == "gkn") r = gkn_suite(cfg);
  else if (name == "operator-matrix") r = operator_matrix_suite(cfg);
  else if (name == "errata") r = errata_suite(cfg);
  else throw std::invalid_argument("unknown suite: " + name);
  r.sort_cases();
  return r;
}

/// Runs suites in parallel unless cfg.serial; results keep the requested order.
inline std::vector<Report> run_suites(const std::vector<std::string>& names, const RunConfig& cfg) {
  std::vector<Report> out;
  if (cfg.serial) {
    for (const auto& n : names) out.push_back(run_suite(n, cfg));
    return out;
  }
  std::vector<std::future<Report>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, run_suite, n, cfg));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace krall

#endif  // KRALL_SUITES_HPP
