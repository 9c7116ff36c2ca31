#ifndef KRALL_FROBENIUS_HPP
#define KRALL_FROBENIUS_HPP

#include <array>
#include <climits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "krall/krall_operator.hpp"

namespace krall {

/// The expanded expression rewritten in t = x - e about an endpoint e.
struct LocalODE {
  Endpoint endpoint;
  std::array<Poly, 7> coeff;  // coeff[i] multiplies d^i/dt^i

  LocalODE(Endpoint e, const KrallParams& p) : endpoint(e) {
    const ExpressionForm form = expanded_form(p);
    for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] = form.coeff[i].shifted(point(e));
  }

  /// G_e(s) with l_K[t^s] = sum_{e=0..3} G_e(s) t^{s-3+e}.
  Poly stencil(int e) const {
    Poly out;
    for (int i = 1; i <= 6; ++i) {
      Poly ff = Poly::constant(1);
      for (int k = 0; k < i; ++k) ff = ff * Poly{-k, 1};
      out += ff * coeff[static_cast<std::size_t>(i)].coeff(i + e - 3);
    }
    return out;
  }
};

struct IndicialData {
  Poly rho;                    // lowest-order stencil G_0
  std::vector<Rational> roots;  // with multiplicity, descending
};

inline IndicialData indicial_polynomial(Endpoint e, const KrallParams& p) {
  IndicialData d;
  d.rho = LocalODE(e, p).stencil(0);
  d.roots = rational_roots(d.rho);
  return d;
}

/// Which of the six reference solutions a series realizes.
enum class FrobeniusTag { Phi3, Phi2, Phi1, PhiHat1, Phi0, PhiMinus1 };

inline constexpr std::array<FrobeniusTag, 6> kFrobeniusTags{FrobeniusTag::Phi3, FrobeniusTag::Phi2,
                                                            FrobeniusTag::Phi1, FrobeniusTag::PhiHat1,
                                                            FrobeniusTag::Phi0, FrobeniusTag::PhiMinus1};

inline std::string to_string(FrobeniusTag t) {
  switch (t) {
    case FrobeniusTag::Phi3: return "phi-3";
    case FrobeniusTag::Phi2: return "phi-2";
    case FrobeniusTag::Phi1: return "phi-1";
    case FrobeniusTag::PhiHat1: return "phi-hat-1";
    case FrobeniusTag::Phi0: return "phi-0";
    case FrobeniusTag::PhiMinus1: return "phi-minus-1";
  }
  return "?";
}

inline std::optional<FrobeniusTag> parse_frobenius_tag(std::string_view s) {
  for (FrobeniusTag t : kFrobeniusTags)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

class ObstructionUnexpected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated sum of c_{m,k} t^{r+m} ln^k|t| with k in {0, 1}.
struct FrobeniusSolution {
  Endpoint endpoint = Endpoint::Plus;
  FrobeniusTag tag = FrobeniusTag::Phi3;
  int exponent = 0;    // indicial root r
  int log_degree = 0;  // log degree allowed by the ansatz
  int order = 0;       // truncation N: offsets m = 0..N
  std::map<std::pair<int, int>, Rational> terms;  // (m, k) -> coefficient, zeros omitted

  Rational coeff(int m, int k) const {
    auto it = terms.find({m, k});
    return it == terms.end() ? Rational(0) : it->second;
  }
  /// True when some log coefficient is nonzero.
  bool has_log_terms() const {
    for (const auto& [key, v] : terms)
      if (key.second > 0) return true;
    return false;
  }
  /// Smallest offset m carrying a log coefficient, if any.
  std::optional<int> log_start() const {
    for (const auto& [key, v] : terms)
      if (key.second == 1) return key.first;
    return std::nullopt;
  }
};

namespace detail {

/// Affine form: constant (key -1) plus a combination of free parameters.
using Affine = std::map<int, Rational>;

inline void axpy(Affine& y, const Affine& x, const Rational& s) {
  if (sgn(s) == 0) return;
  for (const auto& [k, v] : x) {
    Rational& slot = y[k];
    slot += s * v;
    if (sgn(slot) == 0) y.erase(k);
  }
}

inline Affine scaled(const Affine& x, const Rational& s) {
  Affine out;
  axpy(out, x, s);
  return out;
}

inline bool is_zero(const Affine& x) { return x.empty(); }

/// Solves sum_k a_k p_k + a_{-1} = 0 for every row; free parameters are pinned to 0.
inline std::optional<std::vector<Rational>> solve_affine(std::vector<Affine> rows, int nparams) {
  std::vector<Rational> value(static_cast<std::size_t>(nparams));
  std::vector<std::pair<int, Affine>> pivots;
  for (auto& row : rows) {
    for (const auto& [col, prow] : pivots) {
      auto it = row.find(col);
      if (it != row.end()) axpy(row, prow, -it->second);
    }
    int col = -1;
    for (const auto& [k, v] : row)
      if (k >= 0) {
        col = k;
        break;
      }
    if (col < 0) {
      if (!row.empty()) return std::nullopt;
      continue;
    }
    Affine normalized = scaled(row, Rational(1) / row.at(col));
    for (auto& [c, prow] : pivots) {
      auto it = prow.find(col);
      if (it != prow.end()) axpy(prow, normalized, -it->second);
    }
    pivots.emplace_back(col, std::move(normalized));
  }
  for (const auto& [col, prow] : pivots) {
    auto it = prow.find(-1);
    value[static_cast<std::size_t>(col)] = it == prow.end() ? Rational(0) : Rational(-it->second);
  }
  return value;
}

}  // namespace detail

struct FrobeniusAnsatz {
  int exponent;
  bool logs;
  std::vector<std::pair<std::pair<int, int>, Rational>> pins;  // absolute (power, k) -> value
};

/// Solves the recurrences from matching powers and log levels of l_K applied
/// to the ansatz, with leftover resonance freedom pinned to 0.
inline FrobeniusSolution build_frobenius(const LocalODE& ode, FrobeniusTag tag, const FrobeniusAnsatz& ansatz, int N) {
  std::array<Poly, 4> G, dG;
  for (int e = 0; e < 4; ++e) {
    G[static_cast<std::size_t>(e)] = ode.stencil(e);
    dG[static_cast<std::size_t>(e)] = derive(G[static_cast<std::size_t>(e)]);
  }
  const int r = ansatz.exponent;
  std::map<std::pair<int, int>, detail::Affine> c;
  std::vector<detail::Affine> cons;
  int nparams = 0;
  auto fresh = [&] { return detail::Affine{{nparams++, Rational(1)}}; };
  for (int p = r; p <= r + N; ++p) {
    detail::Affine rhs1, rhs0;
    for (int e = 1; e <= 3; ++e) {
      const int q = p - e;
      if (q < r) continue;
      const auto eu = static_cast<std::size_t>(e);
      detail::axpy(rhs1, c[{q, 1}], -G[eu](q));
      detail::axpy(rhs0, c[{q, 0}], -G[eu](q));
      detail::axpy(rhs0, c[{q, 1}], -dG[eu](q));
    }
    const Rational g0 = G[0](p);
    const Rational g0d = dG[0](p);
    if (sgn(g0) != 0) {
      detail::Affine c1 = detail::scaled(rhs1, Rational(1) / g0);
      if (!ansatz.logs && !detail::is_zero(c1)) {
        cons.push_back(c1);
        c1.clear();
      }
      detail::Affine r0 = rhs0;
      detail::axpy(r0, c1, -g0d);
      c[{p, 1}] = c1;
      c[{p, 0}] = detail::scaled(r0, Rational(1) / g0);
      continue;
    }
    if (!detail::is_zero(rhs1)) cons.push_back(rhs1);
    if (sgn(g0d) != 0 && ansatz.logs) {
      c[{p, 1}] = detail::scaled(rhs0, Rational(1) / g0d);
    } else {
      if (!detail::is_zero(rhs0)) cons.push_back(rhs0);
      c[{p, 1}] = ansatz.logs ? fresh() : detail::Affine{};
    }
    c[{p, 0}] = fresh();
  }
  for (const auto& [key, v] : ansatz.pins) {
    auto it = c.find(key);
    detail::Affine row = it == c.end() ? detail::Affine{} : it->second;
    detail::axpy(row, detail::Affine{{-1, Rational(1)}}, -v);
    cons.push_back(std::move(row));
  }
  auto values = detail::solve_affine(std::move(cons), nparams);
  if (!values)
    throw ObstructionUnexpected("no " + to_string(tag) + " series at x=" + to_string(ode.endpoint) +
                                " within log degree 1");
  FrobeniusSolution sol;
  sol.endpoint = ode.endpoint;
  sol.tag = tag;
  sol.exponent = r;
  sol.log_degree = ansatz.logs ? 1 : 0;
  sol.order = N;
  for (const auto& [key, form] : c) {
    Rational v = 0;
    for (const auto& [k, a] : form) v += k < 0 ? a : a * (*values)[static_cast<std::size_t>(k)];
    if (sgn(v) != 0) sol.terms.emplace(std::pair{key.first - r, key.second}, std::move(v));
  }
  return sol;
}

/// The six solutions at an endpoint in the order phi_3, phi_2, phi_1, phi-hat_1, phi_0, phi_{-1}.
inline std::vector<FrobeniusSolution> frobenius_basis(Endpoint e, int N, const KrallParams& p) {
  if (N < 12) throw std::invalid_argument("series order must be at least 12");
  const LocalODE ode(e, p);
  std::vector<FrobeniusSolution> out;
  out.push_back(build_frobenius(ode, FrobeniusTag::Phi3, {3, false, {{{3, 0}, 1}}}, N));
  out.push_back(build_frobenius(ode, FrobeniusTag::Phi2, {2, true, {{{2, 0}, 1}}}, N));
  const FrobeniusSolution phi1 = build_frobenius(ode, FrobeniusTag::Phi1, {1, false, {{{1, 0}, 1}}}, N);
  out.push_back(phi1);
  FrobeniusAnsatz hat{1, true, {{{1, 0}, 1}}};
  for (int m = 0; m <= N; ++m) hat.pins.push_back({{1 + m, 1}, 3 * phi1.coeff(m, 0)});
  out.push_back(build_frobenius(ode, FrobeniusTag::PhiHat1, hat, N));
  out.push_back(build_frobenius(ode, FrobeniusTag::Phi0, {0, true, {{{0, 0}, 1}}}, N));
  out.push_back(build_frobenius(ode, FrobeniusTag::PhiMinus1, {-1, true, {{{-1, 0}, 1}}}, N));
  return out;
}

/// Exponent-indexed series sum a_{p,k} t^p ln^k|t|.
using LogSeries = std::map<std::pair<int, int>, Rational>;

inline LogSeries to_series(const FrobeniusSolution& sol) {
  LogSeries s;
  for (const auto& [key, v] : sol.terms) s.emplace(std::pair{sol.exponent + key.first, key.second}, v);
  return s;
}

/// d/dt of t^p ln^k = p t^{p-1} ln^k + k t^{p-1} ln^{k-1}, termwise.
inline LogSeries derive(const LogSeries& s) {
  LogSeries out;
  auto add = [&](std::pair<int, int> key, const Rational& v) {
    if (sgn(v) == 0) return;
    Rational& slot = out[key];
    slot += v;
    if (sgn(slot) == 0) out.erase(key);
  };
  for (const auto& [key, v] : s) {
    const auto [pw, k] = key;
    add({pw - 1, k}, pw * v);
    if (k > 0) add({pw - 1, k - 1}, k * v);
  }
  return out;
}

/// Leading power of a series, or INT_MAX for the zero series.
inline int leading_power(const LogSeries& s) {
  int lead = INT_MAX;
  for (const auto& [key, v] : s) lead = std::min(lead, key.first);
  return lead;
}

/// Lowest t-power at which l_K[sol] has a nonzero coefficient (INT_MAX if none),
/// by termwise differentiation of the series rather than by the recurrence.
inline int residual_order(const FrobeniusSolution& sol, const KrallParams& p) {
  const LocalODE ode(sol.endpoint, p);
  LogSeries d = to_series(sol);
  LogSeries out;
  for (std::size_t i = 1; i <= 6; ++i) {
    d = derive(d);
    const Poly& c = ode.coeff[i];
    for (const auto& [key, v] : d)
      for (int j = 0; j <= c.degree(); ++j) {
        if (sgn(c.coeff(j)) == 0) continue;
        Rational& slot = out[{key.first + j, key.second}];
        slot += c.coeff(j) * v;
      }
  }
  int lowest = INT_MAX;
  for (const auto& [key, v] : out)
    if (sgn(v) != 0) lowest = std::min(lowest, key.first);
  return lowest;
}

/// t^r ln^k|t| is square integrable near 0 iff 2r > -1.
inline bool square_integrable_power(int r) { return 2 * r > -1; }

struct L2Classification {
  std::vector<std::pair<FrobeniusTag, bool>> in_l2;
  int count = 0;
};

inline L2Classification l2_classification(Endpoint e, const KrallParams& p, int N = 20) {
  L2Classification out;
  for (const auto& sol : frobenius_basis(e, N, p)) {
    const bool ok = square_integrable_power(leading_power(to_series(sol)));
    out.in_l2.emplace_back(sol.tag, ok);
    out.count += ok ? 1 : 0;
  }
  return out;
}

/// d_+ + d_- - 6, the deficiency index of the minimal operator.
inline int deficiency_index(const KrallParams& p, int N = 20) {
  return l2_classification(Endpoint::Plus, p, N).count + l2_classification(Endpoint::Minus, p, N).count - 6;
}

/// Whether the k-th derivative of sol is square integrable near the endpoint.
inline bool derivative_l2(const FrobeniusSolution& sol, int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("derivative order must be between 0 and 3");
  LogSeries s = to_series(sol);
  for (int i = 0; i < k; ++i) s = derive(s);
  return square_integrable_power(leading_power(s));
}

inline std::string dump_series(const FrobeniusSolution& sol) {
  std::string out = "# " + to_string(sol.tag) + " endpoint=" + to_string(sol.endpoint) +
                    " exponent=" + std::to_string(sol.exponent) + " log_degree=" + std::to_string(sol.log_degree) +
                    " N=" + std::to_string(sol.order) + "\n";
  for (const auto& [key, v] : sol.terms)
    out += "(" + std::to_string(key.first) + ", " + std::to_string(key.second) + ") " + to_string(v) + "\n";
  return out;
}

}  // namespace krall

#endif  // KRALL_FROBENIUS_HPP
