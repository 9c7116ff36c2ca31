#ifndef KRALL_GKN_EM_HPP
#define KRALL_GKN_EM_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "krall/concomitant.hpp"

namespace krall {

/// A vector of the extension space W = C^2 in standard coordinates.
struct WVector {
  Rational a;  // slot attached to -1
  Rational b;  // slot attached to +1

  friend bool operator==(const WVector&, const WVector&) = default;
};

/// a a'/A + b b'/B
inline Rational w_inner(const WVector& u, const WVector& v, const KrallParams& p) {
  return u.a * v.a / p.A() + u.b * v.b / p.B();
}

/// Coordinates (alpha1, alpha2) against the orthonormal basis xi1 = (sqrt A, 0), xi2 = (0, sqrt B).
struct XiCoords {
  Rational alpha1;
  Rational alpha2;

  /// Inner product in these coordinates is the plain dot product.
  Rational dot(const XiCoords& o) const { return alpha1 * o.alpha1 + alpha2 * o.alpha2; }

  /// Standard coordinates when sqrt A and sqrt B are rational.
  std::optional<WVector> standard(const KrallParams& p) const {
    auto ra = exact_sqrt(p.A());
    auto rb = exact_sqrt(p.B());
    if (!ra || !rb) return std::nullopt;
    return WVector{alpha1 * *ra, alpha2 * *rb};
  }

  std::string symbolic() const {
    return "(" + to_string(alpha1) + "*sqrt(A), " + to_string(alpha2) + "*sqrt(B))";
  }
};

/// Image of f0 + alpha1 t1 + alpha2 t2 for a caller-supplied decomposition.
inline XiCoords psi(const Rational& alpha1, const Rational& alpha2) { return {alpha1, alpha2}; }

/// (-A [f,1]_K(-1), B [f,1]_K(1)), computed as brackets against the unit
/// functions 1- and 1+ so that the sqrt factors of t1, t2 cancel.
inline Expected<WVector> omega(const EndpointFn& f, const KrallParams& p) {
  const TestFunctions tf(p);
  return capture([&] {
    return WVector{p.A() * *symplectic_H(f, tf.one_minus(), p), p.B() * *symplectic_H(f, tf.one_plus(), p)};
  });
}

/// The same map through the closed first-order form of [f,1]_K.
inline Expected<WVector> omega_direct(const EndpointFn& f, const KrallParams& p) {
  return capture([&] {
    return WVector{-p.A() * *concomitant_with_one(f, Endpoint::Minus, p),
                   p.B() * *concomitant_with_one(f, Endpoint::Plus, p)};
  });
}

struct GknCandidate {
  EndpointFn fn;
  WVector w;
};

/// [f,g]_H - <Omega f, w_v>_W + <w_u, Omega g>_W
inline LimitResult symplectic_HW(const GknCandidate& u, const GknCandidate& v, const KrallParams& p) {
  return capture([&]() -> Rational {
    return *symplectic_H(u.fn, v.fn, p) - w_inner(*omega(u.fn, p), v.w, p) + w_inner(u.w, *omega(v.fn, p), p);
  });
}

struct BracketGrid {
  std::vector<std::vector<std::optional<Rational>>> values;  // nullopt where a limit diverged
  bool all_zero() const {
    for (const auto& row : values)
      for (const auto& v : row)
        if (!v || sgn(*v) != 0) return false;
    return true;
  }
};

inline BracketGrid gkn_symmetry_check(const std::vector<GknCandidate>& c, const KrallParams& p) {
  BracketGrid g;
  g.values.assign(c.size(), std::vector<std::optional<Rational>>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      LimitResult r = symplectic_HW(c[i], c[j], p);
      if (r) g.values[i][j] = *r;
    }
  return g;
}

/// Determinant by fraction-exact Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

struct IndependenceCertificate {
  std::vector<std::vector<Rational>> matrix;  // matrix[i][j] = [probe_i, candidate_j]
  Rational det;
  bool certified() const { return sgn(det) != 0; }  // singular means inconclusive, never dependent
};

inline Expected<IndependenceCertificate> independence_certificate(const std::vector<GknCandidate>& candidates,
                                                                   const std::vector<GknCandidate>& probes,
                                                                   const KrallParams& p) {
  if (candidates.size() != probes.size()) throw std::invalid_argument("need as many probes as candidates");
  return capture([&] {
    IndependenceCertificate cert;
    cert.matrix.assign(probes.size(), std::vector<Rational>(candidates.size()));
    for (std::size_t i = 0; i < probes.size(); ++i)
      for (std::size_t j = 0; j < candidates.size(); ++j) cert.matrix[i][j] = *symplectic_HW(probes[i], candidates[j], p);
    cert.det = determinant(cert.matrix);
    return cert;
  });
}

/// {(y_i, (0,0))}, i = 1..4.
inline std::vector<GknCandidate> krall_gkn_set(const KrallParams& p) {
  std::vector<GknCandidate> out;
  for (auto& y : TestFunctions(p).y()) out.push_back({std::move(y), WVector{}});
  return out;
}

struct DomainWitness {
  std::array<Rational, 4> conditions;  // [(f,(a,b)), (y_j,(0,0))] for j = 1..4
  bool direct = false;                 // all four vanish
  bool reduced = false;                // a = f(-1), b = f(1), Lambda[f](+-1) = 0
  Rational lambda_minus, lambda_plus;
  bool member() const { return direct && reduced; }
  bool routes_agree() const { return direct == reduced; }
};

inline Expected<DomainWitness> domain_membership(const ExtendedVector& u, const KrallParams& p) {
  return capture([&] {
    DomainWitness w;
    const GknCandidate cu{u.f, {u.a, u.b}};
    const auto ys = krall_gkn_set(p);
    w.direct = true;
    for (std::size_t j = 0; j < 4; ++j) {
      w.conditions[j] = *symplectic_HW(cu, ys[j], p);
      if (sgn(w.conditions[j]) != 0) w.direct = false;
    }
    w.lambda_minus = *lambda_at(u.f, Endpoint::Minus, p);
    w.lambda_plus = *lambda_at(u.f, Endpoint::Plus, p);
    w.reduced = u.a == *u.f.at(Endpoint::Minus) && u.b == *u.f.at(Endpoint::Plus) && sgn(w.lambda_minus) == 0 &&
                sgn(w.lambda_plus) == 0;
    return w;
  });
}

class NotInDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct THatImage {
  ExtendedVector value;     // (l_K f, -Omega f)
  WVector explicit_form;    // (24A f''(-1) - 24A(B+1) f'(-1), 24B f''(1) + 24B(A+1) f'(1))
  bool forms_agree() const { return value.a == explicit_form.a && value.b == explicit_form.b; }
};

/// Applies the operator without checking domain membership. Intended for negative tests only.
inline THatImage apply_T_hat_unchecked(const ExtendedVector& u, const KrallParams& p) {
  const WVector om = omega(u.f, p).value();
  THatImage out{{apply_krall(u.f, p), -om.a, -om.b}, {}};
  const Rational d1m = derivative_at(u.f, 1, Endpoint::Minus).value();
  const Rational d2m = derivative_at(u.f, 2, Endpoint::Minus).value();
  const Rational d1p = derivative_at(u.f, 1, Endpoint::Plus).value();
  const Rational d2p = derivative_at(u.f, 2, Endpoint::Plus).value();
  out.explicit_form.a = 24 * p.A() * d2m - 24 * p.A() * (p.B() + 1) * d1m;
  out.explicit_form.b = 24 * p.B() * d2p + 24 * p.B() * (p.A() + 1) * d1p;
  return out;
}

inline THatImage apply_T_hat(const ExtendedVector& u, const KrallParams& p) {
  const DomainWitness w = domain_membership(u, p).value();
  if (!w.member()) throw NotInDomain("vector is not in the domain of the self-adjoint operator");
  return apply_T_hat_unchecked(u, p);
}

struct EigenReport {
  Poly K;
  Rational lambda;
  THatImage image;
  bool interior = false;  // l_K K = lambda K
  bool minus = false;     // second slot = lambda K(-1)
  bool plus = false;      // third slot = lambda K(1)
  bool holds() const { return interior && minus && plus && image.forms_agree(); }
};

inline EigenReport eigen_verify(int n, const KrallParams& p) {
  EigenReport r;
  r.K = krall_polynomial(n, p);
  r.lambda = krall_eigenvalue(n, p);
  const ExtendedVector u = embed(r.K);
  r.image = apply_T_hat(u, p);
  r.interior = r.image.value.f == EndpointFn(r.K * r.lambda);
  r.minus = r.image.value.a == r.lambda * u.a;
  r.plus = r.image.value.b == r.lambda * u.b;
  return r;
}

/// M[m][n] = <T embed K_m, embed K_n> / kappa(K_n, K_n).
inline Matrix operator_matrix(int N, const KrallParams& p) {
  const auto K = krall_polynomials(N, p);
  std::vector<ExtendedVector> images;
  for (const auto& k : K) images.push_back(apply_T_hat(embed(k), p).value);
  Matrix m(K.size(), std::vector<Rational>(K.size()));
  for (std::size_t i = 0; i < K.size(); ++i)
    for (std::size_t j = 0; j < K.size(); ++j)
      m[i][j] = extended_inner(images[i], embed(K[j]), p) / kappa_inner(K[j], K[j], p);
  return m;
}

}  // namespace krall

#endif  // KRALL_GKN_EM_HPP
