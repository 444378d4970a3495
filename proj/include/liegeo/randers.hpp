#ifndef LIEGEO_RANDERS_HPP
#define LIEGEO_RANDERS_HPP

#include <utility>
#include <vector>

#include "liegeo/algebra.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/geometry.hpp"
#include "liegeo/scalar.hpp"

namespace liegeo {

/// Randers metric F(y) = sqrt(g(y,y)) + g(drift, y) on left-invariant
/// fields. Requires g(drift, drift) < 1; drift = 0 degenerates to the
/// Riemannian metric.
template <class S>
struct RandersMetric {
  InnerProduct<S> g;
  Vector<S> drift;
};

/// A 2-plane P = span{transverse, pole} with distinguished flagpole.
template <class S>
struct Flag {
  Vector<S> pole;
  Vector<S> transverse;
};

template <class S>
RandersMetric<S> make_randers(InnerProduct<S> g, Vector<S> drift) {
  if (static_cast<int>(drift.size()) != g.dim())
    throw DimensionMismatch("drift length must equal metric dimension");
  const S norm_sq = g.pair(drift, drift);
  if (norm_sq >= S(1))
    throw DriftTooLarge(std::sqrt(scalar_traits<S>::to_double(norm_sq)));
  return {std::move(g), std::move(drift)};
}

/// F(y) = sqrt(g(y,y)) + g(drift, y); positively 1-homogeneous.
template <class S>
S randers_norm(const RandersMetric<S>& F, const Vector<S>& y) {
  const S alpha = scalar_traits<S>::sqrt(F.g.pair(y, y));
  return alpha + F.g.pair(F.drift, y);
}

/// Berwald criterion: the drift field is parallel for the connection.
template <class S>
bool is_berwald(const RandersMetric<S>& F, const Connection<S>& conn,
                double eps = kDefaultEpsilon) {
  const int n = conn.dim();
  for (int i = 0; i < n; ++i) {
    const Vector<S> dv =
        covariant_derivative(conn, basis_vector<S>(n, i), F.drift);
    if (!is_zero_vector(dv, eps)) return false;
  }
  return true;
}

/// Fundamental tensor g_Y(u,v) = (1/2) d^2/ds dt F^2(Y + su + tv) at s=t=0,
/// evaluated through the Randers closed form
///   g_Y(u,v) = (F/a)[g(u,v) - g(Y,u)g(Y,v)/a^2]
///            + (g(Y,u)/a + g(X,u))(g(Y,v)/a + g(X,v)),   a = sqrt(g(Y,Y)).
template <class S>
S fundamental_tensor(const RandersMetric<S>& F, const Vector<S>& y,
                     const Vector<S>& u, const Vector<S>& v) {
  const S alpha_sq = F.g.pair(y, y);
  if (scalar_traits<S>::is_zero(alpha_sq, 0.0))
    throw ZeroPole("fundamental tensor undefined at y = 0");
  const S alpha = scalar_traits<S>::sqrt(alpha_sq);
  const S f_value = alpha + F.g.pair(F.drift, y);
  const S gyu = F.g.pair(y, u);
  const S gyv = F.g.pair(y, v);
  const S xu = F.g.pair(F.drift, u);
  const S xv = F.g.pair(F.drift, v);
  return (f_value / alpha) * (F.g.pair(u, v) - gyu * gyv / alpha_sq) +
         (gyu / alpha + xu) * (gyv / alpha + xv);
}

/// Flag curvature
///   K(P,Y) = g_Y(R(U,Y)Y, U) / (g_Y(Y,Y) g_Y(U,U) - g_Y(Y,U)^2)
/// with Y the flagpole and U the transverse edge. Demands the Berwald
/// property: only then do the curvature tensors of F and g coincide.
template <class S>
S flag_curvature(const RandersMetric<S>& F, const LieAlgebra<S>& alg,
                 const Connection<S>& conn, const Flag<S>& flag,
                 double eps = kDefaultEpsilon) {
  if (!is_berwald(F, conn, eps))
    throw NotBerwald("drift field is not parallel; flag curvature of F "
                     "is not computed by the Riemannian curvature tensor");
  const Vector<S>& pole = flag.pole;
  const Vector<S>& trans = flag.transverse;
  const Vector<S> r = curvature(conn, alg, trans, pole, pole);
  const S numer = fundamental_tensor(F, pole, r, trans);
  const S gyy = fundamental_tensor(F, pole, pole, pole);
  const S guu = fundamental_tensor(F, pole, trans, trans);
  const S gyu = fundamental_tensor(F, pole, pole, trans);
  const S denom = gyy * guu - gyu * gyu;
  if (scalar_traits<S>::is_zero(denom, eps))
    throw DegenerateFlag("pole and transverse vector do not span a flag");
  return numer / denom;
}

/// Closed form for catalog case 1 (drift q along X), flag spanned by the
/// g-orthonormal pair U = aX+bY+cZ+dW (pole), V = ~aX+~bY+~cZ+~dW:
///   K(P,U) = [(b~c - c~b)^2 + (b~d - d~b)^2 + (c~d - d~c)^2] / [4(1+aq)^2].
template <class S>
S flag_curvature_case1(const S& q, const S& a, const S& b, const S& c,
                       const S& d, const S& at, const S& bt, const S& ct,
                       const S& dt) {
  (void)at;
  const S one_aq = S(1) + a * q;
  if (scalar_traits<S>::is_zero(one_aq, 0.0))
    throw DegenerateDenominator("1 + aq = 0");
  const S t1 = b * ct - c * bt;
  const S t2 = b * dt - d * bt;
  const S t3 = c * dt - d * ct;
  return (t1 * t1 + t2 * t2 + t3 * t3) / (S(4) * one_aq * one_aq);
}

/// Closed form for catalog case 2 (drift q along W):
///   K(P,U) = -[(a~b - b~a)^2 + (a~c - c~a)^2 + (b~c - c~b)^2] / (1+dq)^2.
template <class S>
S flag_curvature_case2(const S& q, const S& a, const S& b, const S& c,
                       const S& d, const S& at, const S& bt, const S& ct,
                       const S& dt) {
  (void)dt;
  const S one_dq = S(1) + d * q;
  if (scalar_traits<S>::is_zero(one_dq, 0.0))
    throw DegenerateDenominator("1 + dq = 0");
  const S t1 = a * bt - b * at;
  const S t2 = a * ct - c * at;
  const S t3 = b * ct - c * bt;
  return -(t1 * t1 + t2 * t2 + t3 * t3) / (one_dq * one_dq);
}

}  // namespace liegeo

#endif
