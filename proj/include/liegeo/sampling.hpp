#ifndef LIEGEO_SAMPLING_HPP
#define LIEGEO_SAMPLING_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "liegeo/geometry.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/randers.hpp"
#include "liegeo/scalar.hpp"

namespace liegeo {

/// Deterministic stream: mt19937_64 is bit-exact across platforms, and the
/// [0,1) conversion below uses only exactly-representable operations, so
/// identical seeds replay byte-identically everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    gen_.seed(seq);
  }

  std::uint64_t bits() { return gen_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  long integer(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(bits() % span);
  }

 private:
  std::mt19937_64 gen_;
};

/// Nonzero rational with small numerator/denominator, |value| <= bound.
inline Rational random_rational(Rng& rng, long bound = 3, long max_den = 4,
                                bool allow_zero = true) {
  for (;;) {
    const long den = rng.integer(1, max_den);
    const long num = rng.integer(-bound * den, bound * den);
    if (num == 0 && !allow_zero) continue;
    return scalar_traits<Rational>::from_fraction(num, den);
  }
}

template <class S>
Vector<S> random_vector(Rng& rng, int dim) {
  Vector<S> v = zero_vector<S>(dim);
  if constexpr (scalar_traits<S>::exact) {
    for (int i = 0; i < dim; ++i) v[i] = random_rational(rng);
  } else {
    for (int i = 0; i < dim; ++i) v[i] = rng.uniform(-1.0, 1.0);
  }
  return v;
}

/// Rational point on S^3 by stereographic projection of a rational
/// 3-vector: exactly unit length.
inline Vector<Rational> random_unit_quaternion(Rng& rng) {
  Vector<Rational> v(3);
  for (int i = 0; i < 3; ++i)
    v[i] = scalar_traits<Rational>::from_fraction(rng.integer(-6, 6),
                                                  rng.integer(1, 6));
  Rational norm_sq(0);
  for (const auto& x : v) norm_sq += x * x;
  const Rational denom = Rational(1) + norm_sq;
  Vector<Rational> q(4);
  for (int i = 0; i < 3; ++i) q[i] = Rational(2) * v[i] / denom;
  q[3] = (Rational(1) - norm_sq) / denom;
  return q;
}

namespace detail {

// Left/right quaternion multiplication matrices on coordinates (1, i, j, k);
// for unit p, q the product L_p R_q is a rational orthogonal matrix.
inline Matrix<Rational> left_mult(const Vector<Rational>& p) {
  Matrix<Rational> m(4, 4);
  const Rational &a = p[0], &b = p[1], &c = p[2], &d = p[3];
  m(0, 0) = a;  m(0, 1) = -b; m(0, 2) = -c; m(0, 3) = -d;
  m(1, 0) = b;  m(1, 1) = a;  m(1, 2) = -d; m(1, 3) = c;
  m(2, 0) = c;  m(2, 1) = d;  m(2, 2) = a;  m(2, 3) = -b;
  m(3, 0) = d;  m(3, 1) = -c; m(3, 2) = b;  m(3, 3) = a;
  return m;
}

inline Matrix<Rational> right_mult(const Vector<Rational>& q) {
  Matrix<Rational> m(4, 4);
  const Rational &a = q[0], &b = q[1], &c = q[2], &d = q[3];
  m(0, 0) = a;  m(0, 1) = -b; m(0, 2) = -c; m(0, 3) = -d;
  m(1, 0) = b;  m(1, 1) = a;  m(1, 2) = d;  m(1, 3) = -c;
  m(2, 0) = c;  m(2, 1) = -d; m(2, 2) = a;  m(2, 3) = b;
  m(3, 0) = d;  m(3, 1) = c;  m(3, 2) = -b; m(3, 3) = a;
  return m;
}

}  // namespace detail

/// Random rational SO(4) matrix: x -> p x q on quaternion coordinates.
inline Matrix<Rational> random_rotation4(Rng& rng) {
  return multiply(detail::left_mult(random_unit_quaternion(rng)),
                  detail::right_mult(random_unit_quaternion(rng)));
}

/// g-orthonormal pair. Exact mode requires dim 4 and the identity Gram
/// (catalog geometry): two distinct columns of a rational rotation give an
/// exactly orthonormal pair. Float mode Gram-Schmidts random vectors.
template <class S>
std::pair<Vector<S>, Vector<S>> random_orthonormal_pair(
    Rng& rng, const InnerProduct<S>& g) {
  if constexpr (scalar_traits<S>::exact) {
    if (g.dim() != 4 || !(g.gram == Matrix<S>::identity(4)))
      throw NonPerfectSquare(
          "exact orthonormal sampling needs the 4-dim identity Gram");
    const Matrix<Rational> rot = random_rotation4(rng);
    const int i = static_cast<int>(rng.integer(0, 3));
    int j = static_cast<int>(rng.integer(0, 2));
    if (j >= i) ++j;
    Vector<Rational> u(4), v(4);
    for (int r = 0; r < 4; ++r) {
      u[r] = rot(r, i);
      v[r] = rot(r, j);
    }
    return {u, v};
  } else {
    for (;;) {
      Vector<S> u = random_vector<S>(rng, g.dim());
      Vector<S> v = random_vector<S>(rng, g.dim());
      const S uu = g.pair(u, u);
      if (scalar_traits<S>::to_double(uu) < 1e-3) continue;
      const S inv_norm_u = S(1) / scalar_traits<S>::sqrt(uu);
      u = scale(inv_norm_u, u);
      v = sub(v, scale(g.pair(u, v), u));
      const S vv = g.pair(v, v);
      if (scalar_traits<S>::to_double(vv) < 1e-3) continue;
      v = scale(S(1) / scalar_traits<S>::sqrt(vv), v);
      return {u, v};
    }
  }
}

/// Random nondegenerate flag. Exact mode: a rational-orthonormal pair with
/// the pole rescaled (its norm stays a perfect square) and the transverse
/// edge sheared inside the plane. Float mode: independent random vectors.
template <class S>
Flag<S> random_flag(Rng& rng, const InnerProduct<S>& g,
                    double eps = kDefaultEpsilon) {
  if constexpr (scalar_traits<S>::exact) {
    auto [u, v] = random_orthonormal_pair<S>(rng, g);
    const Rational pole_scale = random_rational(rng, 3, 3, false);
    const Rational trans_scale = random_rational(rng, 3, 3, false);
    const Rational shear = random_rational(rng, 2, 2, true);
    Vector<Rational> pole = scale(pole_scale, u);
    Vector<Rational> trans = add(scale(trans_scale, v), scale(shear, pole));
    return {std::move(pole), std::move(trans)};
  } else {
    for (;;) {
      Vector<S> pole = random_vector<S>(rng, g.dim());
      Vector<S> trans = random_vector<S>(rng, g.dim());
      const S denom =
          g.pair(pole, pole) * g.pair(trans, trans) -
          g.pair(pole, trans) * g.pair(pole, trans);
      if (scalar_traits<S>::to_double(denom) > std::max(eps, 1e-3))
        return {std::move(pole), std::move(trans)};
    }
  }
}

/// Drift magnitude for sweeps. Exact: q = k/21, k in [-20,20] \ {0} (the
/// full open interval at rational points). Float: |q| in [0.02, 0.95] to
/// keep the flag-curvature denominator away from its q -> +-1 collapse.
template <class S>
S random_drift_coefficient(Rng& rng) {
  if constexpr (scalar_traits<S>::exact) {
    long k = rng.integer(-20, 20);
    while (k == 0) k = rng.integer(-20, 20);
    return scalar_traits<S>::from_fraction(k, 21);
  } else {
    const double magnitude = rng.uniform(0.02, 0.95);
    return rng.bits() & 1 ? magnitude : -magnitude;
  }
}

}  // namespace liegeo

#endif
