#ifndef LIEGEO_HYPERCOMPLEX_HPP
#define LIEGEO_HYPERCOMPLEX_HPP

#include <string>
#include <vector>

#include "liegeo/algebra.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/geometry.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/report.hpp"

namespace liegeo {

/// Left-invariant almost-complex structure restricted to the algebra:
/// one linear map on coordinates.
template <class S>
struct Endomorphism {
  Matrix<S> matrix;

  int dim() const { return matrix.rows(); }

  Vector<S> operator()(const Vector<S>& v) const { return mat_vec(matrix, v); }
};

template <class S>
struct HypercomplexTriple {
  Endomorphism<S> j1, j2, j3;
};

/// Nijenhuis tensor of J on left-invariant fields:
/// N(u,v) = [Ju,Jv] - [u,v] - J([u,Jv] + [Ju,v]).
template <class S>
Vector<S> nijenhuis(const LieAlgebra<S>& alg, const Endomorphism<S>& J,
                    const Vector<S>& u, const Vector<S>& v) {
  if (J.dim() != alg.dim() || J.matrix.cols() != alg.dim())
    throw DimensionMismatch("endomorphism does not match algebra dimension");
  check_dim(alg, u, "nijenhuis lhs");
  check_dim(alg, v, "nijenhuis rhs");
  const Vector<S> ju = J(u);
  const Vector<S> jv = J(v);
  const Vector<S> inner = add(bracket(alg, u, jv), bracket(alg, ju, v));
  return sub(sub(bracket(alg, ju, jv), bracket(alg, u, v)), J(inner));
}

namespace detail {

template <class S>
void check_product(const Matrix<S>& lhs, const Matrix<S>& rhs, int sign,
                   const Matrix<S>& expect, const std::string& label,
                   double eps, ValidationReport& report) {
  const Matrix<S> prod = multiply(lhs, rhs);
  for (int a = 0; a < prod.rows(); ++a)
    for (int b = 0; b < prod.cols(); ++b) {
      const S diff = prod(a, b) - S(sign) * expect(a, b);
      if (!scalar_traits<S>::is_zero(diff, eps))
        report.add(label + " fails at (" + std::to_string(a) + "," +
                   std::to_string(b) + ")");
    }
}

}  // namespace detail

/// Checks the quaternion relations (all six products), J_i^2 = -Id, and
/// N_i(e_a, e_b) = 0 on every basis pair. Violations are listed, not thrown.
template <class S>
ValidationReport verify_triple(const LieAlgebra<S>& alg,
                               const HypercomplexTriple<S>& t,
                               double eps = kDefaultEpsilon) {
  ValidationReport report;
  const int n = alg.dim();
  const Matrix<S>& m1 = t.j1.matrix;
  const Matrix<S>& m2 = t.j2.matrix;
  const Matrix<S>& m3 = t.j3.matrix;
  detail::check_product(m1, m2, +1, m3, "J1*J2 = J3", eps, report);
  detail::check_product(m2, m1, -1, m3, "J2*J1 = -J3", eps, report);
  detail::check_product(m2, m3, +1, m1, "J2*J3 = J1", eps, report);
  detail::check_product(m3, m2, -1, m1, "J3*J2 = -J1", eps, report);
  detail::check_product(m3, m1, +1, m2, "J3*J1 = J2", eps, report);
  detail::check_product(m1, m3, -1, m2, "J1*J3 = -J2", eps, report);

  const Matrix<S> minus_id = [&] {
    Matrix<S> m = Matrix<S>::identity(n);
    for (int i = 0; i < n; ++i) m(i, i) = S(-1);
    return m;
  }();
  detail::check_product(m1, m1, +1, minus_id, "J1^2 = -Id", eps, report);
  detail::check_product(m2, m2, +1, minus_id, "J2^2 = -Id", eps, report);
  detail::check_product(m3, m3, +1, minus_id, "J3^2 = -Id", eps, report);

  const Endomorphism<S>* js[3] = {&t.j1, &t.j2, &t.j3};
  for (int idx = 0; idx < 3; ++idx)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const Vector<S> nij = nijenhuis(alg, *js[idx], basis_vector<S>(n, a),
                                        basis_vector<S>(n, b));
        if (!is_zero_vector(nij, eps))
          report.add("N_" + std::to_string(idx + 1) + "(e" +
                     std::to_string(a) + ", e" + std::to_string(b) +
                     ") != 0");
      }
  return report;
}

/// Hyper-Hermitian condition g(J_i u, J_i v) = g(u, v), checked as
/// J_i^T gram J_i = gram entrywise.
template <class S>
ValidationReport verify_hyper_hermitian(const InnerProduct<S>& g,
                                        const HypercomplexTriple<S>& t,
                                        double eps = kDefaultEpsilon) {
  ValidationReport report;
  const Endomorphism<S>* js[3] = {&t.j1, &t.j2, &t.j3};
  for (int idx = 0; idx < 3; ++idx) {
    const Matrix<S> conj =
        multiply(transpose(js[idx]->matrix), multiply(g.gram, js[idx]->matrix));
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b) {
        const S diff = conj(a, b) - g.gram(a, b);
        if (!scalar_traits<S>::is_zero(diff, eps))
          report.add("J" + std::to_string(idx + 1) +
                     "^T g J" + std::to_string(idx + 1) + " != g at (" +
                     std::to_string(a) + "," + std::to_string(b) + ")");
      }
  }
  return report;
}

/// Left multiplication by the unit quaternions i, j, k on coordinates
/// (1, i, j, k): the standard hypercomplex triple on R^4.
template <class S>
HypercomplexTriple<S> standard_quaternion_triple() {
  const int n = 4;
  Matrix<S> mi(n, n), mj(n, n), mk(n, n);
  // i*1 = i, i*i = -1, i*j = k, i*k = -j
  mi(1, 0) = S(1);
  mi(0, 1) = S(-1);
  mi(3, 2) = S(1);
  mi(2, 3) = S(-1);
  // j*1 = j, j*i = -k, j*j = -1, j*k = i
  mj(2, 0) = S(1);
  mj(3, 1) = S(-1);
  mj(0, 2) = S(-1);
  mj(1, 3) = S(1);
  // k*1 = k, k*i = j, k*j = -i, k*k = -1
  mk(3, 0) = S(1);
  mk(2, 1) = S(1);
  mk(1, 2) = S(-1);
  mk(0, 3) = S(-1);
  return {{mi}, {mj}, {mk}};
}

}  // namespace liegeo

#endif
