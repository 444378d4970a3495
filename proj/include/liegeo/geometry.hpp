#ifndef LIEGEO_GEOMETRY_HPP
#define LIEGEO_GEOMETRY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liegeo/algebra.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/report.hpp"
#include "liegeo/scalar.hpp"

namespace liegeo {

/// Left-invariant metric: the inner product it induces on the algebra.
template <class S>
struct InnerProduct {
  Matrix<S> gram;

  int dim() const { return gram.rows(); }

  /// g(u, v) = u^T gram v.
  S pair(const Vector<S>& u, const Vector<S>& v) const {
    S out(0);
    for (int i = 0; i < gram.rows(); ++i) {
      if (scalar_traits<S>::is_zero(u[i], 0.0)) continue;
      for (int j = 0; j < gram.cols(); ++j)
        out += u[i] * gram(i, j) * v[j];
    }
    return out;
  }

  static InnerProduct standard(int n) { return {Matrix<S>::identity(n)}; }
};

/// Symmetry plus positive definiteness (Sylvester: every leading principal
/// minor strictly positive).
template <class S>
ValidationReport validate(const InnerProduct<S>& g,
                          double eps = kDefaultEpsilon) {
  ValidationReport report;
  const int n = g.dim();
  if (g.gram.cols() != n) {
    report.add("gram matrix is not square");
    return report;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const S diff = g.gram(i, j) - g.gram(j, i);
      if (!scalar_traits<S>::is_zero(diff, eps))
        report.add("gram not symmetric at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
    }
  for (int k = 1; k <= n; ++k) {
    Matrix<S> minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = g.gram(i, j);
    const S det = determinant(minor, eps);
    const bool positive = scalar_traits<S>::to_double(det) > 0 &&
                          !scalar_traits<S>::is_zero(det, eps);
    if (!positive)
      report.add("leading principal minor " + std::to_string(k) +
                 " not positive: " + scalar_traits<S>::str(det));
  }
  return report;
}

/// Christoffel array of a linear connection on left-invariant fields:
/// nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k.
template <class S>
class Connection {
 public:
  Connection() = default;
  explicit Connection(int dim)
      : dim_(dim),
        gamma_(static_cast<std::size_t>(dim) * dim * dim, S(0)) {}

  int dim() const { return dim_; }

  S& gamma(int i, int j, int k) {
    return gamma_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  const S& gamma(int i, int j, int k) const {
    return gamma_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// nabla_{e_i} e_j as a coordinate vector.
  Vector<S> derivative_basis(int i, int j) const {
    Vector<S> v = zero_vector<S>(dim_);
    for (int k = 0; k < dim_; ++k) v[k] = gamma(i, j, k);
    return v;
  }

  bool operator==(const Connection& other) const {
    return dim_ == other.dim_ && gamma_ == other.gamma_;
  }

 private:
  int dim_ = 0;
  std::vector<S> gamma_;
};

/// Levi-Civita connection of a left-invariant metric via the Koszul
/// formula 2 g(nabla_U V, W) = g([U,V],W) - g([V,W],U) + g([W,U],V).
/// Solved columnwise: for fixed (i,j) the right-hand sides over all e_k
/// form one vector, multiplied by gram^{-1}/2.
template <class S>
Connection<S> levi_civita(const LieAlgebra<S>& alg, const InnerProduct<S>& g,
                          double eps = kDefaultEpsilon) {
  const int n = alg.dim();
  if (g.dim() != n)
    throw DimensionMismatch("metric dimension does not match algebra");
  const auto inv = inverse(g.gram, eps);
  if (!inv) throw SingularMetric("gram matrix is not invertible");

  Connection<S> conn(n);
  const S half = scalar_from_fraction<S>(1, 2);
  for (int i = 0; i < n; ++i) {
    const Vector<S> ei = basis_vector<S>(n, i);
    for (int j = 0; j < n; ++j) {
      const Vector<S> ej = basis_vector<S>(n, j);
      Vector<S> rhs = zero_vector<S>(n);
      const Vector<S> bij = alg.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) {
        const Vector<S> ek = basis_vector<S>(n, k);
        rhs[k] = g.pair(bij, ek) - g.pair(alg.bracket_basis(j, k), ei) +
                 g.pair(alg.bracket_basis(k, i), ej);
      }
      const Vector<S> coords = mat_vec(*inv, rhs);
      for (int k = 0; k < n; ++k) conn.gamma(i, j, k) = half * coords[k];
    }
  }
  return conn;
}

/// Bilinear extension of the Christoffel array over constant coefficients
/// (both arguments left-invariant fields).
template <class S>
Vector<S> covariant_derivative(const Connection<S>& conn, const Vector<S>& u,
                               const Vector<S>& v) {
  const int n = conn.dim();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw DimensionMismatch("covariant_derivative arguments must match dim");
  Vector<S> w = zero_vector<S>(n);
  for (int i = 0; i < n; ++i) {
    if (scalar_traits<S>::is_zero(u[i], 0.0)) continue;
    for (int j = 0; j < n; ++j) {
      if (scalar_traits<S>::is_zero(v[j], 0.0)) continue;
      const S uv = u[i] * v[j];
      for (int k = 0; k < n; ++k) w[k] += uv * conn.gamma(i, j, k);
    }
  }
  return w;
}

/// R(u,v)w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_{[u,v]} w.
/// This sign convention reproduces the catalog curvature tables as printed.
template <class S>
Vector<S> curvature(const Connection<S>& conn, const LieAlgebra<S>& alg,
                    const Vector<S>& u, const Vector<S>& v,
                    const Vector<S>& w) {
  const Vector<S> a = covariant_derivative(conn, u, covariant_derivative(conn, v, w));
  const Vector<S> b = covariant_derivative(conn, v, covariant_derivative(conn, u, w));
  const Vector<S> c = covariant_derivative(conn, bracket(alg, u, v), w);
  return sub(sub(a, b), c);
}

/// Full component array R[i][j][k][l]: R(e_i,e_j)e_k = sum_l R[i][j][k][l] e_l.
template <class S>
class CurvatureOperator {
 public:
  CurvatureOperator() = default;
  explicit CurvatureOperator(int dim)
      : dim_(dim),
        r_(static_cast<std::size_t>(dim) * dim * dim * dim, S(0)) {}

  int dim() const { return dim_; }

  S& r(int i, int j, int k, int l) {
    return r_[((static_cast<std::size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l];
  }
  const S& r(int i, int j, int k, int l) const {
    return r_[((static_cast<std::size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l];
  }

  Vector<S> apply_basis(int i, int j, int k) const {
    Vector<S> v = zero_vector<S>(dim_);
    for (int l = 0; l < dim_; ++l) v[l] = r(i, j, k, l);
    return v;
  }

  /// Trilinear contraction with arbitrary coordinate vectors.
  Vector<S> contract(const Vector<S>& u, const Vector<S>& v,
                     const Vector<S>& w) const {
    Vector<S> out = zero_vector<S>(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (scalar_traits<S>::is_zero(u[i], 0.0)) continue;
      for (int j = 0; j < dim_; ++j) {
        if (scalar_traits<S>::is_zero(v[j], 0.0)) continue;
        const S uv = u[i] * v[j];
        for (int k = 0; k < dim_; ++k) {
          if (scalar_traits<S>::is_zero(w[k], 0.0)) continue;
          const S uvw = uv * w[k];
          for (int l = 0; l < dim_; ++l) out[l] += uvw * r(i, j, k, l);
        }
      }
    }
    return out;
  }

  bool operator==(const CurvatureOperator& other) const {
    return dim_ == other.dim_ && r_ == other.r_;
  }

 private:
  int dim_ = 0;
  std::vector<S> r_;
};

template <class S>
CurvatureOperator<S> curvature_table(const Connection<S>& conn,
                                     const LieAlgebra<S>& alg) {
  const int n = conn.dim();
  CurvatureOperator<S> table(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;  // antisymmetric slot
      for (int k = 0; k < n; ++k) {
        const Vector<S> rv = curvature(conn, alg, basis_vector<S>(n, i),
                                       basis_vector<S>(n, j),
                                       basis_vector<S>(n, k));
        for (int l = 0; l < n; ++l) table.r(i, j, k, l) = rv[l];
      }
    }
  return table;
}

/// Sectional curvature of span{u, v}:
/// K = g(R(v,u)u, v) / (|u|^2 |v|^2 - g(u,v)^2).
template <class S>
S sectional_curvature(const InnerProduct<S>& g, const Connection<S>& conn,
                      const LieAlgebra<S>& alg, const Vector<S>& u,
                      const Vector<S>& v, double eps = kDefaultEpsilon) {
  const S denom = g.pair(u, u) * g.pair(v, v) - g.pair(u, v) * g.pair(u, v);
  if (scalar_traits<S>::is_zero(denom, eps))
    throw DegenerateFlag("u, v do not span a nondegenerate 2-plane");
  const S numer = g.pair(curvature(conn, alg, v, u, u), v);
  return numer / denom;
}

/// Basis of the space of parallel left-invariant fields
/// { x : sum_k x_k gamma[i][k][l] = 0 for all i, l }, computed as the
/// nullspace of the stacked (dim^2) x dim system. The basis is canonical:
/// RREF with unit leading entries, free variables set to 1.
template <class S>
std::vector<Vector<S>> parallel_fields(const Connection<S>& conn,
                                       double eps = kDefaultEpsilon) {
  const int n = conn.dim();
  Matrix<S> system(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k) system(i * n + l, k) = conn.gamma(i, k, l);
  return nullspace(std::move(system), eps);
}

/// Torsion-free + metric-compatible checks for a candidate connection.
template <class S>
ValidationReport validate_connection(const Connection<S>& conn,
                                     const LieAlgebra<S>& alg,
                                     const InnerProduct<S>& g,
                                     double eps = kDefaultEpsilon) {
  ValidationReport report;
  const int n = conn.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector<S> torsion = sub(
          sub(conn.derivative_basis(i, j), conn.derivative_basis(j, i)),
          alg.bracket_basis(i, j));
      if (!is_zero_vector(torsion, eps))
        report.add("torsion nonzero at (i=" + std::to_string(i) +
                   ", j=" + std::to_string(j) + ")");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const S lhs = g.pair(conn.derivative_basis(i, j), basis_vector<S>(n, k)) +
                      g.pair(basis_vector<S>(n, j), conn.derivative_basis(i, k));
        if (!scalar_traits<S>::is_zero(lhs, eps))
          report.add("metric compatibility fails at (i=" + std::to_string(i) +
                     ", j=" + std::to_string(j) + ", k=" + std::to_string(k) +
                     "): " + scalar_traits<S>::str(lhs));
      }
  return report;
}

}  // namespace liegeo

#endif
