#ifndef LIEGEO_ALGEBRA_HPP
#define LIEGEO_ALGEBRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "liegeo/errors.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/report.hpp"
#include "liegeo/scalar.hpp"

namespace liegeo {

/// [e_i, e_j] = value, stored for i < j; antisymmetric completion implied.
template <class S>
struct BracketEntry {
  int i;
  int j;
  Vector<S> value;
};

/// Finite-dimensional real Lie algebra given by dense structure constants
/// c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k. Treated as immutable
/// after construction.
template <class S>
class LieAlgebra {
 public:
  // Raw dense array, dim^3 entries, no antisymmetric completion applied;
  // validate() reports whatever the data violates.
  LieAlgebra(int dim, std::vector<std::string> basis_names,
             std::vector<S> constants)
      : dim_(dim),
        names_(std::move(basis_names)),
        c_(std::move(constants)) {
    if (static_cast<std::size_t>(dim_) * dim_ * dim_ != c_.size())
      throw DimensionMismatch("structure constant array must have dim^3 entries");
    if (names_.empty())
      for (int i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i));
    if (static_cast<int>(names_.size()) != dim_)
      throw DimensionMismatch("need one basis name per dimension");
  }

  // Bracket list with i < j; the (j, i) constants are filled by antisymmetry.
  static LieAlgebra from_brackets(int dim, std::vector<std::string> basis_names,
                                  const std::vector<BracketEntry<S>>& entries) {
    std::vector<S> c(static_cast<std::size_t>(dim) * dim * dim, S(0));
    const auto at = [dim, &c](int i, int j, int k) -> S& {
      return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    };
    for (const auto& e : entries) {
      if (e.i < 0 || e.j >= dim || e.i >= e.j)
        throw DimensionMismatch("bracket entries must have 0 <= i < j < dim");
      if (static_cast<int>(e.value.size()) != dim)
        throw DimensionMismatch("bracket value has wrong length");
      for (int k = 0; k < dim; ++k) {
        at(e.i, e.j, k) = e.value[k];
        at(e.j, e.i, k) = -e.value[k];
      }
    }
    return LieAlgebra(dim, std::move(basis_names), std::move(c));
  }

  int dim() const { return dim_; }

  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& basis_name(int i) const {
    return names_[static_cast<std::size_t>(i)];
  }

  const S& c(int i, int j, int k) const {
    return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// [e_i, e_j] as a coordinate vector.
  Vector<S> bracket_basis(int i, int j) const {
    Vector<S> v = zero_vector<S>(dim_);
    for (int k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
  }

 private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<S> c_;  // c[(i*dim + j)*dim + k]
};

template <class S>
void check_dim(const LieAlgebra<S>& alg, const Vector<S>& v,
               const char* what) {
  if (static_cast<int>(v.size()) != alg.dim())
    throw DimensionMismatch(std::string(what) + ": expected length " +
                            std::to_string(alg.dim()) + ", got " +
                            std::to_string(v.size()));
}

/// Bilinear extension of the structure constants:
/// [u, v] = sum_{i,j} u_i v_j [e_i, e_j].
template <class S>
Vector<S> bracket(const LieAlgebra<S>& alg, const Vector<S>& u,
                  const Vector<S>& v) {
  check_dim(alg, u, "bracket lhs");
  check_dim(alg, v, "bracket rhs");
  const int n = alg.dim();
  Vector<S> w = zero_vector<S>(n);
  for (int i = 0; i < n; ++i) {
    if (scalar_traits<S>::is_zero(u[i], 0.0)) continue;
    for (int j = 0; j < n; ++j) {
      if (scalar_traits<S>::is_zero(v[j], 0.0)) continue;
      const S uv = u[i] * v[j];
      for (int k = 0; k < n; ++k) w[k] += uv * alg.c(i, j, k);
    }
  }
  return w;
}

/// Checks the Lie-algebra axioms by brute force over index tuples.
/// Antisymmetry is checked on i <= j (each independent component once);
/// the Jacobi identity on all triples i < j < k, componentwise.
template <class S>
ValidationReport validate(const LieAlgebra<S>& alg,
                          double eps = kDefaultEpsilon) {
  ValidationReport report;
  const int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const S sum = alg.c(i, j, k) + alg.c(j, i, k);
        if (!scalar_traits<S>::is_zero(sum, eps))
          report.add("antisymmetry violated at (i=" + std::to_string(i) +
                     ", j=" + std::to_string(j) + ", k=" + std::to_string(k) +
                     "): c[i][j][k] + c[j][i][k] = " + scalar_traits<S>::str(sum));
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          S jac = S(0);
          for (int m = 0; m < n; ++m) {
            jac += alg.c(i, j, m) * alg.c(m, k, l);
            jac += alg.c(j, k, m) * alg.c(m, i, l);
            jac += alg.c(k, i, m) * alg.c(m, j, l);
          }
          if (!scalar_traits<S>::is_zero(jac, eps))
            report.add("jacobi violated at (i=" + std::to_string(i) + ", j=" +
                       std::to_string(j) + ", k=" + std::to_string(k) +
                       "), component " + std::to_string(l) + ": " +
                       scalar_traits<S>::str(jac));
        }
  return report;
}

}  // namespace liegeo

#endif
