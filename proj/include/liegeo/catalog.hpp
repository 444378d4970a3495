#ifndef LIEGEO_CATALOG_HPP
#define LIEGEO_CATALOG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <cmath>

#include "liegeo/algebra.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/geometry.hpp"
#include "liegeo/randers.hpp"
#include "liegeo/sampling.hpp"
#include "liegeo/scalar.hpp"

namespace liegeo {
namespace catalog {

/// Literal fixtures transcribed from the published tables; the point of
/// verify_all is to diff computation against publication, so none of this
/// is recomputed.
template <class S>
struct ExpectedData {
  Connection<S> connection;
  std::optional<CurvatureOperator<S>> curvature;
  std::vector<Vector<S>> parallel_basis;
  // Basis index whose span carries the parallel drift family Q = q e_idx;
  // nullopt when no Berwald Randers metric exists.
  std::optional<int> berwald_drift_index;
  // Sign of every flag curvature: +1 (>= 0), -1 (<= 0), 0 (flat);
  // nullopt when the case carries no Berwald Randers metric.
  std::optional<int> flag_sign;
};

template <class S>
struct CatalogEntry {
  std::string name;
  LieAlgebra<S> algebra;
  InnerProduct<S> metric;
  ExpectedData<S> expected;
};

inline const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names = {"abelian", "case1", "case2",
                                                 "case3", "case4"};
  return names;
}

namespace detail {

template <class S>
struct GammaSpec {
  int i, j, k;
  long num, den;
};

template <class S>
Connection<S> make_connection(int dim,
                              std::initializer_list<GammaSpec<S>> entries) {
  Connection<S> conn(dim);
  for (const auto& e : entries)
    conn.gamma(e.i, e.j, e.k) = scalar_from_fraction<S>(e.num, e.den);
  return conn;
}

template <class S>
struct CurvSpec {
  int i, j, k, l;
  long num, den;
};

// Entries given for i < j; the (j, i) slot filled by antisymmetry.
template <class S>
CurvatureOperator<S> make_curvature(int dim,
                                    std::initializer_list<CurvSpec<S>> entries) {
  CurvatureOperator<S> table(dim);
  for (const auto& e : entries) {
    const S value = scalar_from_fraction<S>(e.num, e.den);
    table.r(e.i, e.j, e.k, e.l) = value;
    table.r(e.j, e.i, e.k, e.l) = -value;
  }
  return table;
}

template <class S>
Vector<S> coeff(int dim, int index, long num = 1, long den = 1) {
  Vector<S> v = zero_vector<S>(dim);
  v[static_cast<std::size_t>(index)] = scalar_from_fraction<S>(num, den);
  return v;
}

}  // namespace detail

/// The five catalog spaces on the orthonormal basis (X, Y, Z, W) =
/// indices (0, 1, 2, 3), identity Gram matrix.
template <class S>
CatalogEntry<S> get(const std::string& name) {
  using detail::coeff;
  const int n = 4;
  const std::vector<std::string> names = {"X", "Y", "Z", "W"};
  const InnerProduct<S> metric = InnerProduct<S>::standard(n);

  if (name == "abelian") {
    auto algebra = LieAlgebra<S>::from_brackets(n, names, {});
    ExpectedData<S> expected{
        Connection<S>(n),
        CurvatureOperator<S>(n),
        {basis_vector<S>(n, 0), basis_vector<S>(n, 1), basis_vector<S>(n, 2),
         basis_vector<S>(n, 3)},
        0,
        0};
    return {name, std::move(algebra), metric, std::move(expected)};
  }

  if (name == "case1") {
    // [Y,Z] = W, [Z,W] = Y, [W,Y] = Z, X central.
    auto algebra = LieAlgebra<S>::from_brackets(
        n, names,
        {{1, 2, coeff<S>(n, 3)}, {2, 3, coeff<S>(n, 1)}, {1, 3, coeff<S>(n, 2, -1)}});
    ExpectedData<S> expected{
        detail::make_connection<S>(n, {{1, 2, 3, 1, 2},
                                       {1, 3, 2, -1, 2},
                                       {2, 1, 3, -1, 2},
                                       {2, 3, 1, 1, 2},
                                       {3, 1, 2, 1, 2},
                                       {3, 2, 1, -1, 2}}),
        detail::make_curvature<S>(n, {{1, 2, 1, 2, -1, 4},
                                      {2, 3, 3, 2, 1, 4},
                                      {1, 3, 3, 1, 1, 4},
                                      {1, 2, 2, 1, 1, 4},
                                      {2, 3, 2, 3, -1, 4},
                                      {1, 3, 1, 3, -1, 4}}),
        {basis_vector<S>(n, 0)},
        0,
        +1};
    return {name, std::move(algebra), metric, std::move(expected)};
  }

  if (name == "case2") {
    // [X,Z] = X, [Y,Z] = Y, [X,W] = Y, [Y,W] = -X.
    auto algebra = LieAlgebra<S>::from_brackets(
        n, names,
        {{0, 2, coeff<S>(n, 0)},
         {1, 2, coeff<S>(n, 1)},
         {0, 3, coeff<S>(n, 1)},
         {1, 3, coeff<S>(n, 0, -1)}});
    ExpectedData<S> expected{
        detail::make_connection<S>(n, {{0, 0, 2, -1, 1},
                                       {0, 2, 0, 1, 1},
                                       {1, 1, 2, -1, 1},
                                       {1, 2, 1, 1, 1},
                                       {3, 0, 1, -1, 1},
                                       {3, 1, 0, 1, 1}}),
        detail::make_curvature<S>(n, {{0, 1, 0, 1, 1, 1},
                                      {1, 2, 2, 1, -1, 1},
                                      {0, 1, 1, 0, -1, 1},
                                      {0, 2, 2, 0, -1, 1},
                                      {0, 2, 0, 2, 1, 1},
                                      {1, 2, 1, 2, 1, 1}}),
        {basis_vector<S>(n, 3)},
        3,
        -1};
    return {name, std::move(algebra), metric, std::move(expected)};
  }

  if (name == "case3") {
    // [X,Y] = Y, [X,Z] = Z, [X,W] = W.
    auto algebra = LieAlgebra<S>::from_brackets(
        n, names,
        {{0, 1, coeff<S>(n, 1)}, {0, 2, coeff<S>(n, 2)}, {0, 3, coeff<S>(n, 3)}});
    ExpectedData<S> expected{
        detail::make_connection<S>(n, {{1, 0, 1, -1, 1},
                                       {1, 1, 0, 1, 1},
                                       {2, 0, 2, -1, 1},
                                       {2, 2, 0, 1, 1},
                                       {3, 0, 3, -1, 1},
                                       {3, 3, 0, 1, 1}}),
        std::nullopt,
        {},
        std::nullopt,
        std::nullopt};
    return {name, std::move(algebra), metric, std::move(expected)};
  }

  if (name == "case4") {
    // [X,Y] = Y, [X,Z] = (1/2)Z, [X,W] = (1/2)W, [Z,W] = (1/2)Y.
    auto algebra = LieAlgebra<S>::from_brackets(
        n, names,
        {{0, 1, coeff<S>(n, 1)},
         {0, 2, coeff<S>(n, 2, 1, 2)},
         {0, 3, coeff<S>(n, 3, 1, 2)},
         {2, 3, coeff<S>(n, 1, 1, 2)}});
    ExpectedData<S> expected{
        detail::make_connection<S>(n, {{1, 0, 1, -1, 1},
                                       {1, 1, 0, 1, 1},
                                       {1, 2, 3, -1, 4},
                                       {1, 3, 2, 1, 4},
                                       {2, 0, 2, -1, 2},
                                       {2, 1, 3, -1, 4},
                                       {2, 2, 0, 1, 2},
                                       {2, 3, 1, 1, 4},
                                       {3, 0, 3, -1, 2},
                                       {3, 1, 2, 1, 4},
                                       {3, 2, 1, -1, 4},
                                       {3, 3, 0, 1, 2}}),
        std::nullopt,
        {},
        std::nullopt,
        std::nullopt};
    return {name, std::move(algebra), metric, std::move(expected)};
  }

  throw UnknownCase("unknown catalog case '" + name + "'");
}

/// Recomputes connection, curvature and parallel fields for one entry and
/// diffs them against the transcribed fixtures.
template <class S>
ValidationReport verify_entry(const CatalogEntry<S>& entry,
                              double eps = kDefaultEpsilon) {
  ValidationReport report;
  const int n = entry.algebra.dim();

  const ValidationReport algebra_report = validate(entry.algebra, eps);
  if (!algebra_report.empty()) {
    report.add(entry.name + ": algebra axioms fail");
    report.merge(algebra_report);
  }
  const ValidationReport metric_report = validate(entry.metric, eps);
  if (!metric_report.empty()) {
    report.add(entry.name + ": metric not symmetric positive definite");
    report.merge(metric_report);
  }

  const Connection<S> conn = levi_civita(entry.algebra, entry.metric, eps);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const S diff = conn.gamma(i, j, k) - entry.expected.connection.gamma(i, j, k);
        if (!scalar_traits<S>::is_zero(diff, eps))
          report.add("(" + entry.name + ", i=" + std::to_string(i) +
                     ", j=" + std::to_string(j) + ", k=" + std::to_string(k) +
                     "): connection entry " +
                     scalar_traits<S>::str(conn.gamma(i, j, k)) +
                     " != expected " +
                     scalar_traits<S>::str(entry.expected.connection.gamma(i, j, k)));
      }

  if (entry.expected.curvature) {
    const CurvatureOperator<S> table = curvature_table(conn, entry.algebra);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const S diff =
                table.r(i, j, k, l) - entry.expected.curvature->r(i, j, k, l);
            if (!scalar_traits<S>::is_zero(diff, eps))
              report.add("(" + entry.name + ", i=" + std::to_string(i) +
                         ", j=" + std::to_string(j) + ", k=" +
                         std::to_string(k) + ", l=" + std::to_string(l) +
                         "): curvature entry " +
                         scalar_traits<S>::str(table.r(i, j, k, l)) +
                         " != expected " +
                         scalar_traits<S>::str(entry.expected.curvature->r(i, j, k, l)));
          }
  }

  const std::vector<Vector<S>> parallel = parallel_fields(conn, eps);
  if (parallel.size() != entry.expected.parallel_basis.size()) {
    report.add("(" + entry.name + "): parallel space dimension " +
               std::to_string(parallel.size()) + " != expected " +
               std::to_string(entry.expected.parallel_basis.size()));
  } else {
    for (std::size_t b = 0; b < parallel.size(); ++b)
      if (!is_zero_vector(sub(parallel[b], entry.expected.parallel_basis[b]), eps))
        report.add("(" + entry.name + "): parallel basis vector " +
                   std::to_string(b) + " differs from expected");
  }

  // Berwald verdict: the advertised drift family must be parallel, and a
  // seeded sample of flags must respect the recorded curvature sign.
  if (entry.expected.berwald_drift_index) {
    const Vector<S> drift =
        scale(scalar_from_fraction<S>(1, 2),
              basis_vector<S>(n, *entry.expected.berwald_drift_index));
    const RandersMetric<S> F = make_randers(entry.metric, drift);
    if (!is_berwald(F, conn, eps))
      report.add("(" + entry.name + "): advertised Berwald drift is not parallel");
    if (entry.expected.flag_sign) {
      Rng rng(1414, static_cast<std::uint64_t>(n));
      for (int trial = 0; trial < 10; ++trial) {
        const Flag<S> flag = random_flag<S>(rng, entry.metric, eps);
        const double k = scalar_traits<S>::to_double(
            flag_curvature(F, entry.algebra, conn, flag, eps));
        const int sign = *entry.expected.flag_sign;
        const bool ok = (sign > 0 && k >= -eps) || (sign < 0 && k <= eps) ||
                        (sign == 0 && std::fabs(k) <= eps);
        if (!ok) {
          report.add("(" + entry.name + "): flag curvature " +
                     scalar_traits<double>::str(k) +
                     " violates the recorded sign");
          break;
        }
      }
    }
  } else if (!parallel.empty()) {
    report.add("(" + entry.name + "): expected no Berwald drift but parallel fields exist");
  }

  return report;
}

/// Full reproduction run over the five catalog spaces.
template <class S>
ValidationReport verify_all(double eps = kDefaultEpsilon) {
  ValidationReport report;
  for (const auto& name : case_names())
    report.merge(verify_entry(get<S>(name), eps));
  return report;
}

}  // namespace catalog
}  // namespace liegeo

#endif
