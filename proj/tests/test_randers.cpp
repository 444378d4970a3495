#include <doctest.h>

#include <cmath>

#include "liegeo/catalog.hpp"
#include "liegeo/randers.hpp"
#include "liegeo/sampling.hpp"
#include "liegeo/sweep.hpp"

using namespace liegeo;

namespace {

// Independent oracle for the fundamental tensor: central mixed second
// difference of F^2(y + su + tv)/2 at h = 1e-5. The stencil is evaluated
// in long double; in plain double its rounding noise (~1e-15 / 4h^2) would
// drown the 1e-6 band being tested.
double fd_fundamental_tensor(const RandersMetric<double>& F,
                             const Vector<double>& y, const Vector<double>& u,
                             const Vector<double>& v, double h = 1e-5) {
  const auto f_sq = [&](double s, double t) -> long double {
    Vector<double> p(y);
    for (std::size_t i = 0; i < p.size(); ++i)
      p[i] += s * u[i] + t * v[i];
    long double quad = 0, lin = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) {
        quad += static_cast<long double>(p[i]) * F.g.gram(i, j) * p[j];
        lin += static_cast<long double>(F.drift[i]) * F.g.gram(i, j) * p[j];
      }
    const long double f = sqrtl(quad) + lin;
    return f * f;
  };
  const long double stencil =
      f_sq(h, h) - f_sq(h, -h) - f_sq(-h, h) + f_sq(-h, -h);
  return static_cast<double>(stencil / (4.0L * h * h) / 2.0L);
}

double rel_err(double a, double b) {
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

template <class S>
RandersMetric<S> catalog_randers(const catalog::CatalogEntry<S>& entry,
                                 const S& q) {
  const int idx = entry.expected.berwald_drift_index.value();
  return make_randers(entry.metric,
                      scale(q, basis_vector<S>(entry.algebra.dim(), idx)));
}

}  // namespace

TEST_CASE("make_randers accepts drifts below the unit bound only") {
  const auto entry = catalog::get<Rational>("case1");
  const auto F = catalog_randers(entry, scalar_from_fraction<Rational>(1, 2));
  CHECK(F.g.pair(F.drift, F.drift) == scalar_from_fraction<Rational>(1, 4));

  // drift = X with q = 1 sits on the excluded boundary
  CHECK_THROWS_AS(catalog_randers(entry, Rational(1)), DriftTooLarge);

  // drift = 0 degenerates to the Riemannian metric
  const auto riemannian = make_randers(entry.metric, zero_vector<Rational>(4));
  const Vector<Rational> y = {Rational(0), Rational(2), Rational(0), Rational(0)};
  CHECK(randers_norm(riemannian, y) == Rational(2));
}

TEST_CASE("randers_norm reproduces hand-evaluated values") {
  const auto entry = catalog::get<Rational>("case1");
  const auto F = catalog_randers(entry, scalar_from_fraction<Rational>(1, 2));
  // y = X: sqrt(1) + 1/2
  CHECK(randers_norm(F, basis_vector<Rational>(4, 0)) ==
        scalar_from_fraction<Rational>(3, 2));
  CHECK(randers_norm(F, zero_vector<Rational>(4)) == Rational(0));
}

TEST_CASE("randers_norm is positively homogeneous of degree one") {
  Rng rng(41, 0);
  const auto entry = catalog::get<double>("case2");
  const auto F = catalog_randers(entry, 0.4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto y = random_vector<double>(rng, 4);
    const double lambda = rng.uniform(0.1, 5.0);
    const double lhs = randers_norm(F, scale(lambda, y));
    const double rhs = lambda * randers_norm(F, y);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("randers_norm is strictly positive away from the origin") {
  Rng rng(42, 0);
  const auto entry = catalog::get<double>("case1");
  const auto F = catalog_randers(entry, -0.7);
  for (int trial = 0; trial < 100; ++trial) {
    auto y = random_vector<double>(rng, 4);
    if (is_zero_vector(y, 1e-6)) continue;
    CHECK(randers_norm(F, y) > 0.0);
  }
}

TEST_CASE("Berwald criterion follows the parallel drift classification") {
  const auto case1 = catalog::get<Rational>("case1");
  const auto conn1 = levi_civita(case1.algebra, case1.metric);
  for (long num : {1L, -3L}) {
    const auto F = catalog_randers(case1, scalar_from_fraction<Rational>(num, 4));
    CHECK(is_berwald(F, conn1));
  }
  // zero drift is parallel
  CHECK(is_berwald(make_randers(case1.metric, zero_vector<Rational>(4)), conn1));
  // drift along Y is not: nabla_Z Y = -(1/2)W != 0
  const auto bad = make_randers(
      case1.metric,
      scale(scalar_from_fraction<Rational>(1, 2), basis_vector<Rational>(4, 1)));
  CHECK_FALSE(is_berwald(bad, conn1));
}

TEST_CASE("fundamental tensor reproduces the published case-1 g_U values") {
  const auto entry = catalog::get<Rational>("case1");
  Rng rng(43, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [u, v] = random_orthonormal_pair<Rational>(rng, entry.metric);
    const Rational q = random_drift_coefficient<Rational>(rng);
    const auto F = catalog_randers(entry, q);
    const Rational a = u[0];
    const Rational at = v[0];
    const Rational one_aq = Rational(1) + a * q;
    CHECK(fundamental_tensor(F, u, u, u) == one_aq * one_aq);
    CHECK(fundamental_tensor(F, u, v, v) == one_aq + (at * q) * (at * q));
    CHECK(fundamental_tensor(F, u, u, v) == at * q * one_aq);
  }
}

TEST_CASE("fundamental tensor with zero drift is the inner product itself") {
  const auto entry = catalog::get<Rational>("case1");
  const auto F = make_randers(entry.metric, zero_vector<Rational>(4));
  CHECK(fundamental_tensor(F, basis_vector<Rational>(4, 0),
                           basis_vector<Rational>(4, 0),
                           basis_vector<Rational>(4, 0)) == Rational(1));
  Rng rng(44, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const auto [y, u] = random_orthonormal_pair<Rational>(rng, entry.metric);
    const auto w = random_vector<Rational>(rng, 4);
    CHECK(fundamental_tensor(F, y, u, w) == entry.metric.pair(u, w));
  }
}

TEST_CASE("fundamental tensor rejects the zero pole") {
  const auto entry = catalog::get<Rational>("case1");
  const auto F = catalog_randers(entry, scalar_from_fraction<Rational>(1, 3));
  CHECK_THROWS_AS(fundamental_tensor(F, zero_vector<Rational>(4),
                                     basis_vector<Rational>(4, 1),
                                     basis_vector<Rational>(4, 2)),
                  ZeroPole);
}

TEST_CASE("fundamental tensor is symmetric bilinear and obeys Euler's relation") {
  Rng rng(45, 0);
  const auto entry = catalog::get<double>("case2");
  const auto F = catalog_randers(entry, 0.35);
  for (int trial = 0; trial < 50; ++trial) {
    auto y = random_vector<double>(rng, 4);
    if (std::sqrt(entry.metric.pair(y, y)) < 0.3) continue;
    const auto u = random_vector<double>(rng, 4);
    const auto v = random_vector<double>(rng, 4);
    CHECK(fundamental_tensor(F, y, u, v) ==
          doctest::Approx(fundamental_tensor(F, y, v, u)).epsilon(1e-12));
    // g_Y(y, y) = F(y)^2
    const double f = randers_norm(F, y);
    CHECK(fundamental_tensor(F, y, y, y) ==
          doctest::Approx(f * f).epsilon(1e-10));
    // bilinearity in the second slot
    const double s = rng.uniform(-2.0, 2.0);
    CHECK(fundamental_tensor(F, y, add(scale(s, u), v), v) ==
          doctest::Approx(s * fundamental_tensor(F, y, u, v) +
                          fundamental_tensor(F, y, v, v))
              .epsilon(1e-10));
  }
}

TEST_CASE("closed-form fundamental tensor matches finite differences") {
  Rng rng(46, 0);
  int checked = 0;
  for (const char* name : {"case1", "case2"}) {
    const auto entry = catalog::get<double>(name);
    const auto F = catalog_randers(entry, name[4] == '1' ? 0.45 : -0.3);
    while (checked < 100) {
      auto y = random_vector<double>(rng, 4);
      if (std::sqrt(entry.metric.pair(y, y)) < 0.5) continue;
      const auto u = random_vector<double>(rng, 4);
      const auto v = random_vector<double>(rng, 4);
      const double closed = fundamental_tensor(F, y, u, v);
      const double fd = fd_fundamental_tensor(F, y, u, v);
      CHECK(rel_err(closed, fd) < 1e-6);
      ++checked;
    }
    checked = 0;
  }
}

TEST_CASE("flag curvature reproduces the derived catalog values") {
  const auto case1 = catalog::get<Rational>("case1");
  const auto conn1 = levi_civita(case1.algebra, case1.metric);
  const auto F1 = catalog_randers(case1, Rational(0));
  // pole Y, transverse Z with q = 0: K = 1/4
  CHECK(flag_curvature(F1, case1.algebra, conn1,
                       Flag<Rational>{basis_vector<Rational>(4, 1),
                                      basis_vector<Rational>(4, 2)}) ==
        scalar_from_fraction<Rational>(1, 4));
  // pole X, transverse Y: the numerator dies
  CHECK(flag_curvature(F1, case1.algebra, conn1,
                       Flag<Rational>{basis_vector<Rational>(4, 0),
                                      basis_vector<Rational>(4, 1)}) ==
        Rational(0));

  const auto case2 = catalog::get<Rational>("case2");
  const auto conn2 = levi_civita(case2.algebra, case2.metric);
  // pole X, transverse Y: K = -1 for any admissible q (d = ~d = 0)
  for (long num : {0L, 1L, -2L}) {
    const auto F2 = catalog_randers(case2, scalar_from_fraction<Rational>(num, 3));
    CHECK(flag_curvature(F2, case2.algebra, conn2,
                         Flag<Rational>{basis_vector<Rational>(4, 0),
                                        basis_vector<Rational>(4, 1)}) ==
          Rational(-1));
  }
}

TEST_CASE("flag curvature refuses non-Berwald drifts and degenerate flags") {
  const auto case1 = catalog::get<Rational>("case1");
  const auto conn = levi_civita(case1.algebra, case1.metric);
  const auto bad_drift = make_randers(
      case1.metric,
      scale(scalar_from_fraction<Rational>(1, 2), basis_vector<Rational>(4, 1)));
  CHECK_THROWS_AS(flag_curvature(bad_drift, case1.algebra, conn,
                                 Flag<Rational>{basis_vector<Rational>(4, 0),
                                                basis_vector<Rational>(4, 1)}),
                  NotBerwald);

  const auto F = catalog_randers(case1, scalar_from_fraction<Rational>(1, 2));
  const auto y = basis_vector<Rational>(4, 1);
  CHECK_THROWS_AS(flag_curvature(F, case1.algebra, conn,
                                 Flag<Rational>{y, scale(Rational(2), y)}),
                  DegenerateFlag);
}

TEST_CASE("closed forms evaluate the published worked examples") {
  const Rational zero(0), one(1);
  CHECK(flag_curvature_case1(zero, zero, one, zero, zero, zero, zero, one,
                             zero) == scalar_from_fraction<Rational>(1, 4));
  // pole along X spans no curved 2-plane content: numerator vanishes
  CHECK(flag_curvature_case1(scalar_from_fraction<Rational>(1, 3), one, zero,
                             zero, zero, zero, one, zero, zero) == Rational(0));
  CHECK(flag_curvature_case2(zero, one, zero, zero, zero, zero, one, zero,
                             zero) == Rational(-1));
  CHECK_THROWS_AS(flag_curvature_case1(Rational(-1), one, one, zero, zero,
                                       zero, one, zero, zero),
                  DegenerateDenominator);
}

TEST_CASE("flag curvature equals the closed forms on random orthonormal pairs") {
  Rng rng(47, 0);
  for (const char* name : {"case1", "case2"}) {
    const auto entry = catalog::get<Rational>(name);
    const auto conn = levi_civita(entry.algebra, entry.metric);
    for (int trial = 0; trial < 100; ++trial) {
      const auto [u, v] = random_orthonormal_pair<Rational>(rng, entry.metric);
      const Rational q = random_drift_coefficient<Rational>(rng);
      const auto F = catalog_randers(entry, q);
      const Rational pipeline = flag_curvature(
          F, entry.algebra, conn, Flag<Rational>{u, v});
      const Rational closed =
          name[4] == '1'
              ? flag_curvature_case1(q, u[0], u[1], u[2], u[3], v[0], v[1],
                                     v[2], v[3])
              : flag_curvature_case2(q, u[0], u[1], u[2], u[3], v[0], v[1],
                                     v[2], v[3]);
      CHECK(pipeline == closed);
    }
  }
}

TEST_CASE("float-mode pipeline agrees with the closed forms within 1e-9") {
  Rng rng(48, 0);
  for (const char* name : {"case1", "case2"}) {
    const auto entry = catalog::get<double>(name);
    const auto conn = levi_civita(entry.algebra, entry.metric);
    for (int trial = 0; trial < 100; ++trial) {
      const auto [u, v] = random_orthonormal_pair<double>(rng, entry.metric);
      const double q = random_drift_coefficient<double>(rng);
      const auto F = catalog_randers(entry, q);
      const double pipeline =
          flag_curvature(F, entry.algebra, conn, Flag<double>{u, v});
      const double closed =
          name[4] == '1'
              ? flag_curvature_case1(q, u[0], u[1], u[2], u[3], v[0], v[1],
                                     v[2], v[3])
              : flag_curvature_case2(q, u[0], u[1], u[2], u[3], v[0], v[1],
                                     v[2], v[3]);
      CHECK(rel_err(pipeline, closed) < 1e-9);
    }
  }
}

TEST_CASE("sign theorems hold on random flags") {
  Rng rng(49, 0);
  const auto case1 = catalog::get<Rational>("case1");
  const auto conn1 = levi_civita(case1.algebra, case1.metric);
  const auto case2 = catalog::get<Rational>("case2");
  const auto conn2 = levi_civita(case2.algebra, case2.metric);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational q = random_drift_coefficient<Rational>(rng);
    const auto flag1 = random_flag<Rational>(rng, case1.metric);
    CHECK(sgn(flag_curvature(catalog_randers(case1, q), case1.algebra, conn1,
                             flag1)) >= 0);
    const auto flag2 = random_flag<Rational>(rng, case2.metric);
    CHECK(sgn(flag_curvature(catalog_randers(case2, q), case2.algebra, conn2,
                             flag2)) <= 0);
  }
}

TEST_CASE("zero drift degenerates flag curvature to sectional curvature") {
  Rng rng(50, 0);
  for (const auto& name : catalog::case_names()) {
    const auto entry = catalog::get<Rational>(name);
    const auto conn = levi_civita(entry.algebra, entry.metric);
    const auto F = make_randers(entry.metric, zero_vector<Rational>(4));
    for (int trial = 0; trial < 20; ++trial) {
      const auto flag = random_flag<Rational>(rng, entry.metric);
      CHECK(flag_curvature(F, entry.algebra, conn, flag) ==
            sectional_curvature(entry.metric, conn, entry.algebra, flag.pole,
                                flag.transverse));
    }
  }
}

TEST_CASE("sweeps stream records and summarize signs deterministically") {
  const auto entry = catalog::get<Rational>("case1");
  std::vector<SweepRecord> records;
  const auto summary = run_sweep(entry, 40, 7, kDefaultEpsilon, &records);
  CHECK(summary.samples == 40);
  CHECK(records.size() == 40);
  CHECK(summary.negative == 0);
  CHECK(summary.min_k >= 0.0);
  CHECK(summary.exact_records == 40);  // catalog sampling stays exact
  for (const auto& rec : records) {
    CHECK(rec.line.at("case") == "case1");
    CHECK(rec.line.at("mode") == "exact");
  }
  // replay is identical
  std::vector<SweepRecord> replay;
  run_sweep(entry, 40, 7, kDefaultEpsilon, &replay);
  for (std::size_t i = 0; i < records.size(); ++i)
    CHECK(records[i].line == replay[i].line);
}

TEST_CASE("sweep on cases without parallel drift refuses to run") {
  const auto entry = catalog::get<Rational>("case3");
  const auto conn = levi_civita(entry.algebra, entry.metric);
  CHECK_THROWS_AS(sweep_sample(entry, conn, 1, 0), NotBerwald);
}
