#include <doctest.h>

#include "liegeo/catalog.hpp"
#include "liegeo/geometry.hpp"
#include "liegeo/sampling.hpp"

using namespace liegeo;

namespace {

// Random SPD Gram matrix G = L L^T with unit-scale lower-triangular L.
template <class S>
InnerProduct<S> random_spd(Rng& rng, int n) {
  Matrix<S> l(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if constexpr (scalar_traits<S>::exact)
        l(i, j) = random_rational(rng, 1, 3);
      else
        l(i, j) = rng.uniform(-0.5, 0.5);
    }
    if constexpr (scalar_traits<S>::exact)
      l(i, i) = scalar_from_fraction<S>(rng.integer(1, 3), rng.integer(1, 2));
    else
      l(i, i) = rng.uniform(1.0, 2.0);
  }
  return {multiply(l, transpose(l))};
}

}  // namespace

TEST_CASE("inner product validation enforces symmetry and positivity") {
  CHECK(validate(InnerProduct<Rational>::standard(4)).empty());

  Matrix<Rational> bad(2, 2);
  bad(0, 0) = 1;
  bad(0, 1) = 2;
  bad(1, 0) = 2;
  bad(1, 1) = 1;  // det = -3
  CHECK_FALSE(validate(InnerProduct<Rational>{bad}).empty());

  Matrix<Rational> asym = Matrix<Rational>::identity(2);
  asym(0, 1) = 1;
  CHECK_FALSE(validate(InnerProduct<Rational>{asym}).empty());
}

TEST_CASE_TEMPLATE("case-1 Levi-Civita connection matches the published table",
                   S, Rational, double) {
  const auto entry = catalog::get<S>("case1");
  const auto conn = levi_civita(entry.algebra, entry.metric);
  const S half = scalar_from_fraction<S>(1, 2);
  // nabla_Y Z = (1/2)W, nabla_Z W = (1/2)Y, nabla_W Y = (1/2)Z
  CHECK(conn.derivative_basis(1, 2) == scale(half, basis_vector<S>(4, 3)));
  CHECK(conn.derivative_basis(2, 3) == scale(half, basis_vector<S>(4, 1)));
  CHECK(conn.derivative_basis(3, 1) == scale(half, basis_vector<S>(4, 2)));
  // nabla_X anything = 0
  for (int j = 0; j < 4; ++j)
    CHECK(is_zero_vector(conn.derivative_basis(0, j)));
}

TEST_CASE("abelian connection vanishes for any metric") {
  Rng rng(21, 0);
  const auto entry = catalog::get<Rational>("abelian");
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_spd<Rational>(rng, 4);
    const auto conn = levi_civita(entry.algebra, g);
    CHECK(conn == Connection<Rational>(4));
  }
}

TEST_CASE("case-4 connection entries match the published table") {
  const auto entry = catalog::get<Rational>("case4");
  const auto conn = levi_civita(entry.algebra, entry.metric);
  // nabla_Z Y = -(1/4)W and nabla_W W = (1/2)X
  CHECK(conn.derivative_basis(2, 1) ==
        scale(scalar_from_fraction<Rational>(-1, 4), basis_vector<Rational>(4, 3)));
  CHECK(conn.derivative_basis(3, 3) ==
        scale(scalar_from_fraction<Rational>(1, 2), basis_vector<Rational>(4, 0)));
}

TEST_CASE("levi_civita rejects a singular float-mode gram") {
  const auto entry = catalog::get<double>("case1");
  Matrix<double> gram(4, 4);  // all zero
  CHECK_THROWS_AS(levi_civita(entry.algebra, InnerProduct<double>{gram}),
                  SingularMetric);
}

TEST_CASE_TEMPLATE(
    "Levi-Civita is torsion-free and metric-compatible on random metrics", S,
    Rational, double) {
  Rng rng(22, 0);
  for (const auto& name : catalog::case_names()) {
    const auto entry = catalog::get<S>(name);
    for (int trial = 0; trial < 5; ++trial) {
      const auto g = random_spd<S>(rng, 4);
      REQUIRE(validate(g).empty());
      const auto conn = levi_civita(entry.algebra, g);
      CHECK(validate_connection(conn, entry.algebra, g).empty());
    }
  }
}

TEST_CASE("covariant derivative reproduces published entries") {
  const auto case2 = catalog::get<Rational>("case2");
  const auto conn2 = levi_civita(case2.algebra, case2.metric);
  // nabla_W Y = X
  CHECK(covariant_derivative(conn2, basis_vector<Rational>(4, 3),
                             basis_vector<Rational>(4, 1)) ==
        basis_vector<Rational>(4, 0));

  const auto case3 = catalog::get<Rational>("case3");
  const auto conn3 = levi_civita(case3.algebra, case3.metric);
  // nabla_Z Z = X
  CHECK(covariant_derivative(conn3, basis_vector<Rational>(4, 2),
                             basis_vector<Rational>(4, 2)) ==
        basis_vector<Rational>(4, 0));

  // linearity: zero first argument gives zero
  CHECK(is_zero_vector(covariant_derivative(conn3, zero_vector<Rational>(4),
                                            basis_vector<Rational>(4, 1))));
}

TEST_CASE("curvature reproduces the published case-1 and case-2 values") {
  const auto case1 = catalog::get<Rational>("case1");
  const auto conn1 = levi_civita(case1.algebra, case1.metric);
  // R(Y,Z)Y = -(1/4)Z
  CHECK(curvature(conn1, case1.algebra, basis_vector<Rational>(4, 1),
                  basis_vector<Rational>(4, 2), basis_vector<Rational>(4, 1)) ==
        scale(scalar_from_fraction<Rational>(-1, 4), basis_vector<Rational>(4, 2)));

  const auto case2 = catalog::get<Rational>("case2");
  const auto conn2 = levi_civita(case2.algebra, case2.metric);
  // R(X,Y)X = Y
  CHECK(curvature(conn2, case2.algebra, basis_vector<Rational>(4, 0),
                  basis_vector<Rational>(4, 1), basis_vector<Rational>(4, 0)) ==
        basis_vector<Rational>(4, 1));
}

TEST_CASE("curvature is antisymmetric and satisfies the first Bianchi identity") {
  Rng rng(23, 0);
  for (const auto& name : catalog::case_names()) {
    const auto entry = catalog::get<Rational>(name);
    const auto conn = levi_civita(entry.algebra, entry.metric);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = random_vector<Rational>(rng, 4);
      const auto v = random_vector<Rational>(rng, 4);
      const auto w = random_vector<Rational>(rng, 4);
      CHECK(is_zero_vector(curvature(conn, entry.algebra, u, u, w)));
      CHECK(curvature(conn, entry.algebra, u, v, w) ==
            scale(Rational(-1), curvature(conn, entry.algebra, v, u, w)));
      const auto bianchi =
          add(add(curvature(conn, entry.algebra, u, v, w),
                  curvature(conn, entry.algebra, v, w, u)),
              curvature(conn, entry.algebra, w, u, v));
      CHECK(is_zero_vector(bianchi));
    }
  }
}

TEST_CASE("curvature pairing is skew-symmetric in the last two arguments") {
  Rng rng(24, 0);
  const auto entry = catalog::get<Rational>("case4");
  const auto conn = levi_civita(entry.algebra, entry.metric);
  for (int trial = 0; trial < 25; ++trial) {
    const auto u = random_vector<Rational>(rng, 4);
    const auto v = random_vector<Rational>(rng, 4);
    const auto w = random_vector<Rational>(rng, 4);
    const auto z = random_vector<Rational>(rng, 4);
    const auto r = curvature(conn, entry.algebra, u, v, w);
    const auto r_swapped = curvature(conn, entry.algebra, u, v, z);
    CHECK(entry.metric.pair(r, z) == -entry.metric.pair(r_swapped, w));
  }
}

TEST_CASE("curvature_table agrees with trilinear contraction on random triples") {
  Rng rng(25, 0);
  const auto entry = catalog::get<Rational>("case2");
  const auto conn = levi_civita(entry.algebra, entry.metric);
  const auto table = curvature_table(conn, entry.algebra);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_vector<Rational>(rng, 4);
    const auto v = random_vector<Rational>(rng, 4);
    const auto w = random_vector<Rational>(rng, 4);
    CHECK(table.contract(u, v, w) == curvature(conn, entry.algebra, u, v, w));
  }
}

TEST_CASE("case-1 curvature table has exactly the six published entries") {
  const auto entry = catalog::get<Rational>("case1");
  const auto table =
      curvature_table(levi_civita(entry.algebra, entry.metric), entry.algebra);
  const Rational quarter = scalar_from_fraction<Rational>(1, 4);
  int nonzero = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          if (table.r(i, j, k, l) != 0) {
            ++nonzero;
            CHECK(abs(table.r(i, j, k, l)) == quarter);
          }
  CHECK(nonzero == 6);
}

TEST_CASE("abelian curvature table vanishes") {
  const auto entry = catalog::get<Rational>("abelian");
  const auto table =
      curvature_table(levi_civita(entry.algebra, entry.metric), entry.algebra);
  CHECK(table == CurvatureOperator<Rational>(4));
}

TEST_CASE("sectional curvature reproduces the derived catalog values") {
  const auto case1 = catalog::get<Rational>("case1");
  const auto conn1 = levi_civita(case1.algebra, case1.metric);
  // Oracle: contraction of the transcribed table. R(Z,Y)Y = (1/4)Z, so
  // g(R(Z,Y)Y, Z) = 1/4 over an orthonormal pair.
  const auto oracle = case1.expected.curvature->contract(
      basis_vector<Rational>(4, 2), basis_vector<Rational>(4, 1),
      basis_vector<Rational>(4, 1));
  CHECK(case1.metric.pair(oracle, basis_vector<Rational>(4, 2)) ==
        scalar_from_fraction<Rational>(1, 4));
  CHECK(sectional_curvature(case1.metric, conn1, case1.algebra,
                            basis_vector<Rational>(4, 1),
                            basis_vector<Rational>(4, 2)) ==
        scalar_from_fraction<Rational>(1, 4));

  const auto case2 = catalog::get<Rational>("case2");
  const auto conn2 = levi_civita(case2.algebra, case2.metric);
  CHECK(sectional_curvature(case2.metric, conn2, case2.algebra,
                            basis_vector<Rational>(4, 0),
                            basis_vector<Rational>(4, 1)) == Rational(-1));

  const auto abelian = catalog::get<Rational>("abelian");
  const auto conn0 = levi_civita(abelian.algebra, abelian.metric);
  CHECK(sectional_curvature(abelian.metric, conn0, abelian.algebra,
                            basis_vector<Rational>(4, 2),
                            basis_vector<Rational>(4, 3)) == Rational(0));
}

TEST_CASE("sectional curvature is invariant under re-parametrizing the plane") {
  Rng rng(26, 0);
  const auto entry = catalog::get<Rational>("case1");
  const auto conn = levi_civita(entry.algebra, entry.metric);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_vector<Rational>(rng, 4);
    const auto v = random_vector<Rational>(rng, 4);
    const Rational denom = entry.metric.pair(u, u) * entry.metric.pair(v, v) -
                           entry.metric.pair(u, v) * entry.metric.pair(u, v);
    if (sgn(denom) == 0) continue;
    const Rational k = sectional_curvature(entry.metric, conn, entry.algebra, u, v);
    // Re-parametrize: u' = a u + b v, v' = c u + d v with ad - bc != 0.
    const Rational a = random_rational(rng, 2, 2, false);
    const Rational d = random_rational(rng, 2, 2, false);
    const Rational b = random_rational(rng, 2, 2);
    Rational c = random_rational(rng, 2, 2);
    if (sgn(a * d - b * c) == 0) c += Rational(1) / Rational(7);
    if (sgn(a * d - b * c) == 0) continue;
    const auto u2 = add(scale(a, u), scale(b, v));
    const auto v2 = add(scale(c, u), scale(d, v));
    CHECK(sectional_curvature(entry.metric, conn, entry.algebra, u2, v2) == k);
  }
}

TEST_CASE("sectional curvature rejects degenerate planes") {
  const auto entry = catalog::get<Rational>("case1");
  const auto conn = levi_civita(entry.algebra, entry.metric);
  const auto u = basis_vector<Rational>(4, 1);
  CHECK_THROWS_AS(sectional_curvature(entry.metric, conn, entry.algebra, u,
                                      scale(Rational(3), u)),
                  DegenerateFlag);
}

TEST_CASE("parallel fields match the published dimensions and spans") {
  const auto check_case = [](const std::string& name, std::size_t dim) {
    const auto entry = catalog::get<Rational>(name);
    const auto conn = levi_civita(entry.algebra, entry.metric);
    const auto basis = parallel_fields(conn);
    REQUIRE(basis.size() == dim);
    return basis;
  };

  const auto abelian = check_case("abelian", 4);
  for (int i = 0; i < 4; ++i) CHECK(abelian[i] == basis_vector<Rational>(4, i));

  const auto case1 = check_case("case1", 1);
  CHECK(case1[0] == basis_vector<Rational>(4, 0));  // spanned by X

  const auto case2 = check_case("case2", 1);
  CHECK(case2[0] == basis_vector<Rational>(4, 3));  // spanned by W

  check_case("case3", 0);
  check_case("case4", 0);
}

TEST_CASE("parallel basis vectors have vanishing covariant derivative") {
  for (const auto& name : catalog::case_names()) {
    const auto entry = catalog::get<Rational>(name);
    const auto conn = levi_civita(entry.algebra, entry.metric);
    for (const auto& x : parallel_fields(conn))
      for (int i = 0; i < 4; ++i)
        CHECK(is_zero_vector(
            covariant_derivative(conn, basis_vector<Rational>(4, i), x)));
  }
}
