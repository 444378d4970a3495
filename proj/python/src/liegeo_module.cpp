// Python bindings for the float-mode engine plus exact-mode verification
// entry points. Exact arithmetic stays inside the C++ core; results that
// cross into Python are doubles or rational strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "liegeo/catalog.hpp"
#include "liegeo/hypercomplex.hpp"
#include "liegeo/serialize.hpp"
#include "liegeo/sweep.hpp"

namespace py = pybind11;
using namespace liegeo;

namespace {

using Alg = LieAlgebra<double>;
using Metric = InnerProduct<double>;
using Conn = Connection<double>;
using Curv = CurvatureOperator<double>;
using Randers = RandersMetric<double>;
using Triple = HypercomplexTriple<double>;

Matrix<double> matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix<double> m(n, rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw DimensionMismatch("matrix rows must have equal length");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> matrix_to_rows(const Matrix<double>& m) {
  std::vector<std::vector<double>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariant Riemannian and Berwald-type Randers geometry on Lie "
            "groups given by structure constants";

  // Translators run newest-first: register the base before the specializations.
  py::register_exception<Error>(m, "LieGeoError");
  py::register_exception<DimensionMismatch>(m, "DimensionMismatchError");
  py::register_exception<SingularMetric>(m, "SingularMetricError");
  py::register_exception<DegenerateFlag>(m, "DegenerateFlagError");
  py::register_exception<DriftTooLarge>(m, "DriftTooLargeError");
  py::register_exception<ZeroPole>(m, "ZeroPoleError");
  py::register_exception<NotBerwald>(m, "NotBerwaldError");
  py::register_exception<UnknownCase>(m, "UnknownCaseError");
  py::register_exception<DegenerateDenominator>(m, "DegenerateDenominatorError");

  py::class_<Alg>(m, "LieAlgebra")
      .def(py::init([](int dim, std::vector<std::string> names,
                       const std::vector<std::tuple<int, int, std::vector<double>>>& brackets) {
             std::vector<BracketEntry<double>> entries;
             for (const auto& [i, j, value] : brackets)
               entries.push_back({i, j, value});
             return Alg::from_brackets(dim, std::move(names), entries);
           }),
           py::arg("dim"), py::arg("basis") = std::vector<std::string>{},
           py::arg("brackets") =
               std::vector<std::tuple<int, int, std::vector<double>>>{})
      .def_property_readonly("dim", &Alg::dim)
      .def_property_readonly("basis", &Alg::basis_names)
      .def("c", &Alg::c)
      .def("bracket",
           [](const Alg& alg, const std::vector<double>& u,
              const std::vector<double>& v) { return bracket(alg, u, v); })
      .def("validate", [](const Alg& alg, double eps) {
             return validate(alg, eps).violations;
           },
           py::arg("eps") = kDefaultEpsilon);

  py::class_<Metric>(m, "InnerProduct")
      .def(py::init([](const std::vector<std::vector<double>>& gram) {
             return Metric{matrix_from_rows(gram)};
           }),
           py::arg("gram"))
      .def_static("standard", &Metric::standard, py::arg("dim"))
      .def_property_readonly("gram",
                             [](const Metric& g) { return matrix_to_rows(g.gram); })
      .def("pair", &Metric::pair)
      .def("validate", [](const Metric& g, double eps) {
             return validate(g, eps).violations;
           },
           py::arg("eps") = kDefaultEpsilon);

  py::class_<Conn>(m, "Connection")
      .def_property_readonly("dim", &Conn::dim)
      .def("gamma",
           [](const Conn& c, int i, int j, int k) { return c.gamma(i, j, k); })
      .def("derivative_basis", &Conn::derivative_basis);

  py::class_<Curv>(m, "CurvatureOperator")
      .def_property_readonly("dim", &Curv::dim)
      .def("r", [](const Curv& t, int i, int j, int k, int l) {
        return t.r(i, j, k, l);
      })
      .def("contract", &Curv::contract);

  py::class_<Randers>(m, "RandersMetric")
      .def_property_readonly("drift",
                             [](const Randers& F) { return F.drift; })
      .def("norm", [](const Randers& F, const std::vector<double>& y) {
        return randers_norm(F, y);
      });

  py::class_<Triple>(m, "HypercomplexTriple")
      .def(py::init([](const std::vector<std::vector<double>>& j1,
                       const std::vector<std::vector<double>>& j2,
                       const std::vector<std::vector<double>>& j3) {
             return Triple{{matrix_from_rows(j1)},
                           {matrix_from_rows(j2)},
                           {matrix_from_rows(j3)}};
           }),
           py::arg("j1"), py::arg("j2"), py::arg("j3"));

  m.def("standard_quaternion_triple", &standard_quaternion_triple<double>);

  m.def("levi_civita", &levi_civita<double>, py::arg("algebra"),
        py::arg("metric"), py::arg("eps") = kDefaultEpsilon);
  m.def("covariant_derivative",
        [](const Conn& conn, const std::vector<double>& u,
           const std::vector<double>& v) {
          return covariant_derivative(conn, u, v);
        });
  m.def("curvature",
        [](const Conn& conn, const Alg& alg, const std::vector<double>& u,
           const std::vector<double>& v, const std::vector<double>& w) {
          return curvature(conn, alg, u, v, w);
        });
  m.def("curvature_table", &curvature_table<double>);
  m.def("sectional_curvature",
        [](const Metric& g, const Conn& conn, const Alg& alg,
           const std::vector<double>& u, const std::vector<double>& v,
           double eps) {
          return sectional_curvature(g, conn, alg, u, v, eps);
        },
        py::arg("metric"), py::arg("connection"), py::arg("algebra"),
        py::arg("u"), py::arg("v"), py::arg("eps") = kDefaultEpsilon);
  m.def("parallel_fields", &parallel_fields<double>, py::arg("connection"),
        py::arg("eps") = kDefaultEpsilon);

  m.def("make_randers",
        [](const Metric& g, const std::vector<double>& drift) {
          return make_randers(g, drift);
        },
        py::arg("metric"), py::arg("drift"));
  m.def("is_berwald",
        [](const Randers& F, const Conn& conn, double eps) {
          return is_berwald(F, conn, eps);
        },
        py::arg("randers"), py::arg("connection"),
        py::arg("eps") = kDefaultEpsilon);
  m.def("fundamental_tensor",
        [](const Randers& F, const std::vector<double>& y,
           const std::vector<double>& u, const std::vector<double>& v) {
          return fundamental_tensor(F, y, u, v);
        });
  m.def("flag_curvature",
        [](const Randers& F, const Alg& alg, const Conn& conn,
           const std::vector<double>& pole,
           const std::vector<double>& transverse, double eps) {
          return flag_curvature(F, alg, conn, Flag<double>{pole, transverse}, eps);
        },
        py::arg("randers"), py::arg("algebra"), py::arg("connection"),
        py::arg("pole"), py::arg("transverse"),
        py::arg("eps") = kDefaultEpsilon);
  m.def("flag_curvature_case1", &flag_curvature_case1<double>);
  m.def("flag_curvature_case2", &flag_curvature_case2<double>);

  m.def("nijenhuis",
        [](const Alg& alg, const std::vector<std::vector<double>>& j,
           const std::vector<double>& u, const std::vector<double>& v) {
          return nijenhuis(alg, Endomorphism<double>{matrix_from_rows(j)}, u, v);
        });
  m.def("verify_triple",
        [](const Alg& alg, const Triple& t, double eps) {
          return verify_triple(alg, t, eps).violations;
        },
        py::arg("algebra"), py::arg("triple"), py::arg("eps") = kDefaultEpsilon);
  m.def("verify_hyper_hermitian",
        [](const Metric& g, const Triple& t, double eps) {
          return verify_hyper_hermitian(g, t, eps).violations;
        },
        py::arg("metric"), py::arg("triple"), py::arg("eps") = kDefaultEpsilon);

  m.def("catalog_names", [] { return catalog::case_names(); });
  m.def("catalog_algebra",
        [](const std::string& name) { return catalog::get<double>(name).algebra; });
  m.def("catalog_metric",
        [](const std::string& name) { return catalog::get<double>(name).metric; });
  m.def("catalog_berwald_drift_index", [](const std::string& name) {
    const auto entry = catalog::get<double>(name);
    return entry.expected.berwald_drift_index
               ? py::object(py::int_(*entry.expected.berwald_drift_index))
               : py::object(py::none());
  });
  m.def("verify_all",
        [](double eps) { return catalog::verify_all<double>(eps).violations; },
        py::arg("eps") = kDefaultEpsilon);
  m.def("verify_all_exact",
        [] { return catalog::verify_all<Rational>().violations; });

  m.def("sweep",
        [](const std::string& name, int samples, std::uint64_t seed, double eps) {
          const auto entry = catalog::get<Rational>(name);
          std::vector<SweepRecord> records;
          const auto summary = run_sweep(entry, samples, seed, eps, &records);
          py::list lines;
          for (const auto& rec : records) lines.append(rec.line.dump());
          py::dict out;
          out["records"] = lines;
          out["min_K"] = summary.min_k;
          out["max_K"] = summary.max_k;
          out["negative"] = summary.negative;
          out["zero"] = summary.zero;
          out["positive"] = summary.positive;
          return out;
        },
        py::arg("case_name"), py::arg("samples") = 100, py::arg("seed") = 0,
        py::arg("eps") = kDefaultEpsilon);

#ifdef LIEGEO_VERSION
  m.attr("__version__") = LIEGEO_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
