// liegeo: invariant Riemannian and Randers geometry on Lie groups given by
// structure constants. Subcommands mirror the library surface:
//   connection | curvature | parallel | flag | sweep | verify
//
// Exit codes: 0 success, 1 reproduction mismatch, 2 invalid input,
// 3 unsupported request (e.g. Berwald data on a case without parallel
// drift).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liegeo/catalog.hpp"
#include "liegeo/hypercomplex.hpp"
#include "liegeo/serialize.hpp"
#include "liegeo/sweep.hpp"

namespace {

using namespace liegeo;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitUnsupported = 3;

struct RunConfig {
  std::string mode = "exact";
  double epsilon = kDefaultEpsilon;
  std::string output = "markdown";
  std::uint64_t seed = 0;
};

struct FlagArgs {
  std::string source;
  std::string q = "0";
  std::string pole;
  std::string transverse;
};

struct SweepArgs {
  std::string source;
  int samples = 100;
};

// Input geometry: a catalog case name, or a JSON file
// {"algebra": {...}, "metric": {...}} (metric optional, identity default;
// a bare algebra document is also accepted).
template <class S>
struct Problem {
  std::string name;
  LieAlgebra<S> algebra;
  InnerProduct<S> metric;
  std::optional<catalog::CatalogEntry<S>> entry;
};

template <class S>
Problem<S> load_problem(const std::string& source, double eps) {
  for (const auto& name : catalog::case_names())
    if (source == name) {
      auto entry = catalog::get<S>(name);
      return {name, entry.algebra, entry.metric, std::move(entry)};
    }
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open '" + source + "' (not a catalog case or file)");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("bad JSON in '" + source + "': " + e.what());
  }
  const json& algebra_doc = doc.contains("algebra") ? doc.at("algebra") : doc;
  auto algebra = algebra_from_json<S>(algebra_doc);
  InnerProduct<S> metric = doc.contains("metric")
                               ? metric_from_json<S>(doc.at("metric"))
                               : InnerProduct<S>::standard(algebra.dim());
  const auto algebra_report = validate(algebra, eps);
  if (!algebra_report.empty())
    throw ParseError("algebra axioms fail:\n" + algebra_report.to_string());
  const auto metric_report = validate(metric, eps);
  if (!metric_report.empty())
    throw ParseError("metric is not symmetric positive definite:\n" +
                     metric_report.to_string());
  if (metric.dim() != algebra.dim())
    throw ParseError("metric dimension does not match algebra");
  return {source, std::move(algebra), std::move(metric), std::nullopt};
}

// Vectors arrive as a basis name ("Y") or a coordinate list ("0,1,0,0").
template <class S>
Vector<S> parse_vector(const std::string& text, const LieAlgebra<S>& alg) {
  for (int i = 0; i < alg.dim(); ++i)
    if (text == alg.basis_name(i)) return basis_vector<S>(alg.dim(), i);
  Vector<S> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ','))
    v.push_back(scalar_traits<S>::parse(part));
  if (static_cast<int>(v.size()) != alg.dim())
    throw ParseError("vector '" + text + "' needs " +
                     std::to_string(alg.dim()) + " coordinates or a basis name");
  return v;
}

template <class S>
int cmd_connection(const std::string& source, const RunConfig& cfg) {
  const auto problem = load_problem<S>(source, cfg.epsilon);
  const auto conn = levi_civita(problem.algebra, problem.metric, cfg.epsilon);
  if (cfg.output == "json")
    std::cout << connection_to_json(conn, cfg.epsilon).dump(2) << '\n';
  else
    std::cout << connection_markdown(conn, problem.algebra.basis_names(),
                                     cfg.epsilon);
  return kExitOk;
}

template <class S>
int cmd_curvature(const std::string& source, const RunConfig& cfg) {
  const auto problem = load_problem<S>(source, cfg.epsilon);
  const auto conn = levi_civita(problem.algebra, problem.metric, cfg.epsilon);
  const auto table = curvature_table(conn, problem.algebra);
  if (cfg.output == "json")
    std::cout << curvature_to_json(table, cfg.epsilon).dump(2) << '\n';
  else
    std::cout << curvature_markdown(table, problem.algebra.basis_names(),
                                    cfg.epsilon);
  return kExitOk;
}

template <class S>
int cmd_parallel(const std::string& source, const RunConfig& cfg) {
  const auto problem = load_problem<S>(source, cfg.epsilon);
  const auto conn = levi_civita(problem.algebra, problem.metric, cfg.epsilon);
  const auto basis = parallel_fields(conn, cfg.epsilon);
  if (cfg.output == "json") {
    json out = json::array();
    for (const auto& v : basis) out.push_back(vector_to_json(v));
    std::cout << json{{"dimension", basis.size()}, {"basis", out}}.dump(2)
              << '\n';
  } else {
    std::cout << parallel_markdown(basis, problem.algebra.basis_names(),
                                   cfg.epsilon);
  }
  return kExitOk;
}

// Drift direction: the first canonical parallel basis field. Catalog cases
// give the published families (X for case 1, W for case 2).
template <class S>
Vector<S> drift_direction(const Problem<S>& problem, const Connection<S>& conn,
                          double eps) {
  const auto basis = parallel_fields(conn, eps);
  if (basis.empty())
    throw NotBerwald("no parallel drift; Berwald Randers metric does not exist");
  return basis.front();
}

template <class S>
int cmd_flag(const FlagArgs& args, const RunConfig& cfg) {
  const auto problem = load_problem<S>(args.source, cfg.epsilon);
  const auto conn = levi_civita(problem.algebra, problem.metric, cfg.epsilon);
  const Vector<S> direction = drift_direction(problem, conn, cfg.epsilon);
  const S q = scalar_traits<S>::parse(args.q);
  const Vector<S> drift = scale(q, direction);
  const auto F = make_randers(problem.metric, drift);
  const Flag<S> flag{parse_vector<S>(args.pole, problem.algebra),
                     parse_vector<S>(args.transverse, problem.algebra)};

  std::string mode = scalar_traits<S>::mode_name;
  std::string k_str;
  double k_approx = 0;
  if constexpr (scalar_traits<S>::exact) {
    try {
      const S k = flag_curvature(F, problem.algebra, conn, flag, cfg.epsilon);
      k_str = scalar_traits<S>::str(k);
      k_approx = scalar_traits<S>::to_double(k);
    } catch (const NonPerfectSquare&) {
      // Pole norm is irrational: recompute the record in float and say so.
      const auto fproblem = load_problem<double>(args.source, cfg.epsilon);
      const auto fconn = levi_civita(fproblem.algebra, fproblem.metric, cfg.epsilon);
      Flag<double> fflag;
      for (const auto& x : flag.pole) fflag.pole.push_back(scalar_traits<S>::to_double(x));
      for (const auto& x : flag.transverse)
        fflag.transverse.push_back(scalar_traits<S>::to_double(x));
      Vector<double> fdrift;
      for (const auto& x : drift) fdrift.push_back(scalar_traits<S>::to_double(x));
      const double k = flag_curvature(make_randers(fproblem.metric, fdrift),
                                      fproblem.algebra, fconn, fflag, cfg.epsilon);
      k_str = scalar_traits<double>::str(k);
      k_approx = k;
      mode = "float";
    }
  } else {
    const S k = flag_curvature(F, problem.algebra, conn, flag, cfg.epsilon);
    k_str = scalar_traits<S>::str(k);
    k_approx = scalar_traits<S>::to_double(k);
  }

  if (cfg.output == "json") {
    std::cout << json{{"case", problem.name},
                      {"q", scalar_to_json(q)},
                      {"pole", args.pole},
                      {"transverse", args.transverse},
                      {"K", k_str},
                      {"mode", mode}}
                     .dump()
              << '\n';
  } else {
    std::cout << "K = " << k_str;
    if (mode != scalar_traits<S>::mode_name) std::cout << "  (mode: " << mode << ")";
    std::cout << '\n';
  }
  (void)k_approx;
  return kExitOk;
}

template <class S>
int cmd_sweep(const SweepArgs& args, const RunConfig& cfg) {
  const auto problem = load_problem<S>(args.source, cfg.epsilon);
  if (!problem.entry)
    throw ParseError("sweep expects a catalog case name");
  std::vector<SweepRecord> records;
  const SweepSummary summary =
      run_sweep(*problem.entry, args.samples, cfg.seed, cfg.epsilon, &records);
  for (const auto& rec : records) std::cout << rec.line.dump() << '\n';
  if (cfg.output == "json") {
    std::cout << summary.to_json().dump() << '\n';
  } else {
    std::cout << "samples: " << summary.samples << '\n'
              << "min K = " << summary.min_k_str << '\n'
              << "max K = " << summary.max_k_str << '\n'
              << "sign counts: negative " << summary.negative << ", zero "
              << summary.zero << ", positive " << summary.positive << '\n'
              << "records: exact " << summary.exact_records << ", float "
              << summary.float_records << '\n';
  }
  return kExitOk;
}

template <class S>
int cmd_verify(const RunConfig& cfg) {
  ValidationReport report = catalog::verify_all<S>(cfg.epsilon);

  // Hypercomplex fixture: the standard quaternionic triple on the abelian
  // space, hyper-Hermitian for the identity metric.
  const auto abelian = catalog::get<S>("abelian");
  const auto triple = standard_quaternion_triple<S>();
  report.merge(verify_triple(abelian.algebra, triple, cfg.epsilon));
  report.merge(verify_hyper_hermitian(abelian.metric, triple, cfg.epsilon));

  if (cfg.output == "json") {
    std::cout << json{{"mismatches", report.violations}}.dump(2) << '\n';
  } else if (report.empty()) {
    std::cout << "verify: all catalog tables and hypercomplex fixtures reproduced ("
              << scalar_traits<S>::mode_name << " mode)\n";
  } else {
    std::cout << report.to_string();
  }
  return report.empty() ? kExitOk : kExitMismatch;
}

template <class Fn>
int run_mode_dispatched(const RunConfig& cfg, Fn&& fn) {
  try {
    if (cfg.mode == "exact") return fn.template operator()<Rational>();
    if (cfg.mode == "float") return fn.template operator()<double>();
    std::cerr << "error: --mode must be exact or float\n";
    return kExitInvalidInput;
  } catch (const NotBerwald& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Invariant Riemannian and Berwald-type Randers geometry on Lie groups "
      "defined by structure constants"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--mode", cfg.mode, "Arithmetic mode: exact | float")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  app.add_option("--epsilon", cfg.epsilon,
                 "Absolute tolerance for float-mode comparisons")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--output", cfg.output, "Output format: markdown | json")
      ->check(CLI::IsMember({"markdown", "json"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized sweeps")
      ->capture_default_str();

  std::string source;
  auto* connection =
      app.add_subcommand("connection", "Levi-Civita connection table");
  connection->add_option("case-or-file", source, "Catalog case or JSON file")
      ->required();

  auto* curvature_cmd =
      app.add_subcommand("curvature", "Curvature tensor components");
  curvature_cmd->add_option("case-or-file", source, "Catalog case or JSON file")
      ->required();

  auto* parallel =
      app.add_subcommand("parallel", "Basis of parallel left-invariant fields");
  parallel->add_option("case-or-file", source, "Catalog case or JSON file")
      ->required();

  FlagArgs flag_args;
  auto* flag_cmd = app.add_subcommand(
      "flag", "Flag curvature of the Berwald Randers metric with drift q "
              "times the parallel field");
  flag_cmd->add_option("case-or-file", flag_args.source, "Catalog case or JSON file")
      ->required();
  flag_cmd->add_option("--q", flag_args.q, "Drift coefficient, |q| < 1")
      ->capture_default_str();
  flag_cmd->add_option("--pole", flag_args.pole,
                       "Flagpole: basis name or coordinates")
      ->required();
  flag_cmd->add_option("--transverse", flag_args.transverse,
                       "Transverse edge: basis name or coordinates")
      ->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand(
      "sweep", "Random flag-curvature samples as JSON lines plus a summary");
  sweep->add_option("case", sweep_args.source, "Catalog case")->required();
  sweep->add_option("--samples", sweep_args.samples, "Number of samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify", "Recompute and diff every catalog table and fixture");

  // Global flags may follow the subcommand name.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (connection->parsed())
    return run_mode_dispatched(cfg, [&]<class S>() {
      return cmd_connection<S>(source, cfg);
    });
  if (curvature_cmd->parsed())
    return run_mode_dispatched(cfg, [&]<class S>() {
      return cmd_curvature<S>(source, cfg);
    });
  if (parallel->parsed())
    return run_mode_dispatched(cfg, [&]<class S>() {
      return cmd_parallel<S>(source, cfg);
    });
  if (flag_cmd->parsed())
    return run_mode_dispatched(cfg, [&]<class S>() {
      return cmd_flag<S>(flag_args, cfg);
    });
  if (sweep->parsed())
    return run_mode_dispatched(cfg, [&]<class S>() {
      return cmd_sweep<S>(sweep_args, cfg);
    });
  if (verify->parsed())
    return run_mode_dispatched(cfg, [&]<class S>() {
      return cmd_verify<S>(cfg);
    });
  return kExitInvalidInput;
}
