#ifndef LIEGEO_SWEEP_HPP
#define LIEGEO_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "liegeo/catalog.hpp"
#include "liegeo/randers.hpp"
#include "liegeo/sampling.hpp"
#include "liegeo/serialize.hpp"

namespace liegeo {

/// One flag-curvature sample, already rendered for the JSON-lines stream:
/// {case, q, pole, transverse, K, mode}.
struct SweepRecord {
  json line;
  double k_approx;
  bool exact;
  int exact_sign = 0;  // sgn of K when exact; unused for float records
};

struct SweepSummary {
  std::string case_name;
  int samples = 0;
  double min_k = 0;
  double max_k = 0;
  std::string min_k_str;
  std::string max_k_str;
  int negative = 0;
  int zero = 0;
  int positive = 0;
  int exact_records = 0;
  int float_records = 0;

  json to_json() const {
    return {{"case", case_name},     {"samples", samples},
            {"min_K", min_k_str},    {"max_K", max_k_str},
            {"negative", negative},  {"zero", zero},
            {"positive", positive},  {"exact_records", exact_records},
            {"float_records", float_records}};
  }
};

namespace detail {

template <class S>
SweepRecord flag_record(const std::string& case_name,
                        const catalog::CatalogEntry<S>& entry,
                        const Connection<S>& conn, const S& q,
                        const Flag<S>& flag, double eps) {
  const int idx = entry.expected.berwald_drift_index.value();
  const RandersMetric<S> F = make_randers(
      entry.metric, scale(q, basis_vector<S>(entry.algebra.dim(), idx)));
  const S k = flag_curvature(F, entry.algebra, conn, flag, eps);
  SweepRecord rec;
  rec.line = {{"case", case_name},
              {"q", scalar_to_json(q)},
              {"pole", vector_to_json(flag.pole)},
              {"transverse", vector_to_json(flag.transverse)},
              {"K", scalar_to_json(k)},
              {"mode", scalar_traits<S>::mode_name}};
  rec.k_approx = scalar_traits<S>::to_double(k);
  rec.exact = scalar_traits<S>::exact;
  if constexpr (scalar_traits<S>::exact) rec.exact_sign = sgn(k);
  return rec;
}

inline Flag<double> to_float_flag(const Flag<Rational>& flag) {
  Flag<double> out;
  for (const auto& x : flag.pole) out.pole.push_back(x.get_d());
  for (const auto& x : flag.transverse) out.transverse.push_back(x.get_d());
  return out;
}

}  // namespace detail

/// Computes one seeded sweep sample. Work items derive their stream from
/// (seed, index), so any execution order — including parallel — yields the
/// same records; callers emit them in index order. In exact mode a sample
/// whose pole norm is not a perfect square falls back to float arithmetic
/// and says so in its "mode" field.
template <class S>
SweepRecord sweep_sample(const catalog::CatalogEntry<S>& entry,
                         const Connection<S>& conn, std::uint64_t seed,
                         std::uint64_t index, double eps = kDefaultEpsilon) {
  if (!entry.expected.berwald_drift_index)
    throw NotBerwald("case '" + entry.name +
                     "' has no parallel drift; Berwald Randers metric does "
                     "not exist");
  Rng rng(seed, index);
  const S q = random_drift_coefficient<S>(rng);
  const Flag<S> flag = random_flag<S>(rng, entry.metric, eps);
  if constexpr (scalar_traits<S>::exact) {
    try {
      return detail::flag_record(entry.name, entry, conn, q, flag, eps);
    } catch (const NonPerfectSquare&) {
      const auto float_entry = catalog::get<double>(entry.name);
      const Connection<double> float_conn =
          levi_civita(float_entry.algebra, float_entry.metric, eps);
      return detail::flag_record(entry.name, float_entry, float_conn,
                                 q.get_d(), detail::to_float_flag(flag), eps);
    }
  } else {
    return detail::flag_record(entry.name, entry, conn, q, flag, eps);
  }
}

template <class S>
SweepSummary run_sweep(const catalog::CatalogEntry<S>& entry, int samples,
                       std::uint64_t seed, double eps,
                       std::vector<SweepRecord>* records = nullptr) {
  const Connection<S> conn = levi_civita(entry.algebra, entry.metric, eps);
  SweepSummary summary;
  summary.case_name = entry.name;
  summary.samples = samples;
  for (int i = 0; i < samples; ++i) {
    SweepRecord rec =
        sweep_sample(entry, conn, seed, static_cast<std::uint64_t>(i), eps);
    const double k = rec.k_approx;
    if (i == 0 || k < summary.min_k) {
      summary.min_k = k;
      summary.min_k_str = rec.line.at("K").is_string()
                              ? rec.line.at("K").get<std::string>()
                              : scalar_traits<double>::str(k);
    }
    if (i == 0 || k > summary.max_k) {
      summary.max_k = k;
      summary.max_k_str = rec.line.at("K").is_string()
                              ? rec.line.at("K").get<std::string>()
                              : scalar_traits<double>::str(k);
    }
    if (rec.exact) {
      ++summary.exact_records;
      if (rec.exact_sign < 0)
        ++summary.negative;
      else if (rec.exact_sign > 0)
        ++summary.positive;
      else
        ++summary.zero;
    } else {
      ++summary.float_records;
      if (k < -eps)
        ++summary.negative;
      else if (k > eps)
        ++summary.positive;
      else
        ++summary.zero;
    }
    if (records) records->push_back(std::move(rec));
  }
  return summary;
}

}  // namespace liegeo

#endif
