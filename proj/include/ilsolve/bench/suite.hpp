#pragma once

// Benchmark suite over seeded random instances: runs the selected methods on
// each preconditioned instance, times them, measures tightness against the
// Ning-Kearfott hull and spot-checks containment of sampled point solutions.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ilsolve/bench/generator.hpp"
#include "ilsolve/classic.hpp"
#include "ilsolve/error.hpp"
#include "ilsolve/magnitude.hpp"
#include "ilsolve/verified_solve.hpp"

namespace ilsolve::bench {

enum class Method { KrawczykLimit, GsIterative, GsLimit, Magnitude, NkHull };

inline constexpr Method kAllMethods[] = {Method::KrawczykLimit, Method::GsIterative, Method::GsLimit,
                                         Method::Magnitude, Method::NkHull};

inline std::string_view label(Method m) {
  switch (m) {
    case Method::KrawczykLimit: return "krawczyk_limit";
    case Method::GsIterative: return "gs_iterative";
    case Method::GsLimit: return "gs_limit";
    case Method::Magnitude: return "magnitude";
    case Method::NkHull: return "nk_hull";
  }
  return "?";
}

/// Accepts the labels above; "magnitude_gamma0" is an alias of gs_limit.
inline Method parse_method(std::string_view s) {
  if (s == "magnitude_gamma0") return Method::GsLimit;
  for (Method m : kAllMethods)
    if (label(m) == s) return m;
  throw ConfigError("unknown method '" + std::string(s) + "'");
}

struct MethodOptions {
  BoundMode mode = BoundMode::Cheap;  // bound on d used by the magnitude method
  GaussSeidelOptions gauss_seidel{};
};

struct MethodOutput {
  IntervalVector enclosure;
  std::size_t iterations = 0;
};

/// One method on a certified system. gs_limit is computed as the magnitude
/// method with gamma = 0, which yields the same enclosure.
inline MethodOutput run_method(Method m, const CertifiedSystem& sys, const MethodOptions& opts = {}) {
  switch (m) {
    case Method::KrawczykLimit: return {krawczyk_limit(sys, enclose_u(sys)), 0};
    case Method::GsIterative: {
      IterationResult r = gauss_seidel_iterative(sys, opts.gauss_seidel);
      return {std::move(r.enclosure), r.iterations};
    }
    case Method::GsLimit: return {magnitude_enclosure_gamma0(sys), 0};
    case Method::Magnitude: return {magnitude_enclosure(sys, opts.mode), 0};
    case Method::NkHull: return {ning_kearfott_hull(sys, assemble_ud(sys, BoundMode::Exact)), 0};
  }
  throw ConfigError("unknown method");
}

/// Sum of enclosure radii over sum of hull radii. Reporting only, plain
/// floating point.
inline double tightness_ratio(const IntervalVector& x, const IntervalVector& hull) {
  detail::require_dims(x.size() == hull.size(), "tightness_ratio");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i].hi() - x[i].lo()) / 2;
    den += (hull[i].hi() - hull[i].lo()) / 2;
  }
  if (!(den > 0.0)) throw DegenerateHullError("hull radii sum to zero");
  return num / den;
}

struct EnclosureReport {
  Method method = Method::Magnitude;
  IntervalVector enclosure;
  std::optional<double> tightness;  // empty when the hull is unavailable or degenerate
  double wall_time = 0.0;           // seconds, median of repetitions
  std::size_t iterations = 0;
};

/// Runs `m` `repeats` times on a monotonic clock and keeps the median time.
inline EnclosureReport timed_run(Method m, const CertifiedSystem& sys, const MethodOptions& opts,
                                 std::size_t repeats = 3) {
  using clock = std::chrono::steady_clock;
  repeats = std::max<std::size_t>(repeats, 1);
  std::vector<double> times;
  MethodOutput out;
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto t0 = clock::now();
    out = run_method(m, sys, opts);
    times.push_back(std::chrono::duration<double>(clock::now() - t0).count());
  }
  std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
  return EnclosureReport{m, std::move(out.enclosure), std::nullopt, times[times.size() / 2], out.iterations};
}

/// A point system (A, b) drawn uniformly from the interval data.
inline std::pair<RealMatrix, RealVector> sample_point_system(const IntervalLinearSystem& sys, std::mt19937_64& rng) {
  const std::size_t n = sys.size();
  RealMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Interval& e = sys.A()(i, j);
      a(i, j) = std::clamp(uniform(rng, e.lo(), e.hi()), e.lo(), e.hi());
    }
  RealVector b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = std::clamp(uniform(rng, sys.b()[i].lo(), sys.b()[i].hi()),
                                                         sys.b()[i].lo(), sys.b()[i].hi());
  return {std::move(a), std::move(b)};
}

/// Number of sampled point solutions of `raw` whose verified enclosure is not
/// inside `x`. Samples whose point system cannot be verified are skipped.
inline std::size_t spot_check_escapes(const IntervalLinearSystem& raw, const IntervalVector& x,
                                      std::mt19937_64& rng, std::size_t samples = 5) {
  std::size_t escapes = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    auto [a, b] = sample_point_system(raw, rng);
    try {
      if (!subset(verified_point_solve(a, b), x)) ++escapes;
    } catch (const VerificationFailedError&) {
    }
  }
  return escapes;
}

struct SuiteOptions {
  MethodOptions method{};
  std::size_t repeats = 3;
  std::size_t spot_checks = 5;
};

/// Aggregate of one method over the instances of one (n, delta) row. Means
/// are taken over successful instances; tightness over those with a usable hull.
struct RowStats {
  std::size_t n = 0;
  double delta = 0.0;
  Method method = Method::Magnitude;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double mean_time = std::numeric_limits<double>::quiet_NaN();
  double mean_tightness = std::numeric_limits<double>::quiet_NaN();
};

/// Salt of the spot-check streams, kept apart from generation attempts.
inline constexpr std::uint64_t kSpotCheckSalt = 0x5eed5eed5eed5eedULL;

/// One row of the benchmark, one RowStats per requested method in the given
/// order; empty when cfg.count == 0. Generation, certification, method and
/// spot-check failures are counted per instance and never abort the row.
inline std::vector<RowStats> run_suite(const GeneratorConfig& cfg, const std::vector<Method>& methods,
                                       const SuiteOptions& opts = {}) {
  cfg.validate();
  if (cfg.count == 0) return {};
  struct Acc {
    double time = 0.0, tight = 0.0;
    std::size_t ok = 0, tight_count = 0, failures = 0;
  };
  std::vector<Acc> acc(methods.size());

  for (std::size_t k = 0; k < cfg.count; ++k) {
    std::optional<GeneratedInstance> inst;
    try {
      inst.emplace(generate_instance(cfg, k));
    } catch (const Error&) {
      for (Acc& a : acc) ++a.failures;
      continue;
    }
    const CertifiedSystem& sys = inst->prepared;

    std::optional<IntervalVector> hull;
    try {
      hull = run_method(Method::NkHull, sys).enclosure;
    } catch (const Error&) {
    }

    for (std::size_t m = 0; m < methods.size(); ++m) {
      try {
        EnclosureReport rep = timed_run(methods[m], sys, opts.method, opts.repeats);
        auto rng = instance_stream(cfg.seed ^ kSpotCheckSalt, k, static_cast<std::uint64_t>(methods[m]));
        if (spot_check_escapes(inst->raw, rep.enclosure, rng, opts.spot_checks) > 0) {
          ++acc[m].failures;
          continue;
        }
        acc[m].time += rep.wall_time;
        ++acc[m].ok;
        if (hull) {
          try {
            acc[m].tight += tightness_ratio(rep.enclosure, *hull);
            ++acc[m].tight_count;
          } catch (const DegenerateHullError&) {
          }
        }
      } catch (const Error&) {
        ++acc[m].failures;
      }
    }
  }

  std::vector<RowStats> rows;
  for (std::size_t m = 0; m < methods.size(); ++m) {
    RowStats r;
    r.n = cfg.n;
    r.delta = cfg.delta;
    r.method = methods[m];
    r.instances = cfg.count;
    r.failures = acc[m].failures;
    if (acc[m].ok > 0) r.mean_time = acc[m].time / static_cast<double>(acc[m].ok);
    if (acc[m].tight_count > 0) r.mean_tightness = acc[m].tight / static_cast<double>(acc[m].tight_count);
    rows.push_back(r);
  }
  return rows;
}

/// The (n, delta) rows of the published timing and tightness tables.
struct RowSpec {
  std::size_t n;
  double delta;
};

inline const std::vector<RowSpec>& paper_rows() {
  static const std::vector<RowSpec> rows = {
      {5, 1.0},     {5, 0.1},    {5, 0.01},   {10, 0.1},    {10, 0.01},
      {15, 0.1},    {15, 0.01},  {20, 0.1},   {20, 0.01},   {30, 0.01},
      {30, 0.001},  {50, 0.01},  {50, 0.001}, {100, 0.001}, {100, 0.0001},
  };
  return rows;
}

}  // namespace ilsolve::bench
