#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ilsolve/bench/generator.hpp"
#include "ilsolve/linsys.hpp"

namespace ilsolve::fixtures {

/// Midpoint-identity system with random radii in [0, scale/n) and random
/// interval b; rho(rad A) < scale, so scale < 1 certifies.
inline IntervalLinearSystem random_midpoint_identity(std::size_t n, double scale, std::mt19937_64& rng) {
  RealMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = bench::uniform(rng, 0.0, scale / static_cast<double>(n));
  IntervalVector b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = bench::uniform(rng, -10.0, 10.0);
    const double w = bench::uniform(rng, 0.0, 2.0);
    b[i] = Interval(m - w, m + w);
  }
  return IntervalLinearSystem::midpoint_identity(r, std::move(b));
}

struct SuiteCase {
  std::size_t n;
  double delta;
  std::size_t index;
};

/// The dominance suite: 500 instances over n in {5, 10, 20, 50} and
/// delta in {0.1, 0.01}. With n = 50 and delta = 0.1 the preconditioned
/// radius matrix has spectral radius above 1 for practically every draw, so
/// n = 50 runs with delta = 0.01 only.
inline std::vector<SuiteCase> dominance_suite() {
  struct Row {
    std::size_t n;
    double delta;
    std::size_t count;
  };
  const Row rows[] = {{5, 0.1, 80},  {5, 0.01, 80},  {10, 0.1, 80}, {10, 0.01, 80},
                      {20, 0.1, 60}, {20, 0.01, 60}, {50, 0.01, 60}};
  std::vector<SuiteCase> out;
  for (const Row& r : rows)
    for (std::size_t k = 0; k < r.count; ++k) out.push_back({r.n, r.delta, k});
  return out;
}

inline constexpr std::uint64_t kSuiteSeed = 20240917;

inline bench::GeneratedInstance suite_instance(const SuiteCase& c) {
  return bench::generate_instance(bench::GeneratorConfig{c.n, c.delta, kSuiteSeed, 1}, c.index);
}

}  // namespace ilsolve::fixtures
