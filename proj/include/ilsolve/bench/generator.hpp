#pragma once

// Seeded random instances: mid(A) and mid(b) i.i.d. uniform on [-10, 10], all
// radii of A equal to delta, b a point vector.
//
// Every instance owns its own std::mt19937_64 stream seeded through SplitMix64
// from (seed, index, attempt). Uniform doubles come from the top 53 bits of
// one 64-bit draw, so instances are bit-identical across platforms and
// standard libraries.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "ilsolve/error.hpp"
#include "ilsolve/linsys.hpp"
#include "ilsolve/rounding.hpp"

namespace ilsolve::bench {

struct GeneratorConfig {
  std::size_t n = 10;
  double delta = 0.01;
  std::uint64_t seed = 1;
  std::size_t count = 1;

  void validate() const {
    if (n < 1) throw ConfigError("n must be at least 1");
    if (!(delta > 0.0) || !std::isfinite(delta)) throw ConfigError("delta must be positive and finite");
  }
};

inline constexpr std::size_t kMaxGenerationAttempts = 100;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 instance_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0) {
  return std::mt19937_64(splitmix64(splitmix64(splitmix64(seed) ^ index) ^ salt));
}

/// Uniform on [lo, hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
  return lo + (hi - lo) * u;
}

inline IntervalLinearSystem draw_raw_system(std::size_t n, double delta, std::mt19937_64& rng) {
  IntervalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double m = uniform(rng, -10.0, 10.0);
      a(i, j) = Interval(rounding::sub_down(m, delta), rounding::add_up(m, delta));
    }
  IntervalVector b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = Interval(uniform(rng, -10.0, 10.0));
  return IntervalLinearSystem(std::move(a), std::move(b));
}

struct GeneratedInstance {
  IntervalLinearSystem raw;
  CertifiedSystem prepared;
  std::size_t attempts = 1;
};

/// Instance `index` of the configuration. Redraws when the midpoint is
/// singular or the preconditioned system cannot be certified; gives up with
/// GenerationExhaustedError after kMaxGenerationAttempts draws.
inline GeneratedInstance generate_instance(const GeneratorConfig& cfg, std::size_t index) {
  cfg.validate();
  for (std::size_t attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    auto rng = instance_stream(cfg.seed, index, attempt);
    IntervalLinearSystem raw = draw_raw_system(cfg.n, cfg.delta, rng);
    try {
      CertifiedSystem prepared = prepare(raw);
      return GeneratedInstance{std::move(raw), std::move(prepared), attempt + 1};
    } catch (const SingularMidpointError&) {
    } catch (const NotCertifiedError&) {
    }
  }
  throw GenerationExhaustedError("no certifiable instance after " + std::to_string(kMaxGenerationAttempts) +
                                 " attempts (n=" + std::to_string(cfg.n) + ")");
}

}  // namespace ilsolve::bench
