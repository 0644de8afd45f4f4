#pragma once

#include "coprime_census/field.hpp"
#include "coprime_census/graph.hpp"
#include "coprime_census/numeric.hpp"

#include <cstdint>

namespace coprime_census {

// splitmix64: the output stage is a 64-bit finalizer over a counter that
// advances by the golden-gamma constant. Small, fast, and fully specified
// here so that every recorded (seed, samples, workers) triple replays to
// identical output on any platform.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next();

  // Uniform draw from [0, bound), bound >= 1, by rejection on the top
  // 64-bit multiply (no modulo bias).
  uint64_t next_below(uint64_t bound);

 private:
  uint64_t state_;
};

struct MonteCarloOptions {
  uint64_t samples = 100'000;
  uint64_t seed = 1;
  // Worker w (0-based) draws from stream seed + w * 0x9E3779B97F4A7C15 and
  // takes samples/workers draws (+1 for the first samples%workers workers).
  // The result is a pure function of (seed, samples, workers).
  unsigned workers = 1;
};

struct MonteCarloResult {
  uint64_t hits = 0;
  uint64_t samples = 0;
  uint64_t seed = 0;
  unsigned workers = 1;
  double estimate = 0.0;        // hits / samples
  double standard_error = 0.0;  // sqrt(p(1-p)/samples)
};

// Samples uniform tuples of monic polynomials of degree <= n and counts how
// many satisfy every edge's coprimality constraint. Estimates the empirical
// density g(n)/w(q^n)^v, not the asymptotic density.
MonteCarloResult monte_carlo_density(const FieldCtx& f,
                                     const CoprimalityGraph& g, int64_t n,
                                     const MonteCarloOptions& opt = {});

}  // namespace coprime_census
