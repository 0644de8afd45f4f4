#include "coprime_census/montecarlo.hpp"

#include "coprime_census/enumerate.hpp"
#include "coprime_census/errors.hpp"
#include "coprime_census/poly.hpp"

#include <cmath>
#include <thread>
#include <vector>

namespace coprime_census {

namespace {
constexpr uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
constexpr uint64_t kPolyTableMax = uint64_t{1} << 20;
}  // namespace

uint64_t SplitMix64::next() {
  state_ += kGoldenGamma;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::next_below(uint64_t bound) {
  // Lemire multiply-shift with rejection of the biased low slice
  uint64_t x = next();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < bound) {
    const uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = next();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

MonteCarloResult monte_carlo_density(const FieldCtx& f,
                                     const CoprimalityGraph& g, int64_t n,
                                     const MonteCarloOptions& opt) {
  if (opt.samples == 0) throw ValidationError("monte carlo: samples must be >= 1");
  if (opt.workers == 0) throw ValidationError("monte carlo: workers must be >= 1");
  if (n < 0) throw ValidationError("monte carlo: no polynomials of degree <= n < 0");
  const uint64_t w = w_count_u64(f.q(), n);

  // decode once when the index space is small enough to table
  std::vector<MonicPoly> table;
  if (w <= kPolyTableMax) {
    table.reserve(w);
    for (const MonicPoly& a : enumerate_monic(f, n, EnumerateMode::kUpTo)) {
      table.push_back(a);
    }
  }

  const uint32_t v = g.vertex_count();
  const auto& edges = g.edges();
  const auto run_stream = [&](uint64_t stream_seed, uint64_t quota) -> uint64_t {
    SplitMix64 rng(stream_seed);
    std::vector<MonicPoly> tuple(v);
    uint64_t hits = 0;
    for (uint64_t s = 0; s < quota; ++s) {
      for (uint32_t r = 0; r < v; ++r) {
        const uint64_t idx = rng.next_below(w);
        tuple[r] = table.empty() ? monic_from_index(f, idx) : table[idx];
      }
      bool ok = true;
      for (const auto& [a, b] : edges) {
        if (!coprime(f, tuple[a - 1], tuple[b - 1])) {
          ok = false;
          break;
        }
      }
      hits += ok ? 1 : 0;
    }
    return hits;
  };

  const unsigned workers = static_cast<unsigned>(
      std::min<uint64_t>(opt.workers, opt.samples));
  std::vector<uint64_t> partial(workers, 0);
  if (workers == 1) {
    partial[0] = run_stream(opt.seed, opt.samples);
  } else {
    std::vector<std::thread> threads;
    const uint64_t quota = opt.samples / workers, extra = opt.samples % workers;
    for (unsigned t = 0; t < workers; ++t) {
      const uint64_t stream_seed = opt.seed + uint64_t{t} * kGoldenGamma;
      const uint64_t q_t = quota + (t < extra ? 1 : 0);
      threads.emplace_back(
          [&partial, &run_stream, t, stream_seed, q_t] {
            partial[t] = run_stream(stream_seed, q_t);
          });
    }
    for (auto& th : threads) th.join();
  }

  MonteCarloResult res;
  res.samples = opt.samples;
  res.seed = opt.seed;
  res.workers = workers;
  for (uint64_t h : partial) res.hits += h;
  const double p = static_cast<double>(res.hits) / static_cast<double>(res.samples);
  res.estimate = p;
  res.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(res.samples));
  return res;
}

}  // namespace coprime_census
