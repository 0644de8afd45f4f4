// Microbenchmarks for the hot paths: enumeration, both exact counters, the
// subset walks behind the graph polynomials, density truncation and the
// sampler. Run with --benchmark_filter=... to pick a group.

#include "coprime_census/counting.hpp"
#include "coprime_census/density.hpp"
#include "coprime_census/enumerate.hpp"
#include "coprime_census/factor.hpp"
#include "coprime_census/graph_poly.hpp"
#include "coprime_census/montecarlo.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace cc = coprime_census;

namespace {

const cc::FieldCtx& f2() {
  static const cc::FieldCtx f(2, 1);
  return f;
}

void BM_EnumerateMonic(benchmark::State& state) {
  const int64_t n = state.range(0);
  uint64_t seen = 0;
  for (auto _ : state) {
    for (const cc::MonicPoly& a :
         cc::enumerate_monic(f2(), n, cc::EnumerateMode::kUpTo)) {
      benchmark::DoNotOptimize(a.degree());
      ++seen;
    }
  }
  state.SetItemsProcessed(static_cast<int64_t>(seen));
}
BENCHMARK(BM_EnumerateMonic)->Arg(8)->Arg(12)->Arg(16);

void BM_Factorize(benchmark::State& state) {
  const int64_t d = state.range(0);
  uint64_t seen = 0;
  for (auto _ : state) {
    for (const cc::MonicPoly& a :
         cc::enumerate_monic(f2(), d, cc::EnumerateMode::kExactly)) {
      benchmark::DoNotOptimize(cc::factorize(f2(), a).omega());
      ++seen;
    }
  }
  state.SetItemsProcessed(static_cast<int64_t>(seen));
}
BENCHMARK(BM_Factorize)->Arg(6)->Arg(10)->Arg(12);

void BM_BruteForce(benchmark::State& state) {
  const cc::CoprimalityGraph g = cc::complete_graph(2);
  const int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::brute_force_count(f2(), g, n));
  }
}
BENCHMARK(BM_BruteForce)->Arg(2)->Arg(4)->Arg(6);

void BM_InclusionExclusion(benchmark::State& state) {
  const cc::CoprimalityGraph g = cc::path_graph(3);
  const int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::inclusion_exclusion_count(f2(), g, n));
  }
}
BENCHMARK(BM_InclusionExclusion)->Arg(3)->Arg(5)->Arg(7);

void BM_SubsetWalkGray(benchmark::State& state) {
  const cc::CoprimalityGraph g =
      cc::complete_graph(static_cast<uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::q_g(g, cc::SubsetWalk::kGrayCode));
  }
}
BENCHMARK(BM_SubsetWalkGray)->Arg(5)->Arg(6)->Arg(7);

void BM_SubsetWalkReference(benchmark::State& state) {
  const cc::CoprimalityGraph g =
      cc::complete_graph(static_cast<uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::q_g(g, cc::SubsetWalk::kReference));
  }
}
BENCHMARK(BM_SubsetWalkReference)->Arg(5)->Arg(6)->Arg(7);

void BM_DensityRho(benchmark::State& state) {
  const cc::CoprimalityGraph g = cc::path_graph(3);
  cc::DensityOptions opt;
  opt.target_width = cc::BigFloat("1e-" + std::to_string(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::density_rho(g, f2(), opt).truncation_degree);
  }
}
BENCHMARK(BM_DensityRho)->Arg(6)->Arg(12)->Arg(24);

void BM_MonteCarlo(benchmark::State& state) {
  const cc::CoprimalityGraph g = cc::complete_graph(2);
  cc::MonteCarloOptions opt;
  opt.samples = static_cast<uint64_t>(state.range(0));
  opt.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::monte_carlo_density(f2(), g, 4, opt).hits);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10'000)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();
