#pragma once

#include "coprime_census/counting.hpp"
#include "coprime_census/density.hpp"
#include "coprime_census/field.hpp"
#include "coprime_census/graph.hpp"
#include "coprime_census/montecarlo.hpp"
#include "coprime_census/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coprime_census {

enum class CountBackend { kAuto, kBrute, kInclusionExclusion, kMonteCarlo };

std::string backend_name(CountBackend b);

struct SweepOptions {
  // kAuto tries inclusion–exclusion, falls back to brute force, then to
  // Monte Carlo, per row; the chosen backend is recorded in the row.
  CountBackend backend = CountBackend::kAuto;
  BruteForceOptions brute;
  InclusionExclusionOptions ie;
  MonteCarloOptions mc;
  BigFloat rho_width = BigFloat("1e-12");
  double tail_eps = 0.25;
  uint64_t subset_budget = kDefaultSubsetBudget;
};

// One degree bound n. Exact rows carry g and the exact empirical density
// g/total; Monte Carlo rows carry the estimate and its standard error
// instead. A row that failed (e.g. all allowed backends over budget) has a
// non-empty `error` and no counts — the sweep itself continues.
struct CensusRow {
  int64_t n = 0;
  std::string backend;  // "brute", "ie" or "montecarlo"; "" for failed rows
  bool exact = false;
  bool has_mc = false;
  BigInt g;        // exact rows only
  BigInt total;    // w(q^n)^v
  BigRat empirical;  // exact rows only: g/total
  double mc_estimate = 0.0;
  double mc_stderr = 0.0;
  double residual = 0.0;  // |density estimate - rho midpoint|
  DensityInterval predictor;      // rho * w(q^n)^v
  DensityInterval alt_predictor;  // rho * q^{nv}/(q-1)^v; diagnostic only — the
                                  // alternative normalization misses the empty
                                  // graph identity by a factor of q^v
  BigFloat bound_rk;
  BigFloat bound_t;
  std::string error;
};

struct CensusReport {
  CoprimalityGraph graph{1, {}};
  uint64_t p = 2;
  uint32_t k = 1;
  DensityInterval rho;
  double tail_eps = 0.25;
  uint64_t mc_seed = 0;
  uint64_t mc_samples = 0;
  unsigned mc_workers = 1;
  std::vector<CensusRow> rows;
};

// Runs n = n_lo..n_hi inclusive. Per-row backend failures are recorded in
// the row and do not abort the sweep; errors establishing the density itself
// (graph-level) do propagate.
CensusReport census_sweep(const FieldCtx& f, const CoprimalityGraph& g,
                          int64_t n_lo, int64_t n_hi,
                          const SweepOptions& opt = {});

// Serialization contract: JSON and CSV are the stable surfaces.
//  - Counts and rationals are decimal strings, never JSON numbers.
//  - High-precision values are strings with 25 significant digits; doubles
//    round-trip via shortest-representation formatting.
//  - Keys are emitted in sorted order; re-serializing a parsed report
//    reproduces the input byte for byte.
// CSV columns, in order:
//   n, backend, g, total, empirical, mc_estimate, mc_stderr,
//   rho_lo, rho_hi, rho_truncation_degree, residual,
//   predictor_lo, predictor_hi, alt_predictor_lo, alt_predictor_hi,
//   bound_rk, bound_t, error
std::string report_to_json(const CensusReport& r);
std::string report_to_csv(const CensusReport& r);
CensusReport report_from_json(const std::string& text);

}  // namespace coprime_census
