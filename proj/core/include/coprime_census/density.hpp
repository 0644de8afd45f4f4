#pragma once

#include "coprime_census/field.hpp"
#include "coprime_census/graph.hpp"
#include "coprime_census/graph_poly.hpp"
#include "coprime_census/numeric.hpp"

#include <cstdint>

namespace coprime_census {

// Rigorous enclosure of an Euler product. lo <= value <= hi always; the
// truncation degree records how far the product was expanded.
struct DensityInterval {
  BigFloat lo;
  BigFloat hi;
  uint32_t truncation_degree = 0;

  BigFloat width() const { return hi - lo; }
  BigFloat mid() const { return (lo + hi) / 2; }
  bool contains(const BigFloat& x) const { return lo <= x && x <= hi; }
};

struct DensityOptions {
  // Target interval width. The truncation degree is grown until the
  // certified tail (plus rounding allowance) fits under this.
  BigFloat target_width = BigFloat("1e-12");
  // Use the all-positive polynomial (upper-density product) instead of the
  // signed one.
  bool plus = false;
  uint32_t max_truncation_degree = 4096;
  uint64_t subset_budget = kDefaultSubsetBudget;
};

// The density
//   rho = prod_{d >= 1} Q(q^{-d})^{r_q(d)},   Q = q_g (or q_g_plus),
// truncated at degree D with a certified two-sided tail bound: with
// C = sum_{i>=2} |Q_i| the neglected factor satisfies
//   |log tail| <= sum_{d>D} (q^d/d) * C q^{-2d} / (1 - C q^{-2d})
//              <= C/(1 - C q^{-2(D+1)}) * q^{-D}/(q - 1)
// (geometric majorant; requires C q^{-2(D+1)} < 1, which the code asserts
// after growing D far enough). The returned interval multiplies the partial
// product by exp(-tau)/exp(+tau) and widens each end by a fixed relative
// rounding allowance of 1e-40, far above the error that ~10^5 operations at
// ~166-bit precision can accumulate and far below any admissible target
// width (targets tighter than 1e-30 throw PrecisionError).
//
// Throws EulerFactorError (with the offending degree) if some evaluated
// factor Q(q^{-d}) is <= 0 — the density is 0 or the product is not
// absolutely controlled, and no interval is claimed.
DensityInterval density_rho(const CoprimalityGraph& g, const FieldCtx& f,
                            const DensityOptions& opt = {});

// Predictor interval rho * w(q^n)^v for the count of coprime tuples.
DensityInterval main_term(const DensityInterval& rho, const FieldCtx& f,
                          uint32_t vertices, int64_t n);

}  // namespace coprime_census
