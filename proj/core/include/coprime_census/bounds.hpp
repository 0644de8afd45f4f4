#pragma once

#include "coprime_census/density.hpp"
#include "coprime_census/field.hpp"
#include "coprime_census/graph.hpp"
#include "coprime_census/numeric.hpp"

#include <cstdint>

namespace coprime_census {

// Explicit envelope for the truncated part of the inclusion–exclusion sum:
//   exp(d) * 2^(2^e) * v * n^d * (q^n/(q-1))^(v-1),   d = max degree of g.
// Assembled in log space: the doubly-exponential 2^(2^e) factor overflows
// direct evaluation almost immediately, so callers that only compare bounds
// should prefer the _log variant. The plain variant exponentiates and throws
// PrecisionError once the log exceeds what the float exponent can carry
// (about 1.4e9). Requires n >= 0.
BigFloat error_bound_rk(const CoprimalityGraph& g, const FieldCtx& f,
                        int64_t n);

// Natural log of the same bound. Representable for any graph this library
// can hold; a zero bound (n = 0 with edges) has no log and throws
// ValidationError.
BigFloat error_bound_rk_log(const CoprimalityGraph& g, const FieldCtx& f,
                            int64_t n);

struct TailBoundOptions {
  // The epsilon in the q^{-(1-eps)n} decay factor; must lie in (0, 1/2).
  double eps = 0.25;
  // Width target for the upper-density factors rho_plus of the edge-deleted
  // graphs.
  BigFloat rho_width = BigFloat("1e-12");
  uint64_t subset_budget = kDefaultSubsetBudget;
};

// Explicit envelope for the label degrees beyond the truncation threshold:
//   3 * sum_j rho_plus(g with edge j removed) * (q^n/(q-1))^v * q^{-(1-eps)n}
// summed over all e edges; 0 for the empty graph. Upper interval ends of the
// rho_plus factors are used, so the result is a true upper bound.
BigFloat error_bound_t(const CoprimalityGraph& g, const FieldCtx& f, int64_t n,
                       const TailBoundOptions& opt = {});

// The n-independent factor of error_bound_t (the per-edge density sum), for
// callers evaluating the bound across a whole range of n.
BigFloat tail_density_sum(const CoprimalityGraph& g, const FieldCtx& f,
                          const TailBoundOptions& opt = {});
BigFloat error_bound_t_from_sum(const BigFloat& density_sum, const FieldCtx& f,
                                uint32_t vertices, int64_t n, double eps);

// Checks omega(a) <= 4 * (n / ln n) * ln q for a squarefree monic a of
// degree n >= 2 (natural logs). Returns the two sides; `holds` is the
// verdict. Throws ValidationError if a is not squarefree or deg < 2.
struct OmegaBoundResult {
  int omega_value;
  double bound;
  bool holds;
};
OmegaBoundResult omega_bound_check(const FieldCtx& f, const MonicPoly& a);

}  // namespace coprime_census
