#pragma once

#include "coprime_census/field.hpp"
#include "coprime_census/graph.hpp"
#include "coprime_census/numeric.hpp"

#include <cstdint>

namespace coprime_census {

// Exact number of v-tuples (A_1..A_v) of monic polynomials of degree <= n
// with gcd(A_r, A_s) = 1 for every edge {r,s}. Two independent
// implementations; their agreement is the backbone of the test suite.

struct BruteForceOptions {
  // Cost model: w(q^n)^v tuples, each charged max(1, e) gcd tests. The
  // precondition check rejects anything above this before any work happens.
  uint64_t budget = 100'000'000;
  // Tuple space is sharded on the first coordinate; any worker count yields
  // the same sum.
  unsigned workers = 1;
};

// The oracle: odometer over every tuple, testing every edge via a
// precomputed pairwise-coprimality bitmatrix (or direct gcds when the matrix
// would be too large). No pruning, no reuse — deliberately independent of
// the inclusion–exclusion path below.
BigInt brute_force_count(const FieldCtx& f, const CoprimalityGraph& g,
                         int64_t n, const BruteForceOptions& opt = {});

struct InclusionExclusionOptions {
  // Raw bound (#squarefree labels of degree <= n)^e, checked in log space
  // before enumeration starts.
  uint64_t budget = 10'000'000;
  // Verification-harness fault hook: negate the stored Moebius value of the
  // polynomial x before summing. A correct implementation then disagrees
  // with the oracle, which is exactly what the self-test wants to see.
  bool fault_flip_mu = false;
};

// Signed sum over squarefree edge labelings (N_1..N_e), deg N_a <= n:
//   g(n) = sum mu(N_1)...mu(N_e) * prod_r w(q^n / q^{deg M_r})
// with M_r the lcm of the labels incident to r. Labels are walked in
// canonical edge order with running per-vertex factor sets, pruning any
// branch where some deg M_r exceeds n (every deeper term is 0).
BigInt inclusion_exclusion_count(const FieldCtx& f, const CoprimalityGraph& g,
                                 int64_t n,
                                 const InclusionExclusionOptions& opt = {});

}  // namespace coprime_census
