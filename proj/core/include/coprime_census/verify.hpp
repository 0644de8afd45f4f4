#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coprime_census {

// Self-contained consistency sweep, also exposed as the CLI `verify`
// command. Re-derives the library's central identities at a configurable
// scale and reports one line per check with a minimal counterexample on
// failure.
struct VerifyOptions {
  uint32_t max_vertices = 4;      // all graphs on up to this many vertices
  std::vector<uint64_t> qs = {2, 3, 4};
  int64_t max_n = 2;
  // Fault-injection self-test: flip one Moebius sign inside the
  // inclusion–exclusion backend. With this on, a healthy build must FAIL the
  // oracle-equivalence check (and the report says which tuple disagreed).
  bool inject_mu_fault = false;
  uint64_t ie_budget = 50'000'000;
  uint64_t brute_budget = 200'000'000;
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or short summary
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

// Checks run:
//   oracle-equivalence      brute force == inclusion–exclusion on every
//                           graph/q/n in scope
//   graph-poly-identities   constant/linear coefficient laws, 2^e sums,
//                           Gray-code walk == reference walk
//   multiplicative-agreement coefficient route == labeling-sum route
//   density-closed-form     two-vertex complete graph: rho == 1 - 1/q
//   empty-graph-law         g(n) == w(q^n)^v and the exact factor
//                           q^v (1 - q^{-(n+1)})^v against the literal
//                           q^{nv}/(q-1)^v normalization
//   omega-bound             factor-count envelope on exhaustive small inputs
VerifyReport run_verification(const VerifyOptions& opt = {});

}  // namespace coprime_census
