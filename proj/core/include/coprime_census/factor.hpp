#pragma once

#include "coprime_census/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace coprime_census {

class FieldCtx;

// Factorization into monic irreducibles with multiplicities, sorted by
// degree and then by coefficient sequence (poly_less). The product of
// factor^multiplicity recovers the input exactly.
struct Factorization {
  std::vector<std::pair<MonicPoly, int>> factors;

  bool squarefree() const;
  int omega() const { return static_cast<int>(factors.size()); }
};

// Trial division against the cached irreducibles of degree <= deg(a)/2;
// whatever survives is itself irreducible. Cost is driven by the irreducible
// cache fills, so the FieldCtx cache budget applies.
Factorization factorize(const FieldCtx& f, const MonicPoly& a);

// Moebius value: 0 unless a is squarefree, else (-1)^omega(a). mobius(1) = 1.
int mobius(const FieldCtx& f, const MonicPoly& a);

// Number of distinct monic irreducible factors. omega(1) = 0.
int omega(const FieldCtx& f, const MonicPoly& a);

// gcd(a, a') test — no factorization needed. Cross-checked against
// factorize() in the test suite.
bool is_squarefree(const FieldCtx& f, const MonicPoly& a);

}  // namespace coprime_census
