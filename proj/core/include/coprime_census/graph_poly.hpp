#pragma once

#include "coprime_census/graph.hpp"
#include "coprime_census/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coprime_census {

// Integer polynomial in z attached to a graph by summing +/- z^{...} over
// edge subsets. Exact coefficients; evaluation offered both over exact
// rationals and over BigFloat.
class GraphPolynomial {
 public:
  GraphPolynomial() : c_{BigInt(1)} {}
  explicit GraphPolynomial(std::vector<BigInt> coeffs);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  BigRat eval(const BigRat& z) const;
  BigFloat eval(const BigFloat& z) const;

  // Sum of |coefficients| for indices >= 2 — the tail-control constant used
  // by the density truncation bound.
  BigInt abs_coeff_sum_from_quadratic() const;

  // "1 - 2*z^2 + z^3": ascending powers, zero coefficients skipped,
  // magnitude-1 coefficients printed without the "1*".
  std::string to_string() const;

  friend bool operator==(const GraphPolynomial& a,
                         const GraphPolynomial& b) = default;

 private:
  std::vector<BigInt> c_;  // ascending, constant term first
};

// The subset sums share one engine with two interchangeable walks:
//   kReference — plain enumeration of all 2^e edge subsets, recomputing the
//                covered-vertex count from scratch for each subset;
//   kGrayCode  — visits subsets in Gray-code order, maintaining the covered
//                set incrementally (one edge toggled per step).
// Both must produce identical polynomials; tests enforce it.
enum class SubsetWalk { kReference, kGrayCode };

inline constexpr uint64_t kDefaultSubsetBudget = uint64_t{1} << 24;

// Q_G(z)      = sum_F (-1)^|F| z^{#covered(F)}        (signed)
// Q_G_plus(z) = sum_F          z^{#covered(F)}        (all-positive)
GraphPolynomial q_g(const CoprimalityGraph& g,
                    SubsetWalk walk = SubsetWalk::kGrayCode,
                    uint64_t subset_budget = kDefaultSubsetBudget);
GraphPolynomial q_g_plus(const CoprimalityGraph& g,
                         SubsetWalk walk = SubsetWalk::kGrayCode,
                         uint64_t subset_budget = kDefaultSubsetBudget);

// Same sums with vertex r (1-based) never counted in the exponent.
GraphPolynomial q_g_r(const CoprimalityGraph& g, uint32_t r,
                      SubsetWalk walk = SubsetWalk::kGrayCode,
                      uint64_t subset_budget = kDefaultSubsetBudget);
GraphPolynomial q_g_r_plus(const CoprimalityGraph& g, uint32_t r,
                           SubsetWalk walk = SubsetWalk::kGrayCode,
                           uint64_t subset_budget = kDefaultSubsetBudget);

// Pair sum for a NON-edge {r,s}: all-positive, with both r and s excluded
// from the exponent. Throws ValidationError if {r,s} is an edge of g.
GraphPolynomial q_rs(const CoprimalityGraph& g, uint32_t r, uint32_t s,
                     SubsetWalk walk = SubsetWalk::kGrayCode,
                     uint64_t subset_budget = kDefaultSubsetBudget);

// Number of vertices covered by at least one edge.
uint32_t vertex_span(const CoprimalityGraph& g);

}  // namespace coprime_census
