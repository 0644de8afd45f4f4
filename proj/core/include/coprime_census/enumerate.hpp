#pragma once

#include "coprime_census/field.hpp"
#include "coprime_census/numeric.hpp"
#include "coprime_census/poly.hpp"

#include <cstdint>
#include <vector>

namespace coprime_census {

// Number of monic polynomials of degree <= m: w(q^m) = (q^{m+1}-1)/(q-1),
// and 0 for m < 0.
BigInt w_count(uint64_t q, int64_t m);

// Same, but for index arithmetic; throws BudgetError when w(q^m) >= 2^62.
uint64_t w_count_u64(uint64_t q, int64_t m);

// Number of monic irreducibles of degree n >= 1:
// r_q(n) = (1/n) * sum_{d | n} mu(n/d) q^d.
BigInt count_irreducibles(uint64_t q, uint32_t n);

// Moebius function on positive integers (trial-division factorization).
int mobius_int(uint64_t n);

// Monic polynomials are enumerated degree-major: all of degree 0, then 1, ...
// Within degree d, the d non-leading coefficients run through a base-q
// counter (the constant coefficient is the least significant digit), so the
// polynomial at global index w(q^{d-1}) + m has coefficient codes equal to
// the base-q digits of m. Successor costs amortized O(1).
MonicPoly monic_from_index(const FieldCtx& f, uint64_t index);
uint64_t monic_to_index(const FieldCtx& f, const MonicPoly& a);

// Half-open slice [lo, hi) of the global enumeration order. Ranges split
// into contiguous sub-ranges for deterministic work sharding: iteration
// order never depends on the number of parts.
class MonicRange {
 public:
  class Iterator {
   public:
    const MonicPoly& operator*() const { return cur_; }
    Iterator& operator++();
    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    friend class MonicRange;
    Iterator(const FieldCtx* f, uint64_t index, uint64_t end);
    const FieldCtx* f_;
    uint64_t index_;
    MonicPoly cur_;
  };

  MonicRange(const FieldCtx& f, uint64_t lo, uint64_t hi);

  uint64_t size() const noexcept { return hi_ - lo_; }
  uint64_t lo() const noexcept { return lo_; }
  uint64_t hi() const noexcept { return hi_; }

  // At most `parts` non-empty contiguous pieces covering this range in order.
  std::vector<MonicRange> split(unsigned parts) const;

  Iterator begin() const;
  Iterator end() const;

 private:
  const FieldCtx* f_;
  uint64_t lo_, hi_;
};

enum class EnumerateMode {
  kExactly,  // degree == n
  kUpTo,     // degree <= n
};

// Stream of monic polynomials of degree exactly / at most n; empty for n < 0.
MonicRange enumerate_monic(const FieldCtx& f, int64_t n, EnumerateMode mode);

// Convenience alias for the cached per-degree irreducible scan.
inline const std::vector<MonicPoly>& enumerate_irreducibles(const FieldCtx& f,
                                                            uint32_t d) {
  return f.irreducibles(d);
}

}  // namespace coprime_census
