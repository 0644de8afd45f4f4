#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace coprime_census {

class MonicPoly;

// Arithmetic context for F_q, q = p^k, p prime, k >= 1.
//
// Elements are integer codes in [0, q): the base-p digits of the code, least
// significant first, are the element's coordinates over F_p. For k = 1 the
// code is simply the residue mod p. Code 0 is the additive and code 1 the
// multiplicative identity in every field.
//
// For k > 1 the field is realized as F_p[x]/(m(x)), where m is the
// lexicographically smallest monic irreducible of degree k over F_p,
// coefficient tuples compared constant term first. The choice is a function
// of (p, k) alone, so codes mean the same thing in every run.
//
// A context is cheap to copy (shared immutable tables) and safe to share
// across threads; the irreducible cache behind irreducibles() is guarded by
// a mutex and its published vectors are never mutated again.
class FieldCtx {
 public:
  // Throws ValidationError if p is not prime, k == 0, or q overflows the
  // supported range (q <= 2^20 for k > 1, p < 2^31 for k == 1).
  FieldCtx(uint64_t p, uint32_t k);

  uint64_t p() const noexcept;
  uint32_t k() const noexcept;
  uint64_t q() const noexcept;

  // Coefficients of m(x), lowest degree first, length k+1; empty when k == 1.
  const std::vector<uint32_t>& modulus() const noexcept;

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // pre: a != 0

  // All monic irreducibles of degree exactly d, in enumeration order (see
  // enumerate.hpp). The first request for a degree scans the q^d monic
  // candidates by trial division and caches the result; a scan whose q^d
  // exceeds the cache budget throws BudgetError instead.
  const std::vector<MonicPoly>& irreducibles(uint32_t d) const;

  uint64_t irreducible_cache_budget() const noexcept;
  void set_irreducible_cache_budget(uint64_t candidates);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// True iff n is a prime power p^k with k >= 1; fills p and k.
bool factor_prime_power(uint64_t n, uint64_t& p, uint32_t& k);

}  // namespace coprime_census
