#include "coprime_census/field.hpp"

#include "coprime_census/enumerate.hpp"
#include "coprime_census/errors.hpp"
#include "coprime_census/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace coprime_census {
namespace {

constexpr uint64_t kTableMaxQ = 256;             // dense add/mul/inv tables below this
constexpr uint64_t kMaxExtensionQ = uint64_t{1} << 20;
constexpr uint64_t kMaxPrime = (uint64_t{1} << 31) - 1;
constexpr uint64_t kDefaultIrredBudget = uint64_t{1} << 26;

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

uint64_t inv_mod_prime(uint64_t a, uint64_t p) {
  // extended Euclid; a != 0 mod p
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
  while (newr != 0) {
    int64_t qq = r / newr;
    std::swap(t -= qq * newt, newt);
    std::swap(r -= qq * newr, newr);
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

// ---- scratch polynomials over F_p: little-endian digit vectors ----------

using PVec = std::vector<uint32_t>;

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b with b monic; in-place on a.
void pmod_monic(PVec& a, const PVec& b, uint64_t p) {
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    const uint64_t lead = a.back();
    const size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (size_t i = 0; i < db; ++i) {
        uint64_t sub = (lead * b[i]) % p;
        uint64_t cur = a[shift + i];
        a[shift + i] = static_cast<uint32_t>((cur + p - sub) % p);
      }
    }
    a.pop_back();
    ptrim(a);
    if (a.size() <= db) break;
  }
}

bool pdivides_monic(const PVec& b, PVec a, uint64_t p) {
  pmod_monic(a, b, p);
  return a.empty();
}

// Trial division by every monic polynomial of degree 1..deg/2 over F_p.
// Only used for the one-off modulus search, so brute simplicity wins.
bool is_irreducible_fp(const PVec& cand, uint64_t p) {
  const size_t deg = cand.size() - 1;
  PVec div;
  for (size_t d = 1; 2 * d <= deg; ++d) {
    div.assign(d + 1, 0);
    div[d] = 1;
    // odometer over the d non-leading digits
    for (;;) {
      if (pdivides_monic(div, cand, p)) return false;
      size_t i = 0;
      while (i < d && ++div[i] == p) div[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

// Lexicographically smallest (constant term first) monic irreducible of
// degree k over F_p. Existence is guaranteed for every (p, k).
PVec find_modulus(uint64_t p, uint32_t k) {
  PVec cand(k + 1, 0);
  cand[k] = 1;
  // Ascending lex order on (c_0, ..., c_{k-1}) = odometer on c_{k-1} first.
  for (;;) {
    if (is_irreducible_fp(cand, p)) return cand;
    uint32_t i = k;
    while (i > 0 && ++cand[i - 1] == p) cand[--i] = 0;
    if (i == 0) break;
  }
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

}  // namespace

struct FieldCtx::Impl {
  uint64_t p;
  uint32_t k;
  uint64_t q;
  std::vector<uint32_t> modulus;  // empty for k == 1

  // dense tables for small q (both k == 1 and k > 1)
  std::vector<uint32_t> add_table, mul_table, inv_table;

  mutable std::mutex irred_mu;
  mutable std::map<uint32_t, std::vector<MonicPoly>> irred;
  uint64_t irred_budget = kDefaultIrredBudget;

  void decode(uint32_t code, uint32_t* digits) const {
    for (uint32_t i = 0; i < k; ++i) {
      digits[i] = static_cast<uint32_t>(code % p);
      code = static_cast<uint32_t>(code / p);
    }
  }
  uint32_t encode(const uint32_t* digits) const {
    uint64_t code = 0;
    for (uint32_t i = k; i-- > 0;) code = code * p + digits[i];
    return static_cast<uint32_t>(code);
  }

  uint32_t add_slow(uint32_t a, uint32_t b) const {
    if (k == 1) return static_cast<uint32_t>((uint64_t{a} + b) % p);
    if (p == 2) return a ^ b;
    uint32_t da[32], db[32];
    decode(a, da);
    decode(b, db);
    for (uint32_t i = 0; i < k; ++i) da[i] = static_cast<uint32_t>((uint64_t{da[i]} + db[i]) % p);
    return encode(da);
  }

  uint32_t neg_slow(uint32_t a) const {
    if (k == 1) return a == 0 ? 0 : static_cast<uint32_t>(p - a);
    if (p == 2) return a;
    uint32_t da[32];
    decode(a, da);
    for (uint32_t i = 0; i < k; ++i) da[i] = da[i] == 0 ? 0 : static_cast<uint32_t>(p - da[i]);
    return encode(da);
  }

  uint32_t mul_slow(uint32_t a, uint32_t b) const {
    if (k == 1) return static_cast<uint32_t>((uint64_t{a} * b) % p);
    uint32_t da[32], db[32];
    decode(a, da);
    decode(b, db);
    // schoolbook product, then fold down by the monic modulus
    uint64_t prod[63] = {0};
    for (uint32_t i = 0; i < k; ++i) {
      if (da[i] == 0) continue;
      for (uint32_t j = 0; j < k; ++j) prod[i + j] += uint64_t{da[i]} * db[j] % p;
    }
    for (uint32_t i = 2 * k - 2; i >= k; --i) {
      const uint64_t lead = prod[i] % p;
      if (lead != 0) {
        for (uint32_t j = 0; j < k; ++j) {
          prod[i - k + j] += (p - lead * modulus[j] % p);
        }
      }
      if (i == k) break;
    }
    uint32_t out[32];
    for (uint32_t i = 0; i < k; ++i) out[i] = static_cast<uint32_t>(prod[i] % p);
    return encode(out);
  }

  uint32_t inv_slow(uint32_t a) const {
    if (k == 1) return static_cast<uint32_t>(inv_mod_prime(a, p));
    // extended Euclid in F_p[x] against the modulus
    PVec r0 = modulus;
    PVec r1(k, 0);
    decode(a, r1.data());
    ptrim(r1);
    PVec t0, t1{1};
    while (!r1.empty()) {
      // divide r0 by r1 (r1 not necessarily monic): normalize by lead inverse
      const uint64_t lead_inv = inv_mod_prime(r1.back(), p);
      PVec quot(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
      PVec rem = r0;
      while (rem.size() >= r1.size() && !rem.empty()) {
        const uint64_t c = rem.back() * lead_inv % p;
        const size_t shift = rem.size() - r1.size();
        quot[shift] = static_cast<uint32_t>(c);
        for (size_t i = 0; i < r1.size(); ++i) {
          uint64_t sub = c * r1[i] % p;
          rem[shift + i] = static_cast<uint32_t>((rem[shift + i] + p - sub) % p);
        }
        ptrim(rem);
      }
      // (t0, t1) <- (t1, t0 - quot * t1)
      PVec qt(quot.size() + t1.size(), 0);
      for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] == 0) continue;
        for (size_t j = 0; j < t1.size(); ++j) {
          qt[i + j] = static_cast<uint32_t>((qt[i + j] + uint64_t{quot[i]} * t1[j]) % p);
        }
      }
      ptrim(qt);
      PVec nt(std::max(t0.size(), qt.size()), 0);
      for (size_t i = 0; i < nt.size(); ++i) {
        uint64_t x = i < t0.size() ? t0[i] : 0;
        uint64_t y = i < qt.size() ? qt[i] : 0;
        nt[i] = static_cast<uint32_t>((x + p - y % p) % p);
      }
      ptrim(nt);
      t0 = std::move(t1);
      t1 = std::move(nt);
      r0 = std::move(r1);
      r1 = std::move(rem);
    }
    // r0 = gcd (a unit since the modulus is irreducible); scale t0 by 1/r0
    const uint64_t scale = inv_mod_prime(r0.empty() ? 1 : r0[0], p);
    uint32_t out[32] = {0};
    for (size_t i = 0; i < t0.size() && i < k; ++i) {
      out[i] = static_cast<uint32_t>(t0[i] * scale % p);
    }
    return encode(out);
  }
};

FieldCtx::FieldCtx(uint64_t p, uint32_t k) : impl_(std::make_shared<Impl>()) {
  if (k == 0) throw ValidationError("field: k must be >= 1");
  if (!is_prime_u64(p)) {
    throw ValidationError("field: p = " + std::to_string(p) + " is not prime");
  }
  if (k == 1) {
    if (p > kMaxPrime) throw ValidationError("field: prime too large (p < 2^31 required)");
  } else {
    // q = p^k with overflow guard
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) {
      if (q > kMaxExtensionQ / p) throw ValidationError("field: q = p^k too large (q <= 2^20 required)");
      q *= p;
    }
    if (q > kMaxExtensionQ) throw ValidationError("field: q = p^k too large (q <= 2^20 required)");
  }
  impl_->p = p;
  impl_->k = k;
  impl_->q = 1;
  for (uint32_t i = 0; i < k; ++i) impl_->q *= p;
  if (k > 1) impl_->modulus = find_modulus(p, k);

  if (impl_->q <= kTableMaxQ) {
    const uint32_t q = static_cast<uint32_t>(impl_->q);
    impl_->add_table.resize(size_t{q} * q);
    impl_->mul_table.resize(size_t{q} * q);
    impl_->inv_table.assign(q, 0);
    for (uint32_t a = 0; a < q; ++a) {
      for (uint32_t b = 0; b < q; ++b) {
        impl_->add_table[size_t{a} * q + b] = impl_->add_slow(a, b);
        impl_->mul_table[size_t{a} * q + b] = impl_->mul_slow(a, b);
      }
    }
    for (uint32_t a = 1; a < q; ++a) impl_->inv_table[a] = impl_->inv_slow(a);
  }
}

uint64_t FieldCtx::p() const noexcept { return impl_->p; }
uint32_t FieldCtx::k() const noexcept { return impl_->k; }
uint64_t FieldCtx::q() const noexcept { return impl_->q; }
const std::vector<uint32_t>& FieldCtx::modulus() const noexcept { return impl_->modulus; }

uint32_t FieldCtx::add(uint32_t a, uint32_t b) const {
  if (!impl_->add_table.empty()) return impl_->add_table[size_t{a} * impl_->q + b];
  return impl_->add_slow(a, b);
}

uint32_t FieldCtx::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldCtx::neg(uint32_t a) const { return impl_->neg_slow(a); }

uint32_t FieldCtx::mul(uint32_t a, uint32_t b) const {
  if (!impl_->mul_table.empty()) return impl_->mul_table[size_t{a} * impl_->q + b];
  return impl_->mul_slow(a, b);
}

uint32_t FieldCtx::inv(uint32_t a) const {
  if (a == 0) throw ValidationError("field: inverse of zero");
  if (!impl_->inv_table.empty()) return impl_->inv_table[a];
  return impl_->inv_slow(a);
}

const std::vector<MonicPoly>& FieldCtx::irreducibles(uint32_t d) const {
  if (d == 0) throw ValidationError("irreducibles: degree must be >= 1");
  std::lock_guard<std::mutex> lock(impl_->irred_mu);
  auto it = impl_->irred.find(d);
  if (it != impl_->irred.end()) return it->second;

  for (uint32_t dd = 1; dd <= d; ++dd) {
    if (impl_->irred.count(dd)) continue;
    // scan cost: q^dd monic candidates
    uint64_t cost = 1;
    bool over = false;
    for (uint32_t i = 0; i < dd; ++i) {
      if (cost > impl_->irred_budget / impl_->q) {
        over = true;
        break;
      }
      cost *= impl_->q;
    }
    if (over || cost > impl_->irred_budget) {
      throw BudgetError("irreducibles: scanning degree " + std::to_string(dd) +
                        " needs q^" + std::to_string(dd) +
                        " candidates, over the cache budget of " +
                        std::to_string(impl_->irred_budget));
    }
    std::vector<MonicPoly> found;
    for (const MonicPoly& cand : enumerate_monic(*this, dd, EnumerateMode::kExactly)) {
      bool irred = true;
      for (uint32_t fd = 1; 2 * fd <= dd && irred; ++fd) {
        for (const MonicPoly& f : impl_->irred.at(fd)) {
          if (poly_divides(*this, f, cand)) {
            irred = false;
            break;
          }
        }
      }
      if (irred) found.push_back(cand);
    }
    impl_->irred.emplace(dd, std::move(found));
  }
  return impl_->irred.at(d);
}

uint64_t FieldCtx::irreducible_cache_budget() const noexcept { return impl_->irred_budget; }

void FieldCtx::set_irreducible_cache_budget(uint64_t candidates) {
  impl_->irred_budget = candidates;
}

bool factor_prime_power(uint64_t n, uint64_t& p, uint32_t& k) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      k = 0;
      while (n % d == 0) {
        n /= d;
        ++k;
      }
      return n == 1;
    }
  }
  p = n;
  k = 1;
  return true;
}

}  // namespace coprime_census
