#include "coprime_census/enumerate.hpp"

#include "coprime_census/errors.hpp"

#include <string>

namespace coprime_census {
namespace {

constexpr uint64_t kIndexCap = uint64_t{1} << 62;

// q^e as a checked uint64, throwing past the index cap.
uint64_t qpow_checked(uint64_t q, uint32_t e) {
  uint64_t x = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (x > kIndexCap / q) throw BudgetError("enumeration index space exceeds 2^62");
    x *= q;
  }
  return x;
}

}  // namespace

BigInt w_count(uint64_t q, int64_t m) {
  if (m < 0) return 0;
  return (ipow(BigInt(q), static_cast<uint64_t>(m) + 1) - 1) / (BigInt(q) - 1);
}

uint64_t w_count_u64(uint64_t q, int64_t m) {
  if (m < 0) return 0;
  uint64_t acc = 0;
  uint64_t term = 1;  // q^0
  for (int64_t d = 0; d <= m; ++d) {
    if (acc > kIndexCap - term) throw BudgetError("w(q^n) exceeds 2^62");
    acc += term;
    if (d < m) {
      if (term > kIndexCap / q) throw BudgetError("w(q^n) exceeds 2^62");
      term *= q;
    }
  }
  return acc;
}

BigInt count_irreducibles(uint64_t q, uint32_t n) {
  if (n == 0) throw ValidationError("count_irreducibles: degree must be >= 1");
  BigInt sum = 0;
  for (uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    sum += BigInt(mobius_int(n / d)) * ipow(BigInt(q), d);
  }
  BigInt r = sum / n;
  if (r * n != sum) throw std::logic_error("count_irreducibles: sum not divisible by n");
  return r;
}

int mobius_int(uint64_t n) {
  if (n == 0) throw ValidationError("mobius_int: n must be >= 1");
  int parity = 0;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      ++parity;
    }
  }
  if (n > 1) ++parity;
  return parity % 2 == 0 ? 1 : -1;
}

MonicPoly monic_from_index(const FieldCtx& f, uint64_t index) {
  const uint64_t q = f.q();
  // find the degree block containing the index
  uint32_t d = 0;
  uint64_t block_lo = 0;
  uint64_t block_size = 1;
  while (index >= block_lo + block_size) {
    block_lo += block_size;
    if (block_size > kIndexCap / q) throw BudgetError("enumeration index exceeds 2^62");
    block_size *= q;
    ++d;
  }
  uint64_t m = index - block_lo;
  std::vector<uint32_t> c(d + 1, 0);
  c[d] = 1;
  for (uint32_t i = 0; i < d; ++i) {
    c[i] = static_cast<uint32_t>(m % q);
    m /= q;
  }
  return MonicPoly(std::move(c));
}

uint64_t monic_to_index(const FieldCtx& f, const MonicPoly& a) {
  const uint64_t q = f.q();
  const uint32_t d = static_cast<uint32_t>(a.degree());
  uint64_t m = 0;
  for (uint32_t i = d; i-- > 0;) m = m * q + a.coeffs()[i];
  return w_count_u64(q, static_cast<int64_t>(d) - 1) + m;
}

MonicRange::Iterator::Iterator(const FieldCtx* f, uint64_t index, uint64_t end)
    : f_(f), index_(index) {
  if (index_ < end) cur_ = monic_from_index(*f_, index_);
}

MonicRange::Iterator& MonicRange::Iterator::operator++() {
  ++index_;
  // base-q odometer over the non-leading coefficients; full carry rolls
  // over into the next degree block
  const uint64_t q = f_->q();
  std::vector<uint32_t> c = cur_.coeffs();
  size_t i = 0;
  const size_t d = c.size() - 1;
  while (i < d) {
    if (uint64_t{c[i]} + 1 < q) {
      ++c[i];
      cur_ = MonicPoly(std::move(c));
      return *this;
    }
    c[i++] = 0;
  }
  cur_ = MonicPoly::power_of_x(static_cast<uint32_t>(d + 1));
  return *this;
}

MonicRange::MonicRange(const FieldCtx& f, uint64_t lo, uint64_t hi)
    : f_(&f), lo_(lo), hi_(hi < lo ? lo : hi) {}

std::vector<MonicRange> MonicRange::split(unsigned parts) const {
  if (parts == 0) parts = 1;
  std::vector<MonicRange> out;
  const uint64_t total = size();
  const uint64_t chunk = total / parts;
  const uint64_t extra = total % parts;
  uint64_t at = lo_;
  for (unsigned i = 0; i < parts && at < hi_; ++i) {
    const uint64_t len = chunk + (i < extra ? 1 : 0);
    if (len == 0) continue;
    out.emplace_back(*f_, at, at + len);
    at += len;
  }
  return out;
}

MonicRange::Iterator MonicRange::begin() const { return Iterator(f_, lo_, hi_); }
MonicRange::Iterator MonicRange::end() const { return Iterator(f_, hi_, hi_); }

MonicRange enumerate_monic(const FieldCtx& f, int64_t n, EnumerateMode mode) {
  if (n < 0) return MonicRange(f, 0, 0);
  const uint64_t hi = w_count_u64(f.q(), n);
  const uint64_t lo = mode == EnumerateMode::kUpTo ? 0 : w_count_u64(f.q(), n - 1);
  return MonicRange(f, lo, hi);
}

}  // namespace coprime_census
