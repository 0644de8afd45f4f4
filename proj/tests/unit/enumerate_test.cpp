#include "coprime_census/enumerate.hpp"
#include "coprime_census/errors.hpp"
#include "coprime_census/field.hpp"
#include "coprime_census/numeric.hpp"
#include "coprime_census/poly.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace coprime_census;

TEST_CASE("w_count closed form") {
  CHECK(w_count(2, -1) == 0);
  CHECK(w_count(2, -5) == 0);
  CHECK(w_count(2, 0) == 1);
  CHECK(w_count(2, 1) == 3);
  CHECK(w_count(2, 2) == 7);
  CHECK(w_count(3, 2) == 13);
  CHECK(w_count(5, 3) == 156);
  // (q^{m+1}-1)/(q-1) == sum of q^i, cross-checked big
  BigInt s = 0;
  for (int i = 0; i <= 40; ++i) s += ipow(BigInt(7), static_cast<uint64_t>(i));
  CHECK(w_count(7, 40) == s);
}

TEST_CASE("w_count_u64 caps the index space at 2^62") {
  CHECK(w_count_u64(2, 61) == (uint64_t{1} << 62) - 1);
  CHECK_THROWS_AS(w_count_u64(2, 62), BudgetError);
  CHECK_THROWS_AS(w_count_u64(3, 39), BudgetError);
  CHECK(w_count_u64(3, 38) == ((ipow(BigInt(3), 39) - 1) / 2).convert_to<uint64_t>());
}

TEST_CASE("irreducible counts match the necklace formula and enumeration") {
  // r_2: 2, 1, 2, 3, 6, 9, 18, 30;  r_3: 3, 3, 8, 18, 48, 116
  const int r2[] = {2, 1, 2, 3, 6, 9, 18, 30};
  for (uint32_t d = 1; d <= 8; ++d) CHECK(count_irreducibles(2, d) == r2[d - 1]);
  const int r3[] = {3, 3, 8, 18, 48, 116};
  for (uint32_t d = 1; d <= 6; ++d) CHECK(count_irreducibles(3, d) == r3[d - 1]);
  CHECK(count_irreducibles(4, 3) == 20);

  for (const auto [p, k] : {std::pair<uint64_t, uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
    const FieldCtx f(p, k);
    for (uint32_t d = 1; d <= (f.q() == 2 ? 9u : 5u); ++d) {
      CHECK(count_irreducibles(f.q(), d) == f.irreducibles(d).size());
    }
  }
}

TEST_CASE("degree-weighted irreducible counts sum to q^n") {
  for (uint64_t q : {2, 3, 4, 5, 9}) {
    for (uint32_t n = 1; n <= 12; ++n) {
      BigInt s = 0;
      for (uint32_t d = 1; d <= n; ++d) {
        if (n % d == 0) s += BigInt(d) * count_irreducibles(q, d);
      }
      CHECK(s == ipow(BigInt(q), n));
    }
  }
}

TEST_CASE("r_q(n) <= q^n / n") {
  for (uint64_t q : {2, 3, 4, 7}) {
    for (uint32_t n = 1; n <= 14; ++n) {
      CHECK(count_irreducibles(q, n) * n <= ipow(BigInt(q), n));
    }
  }
}

TEST_CASE("mobius on integers") {
  const int expect[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (uint64_t n = 1; n <= 12; ++n) CHECK(mobius_int(n) == expect[n - 1]);
  CHECK(mobius_int(2 * 3 * 5 * 7) == 1);
  CHECK(mobius_int(4 * 9) == 0);
}

TEST_CASE("index codec round-trips and respects the documented order") {
  for (const auto [p, k] : {std::pair<uint64_t, uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
    const FieldCtx f(p, k);
    const uint64_t limit = w_count_u64(f.q(), 4);
    MonicPoly prev = monic_from_index(f, 0);
    CHECK(prev == MonicPoly::one());
    for (uint64_t i = 1; i < limit; ++i) {
      const MonicPoly cur = monic_from_index(f, i);
      CHECK(monic_to_index(f, cur) == i);
      CHECK(prev.degree() <= cur.degree());  // degree-major
      prev = cur;
    }
    // Degree blocks start exactly at w(q^{d-1}).
    for (int d = 0; d <= 4; ++d) {
      CHECK(monic_from_index(f, w_count_u64(f.q(), d - 1)) == MonicPoly::power_of_x(static_cast<uint32_t>(d)));
    }
  }
}

TEST_CASE("enumeration is complete and duplicate-free") {
  for (const auto [p, k] : {std::pair<uint64_t, uint32_t>{2, 1}, {5, 1}, {2, 3}}) {
    const FieldCtx f(p, k);
    std::set<std::vector<uint32_t>> seen;
    uint64_t count = 0;
    for (const MonicPoly& a : enumerate_monic(f, 3, EnumerateMode::kUpTo)) {
      CHECK(a.degree() <= 3);
      seen.insert(a.coeffs());
      ++count;
    }
    CHECK(count == w_count_u64(f.q(), 3));
    CHECK(seen.size() == count);

    count = 0;
    for (const MonicPoly& a : enumerate_monic(f, 3, EnumerateMode::kExactly)) {
      CHECK(a.degree() == 3);
      ++count;
    }
    CHECK(count == w_count_u64(f.q(), 3) - w_count_u64(f.q(), 2));
  }
}

TEST_CASE("empty enumerations") {
  const FieldCtx f(2, 1);
  CHECK(enumerate_monic(f, -1, EnumerateMode::kUpTo).size() == 0);
  CHECK(enumerate_monic(f, -3, EnumerateMode::kExactly).size() == 0);
  int visits = 0;
  for (const MonicPoly& a : enumerate_monic(f, -1, EnumerateMode::kUpTo)) {
    (void)a;
    ++visits;
  }
  CHECK(visits == 0);
}

TEST_CASE("range splitting covers the same sequence in the same order") {
  const FieldCtx f(3, 1);
  const MonicRange whole = enumerate_monic(f, 4, EnumerateMode::kUpTo);
  std::vector<MonicPoly> reference;
  for (const MonicPoly& a : whole) reference.push_back(a);

  for (unsigned parts : {1u, 2u, 3u, 7u, 100u, 1000u}) {
    std::vector<MonicPoly> glued;
    uint64_t expected_lo = whole.lo();
    for (const MonicRange& piece : whole.split(parts)) {
      CHECK(piece.size() > 0);
      CHECK(piece.lo() == expected_lo);  // contiguous, in order
      expected_lo = piece.hi();
      for (const MonicPoly& a : piece) glued.push_back(a);
    }
    CHECK(expected_lo == whole.hi());
    CHECK(glued == reference);
  }
}
