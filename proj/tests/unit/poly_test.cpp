#include "coprime_census/enumerate.hpp"
#include "coprime_census/errors.hpp"
#include "coprime_census/field.hpp"
#include "coprime_census/poly.hpp"

#include <doctest.h>

#include <vector>

using namespace coprime_census;

TEST_CASE("monic construction and accessors") {
  CHECK(MonicPoly().is_one());
  CHECK(MonicPoly().degree() == 0);
  CHECK(MonicPoly::one() == MonicPoly({1}));
  CHECK(MonicPoly::power_of_x(0) == MonicPoly::one());
  CHECK(MonicPoly::power_of_x(3) == MonicPoly({0, 0, 0, 1}));
  const MonicPoly a({2, 0, 1});
  CHECK(a.degree() == 2);
  CHECK(a.coeff(0) == 2);
  CHECK(a.coeff(1) == 0);
  CHECK(a.coeff(2) == 1);
  CHECK(a.coeff(7) == 0);  // past the end reads as 0
  CHECK_THROWS_AS(MonicPoly(std::vector<uint32_t>{}), ValidationError);
  CHECK_THROWS_AS(MonicPoly({1, 2}), ValidationError);  // leading coeff != 1
  CHECK_THROWS_AS(MonicPoly({0, 0}), ValidationError);
}

TEST_CASE("canonical order: degree first, then constant-first lex") {
  const MonicPoly one;
  const MonicPoly x({0, 1});
  const MonicPoly x1({1, 1});
  const MonicPoly xx({0, 0, 1});
  CHECK(poly_less(one, x));
  CHECK(poly_less(x, x1));
  CHECK(poly_less(x1, xx));
  CHECK(!poly_less(x, x));
  CHECK(poly_less(MonicPoly({0, 2, 1}), MonicPoly({1, 0, 1})));  // constant decides
}

TEST_CASE("product and division round-trip over several fields") {
  for (const auto [p, k] : {std::pair<uint64_t, uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const FieldCtx f(p, k);
    int seen = 0;
    for (const MonicPoly& a : enumerate_monic(f, 3, EnumerateMode::kUpTo)) {
      for (const MonicPoly& b : enumerate_monic(f, 2, EnumerateMode::kUpTo)) {
        const MonicPoly ab = poly_mul(f, a, b);
        CHECK(ab.degree() == a.degree() + b.degree());
        CHECK(poly_divides(f, b, ab));
        CHECK(poly_div_exact(f, ab, b) == a);
        const MonicDivMod dm = poly_divmod(f, ab, b);
        CHECK(dm.quot == a);
        CHECK(dm.rem.empty());
        ++seen;
        if (seen > 2000) return;  // plenty per field
      }
    }
  }
}

TEST_CASE("divmod remainder is a genuine remainder") {
  const FieldCtx f(3, 1);
  const MonicPoly a({2, 1, 0, 1});  // x^3 + x + 2
  const MonicPoly b({1, 1});        // x + 1
  const MonicDivMod dm = poly_divmod(f, a, b);
  CHECK(static_cast<int>(dm.rem.size()) <= b.degree());
  // reconstruct: a == quot*b + rem
  MonicPoly qb = poly_mul(f, dm.quot, b);
  std::vector<uint32_t> sum = qb.coeffs();
  for (size_t i = 0; i < dm.rem.size(); ++i) sum[i] = f.add(sum[i], dm.rem[i]);
  CHECK(MonicPoly(sum) == a);
}

TEST_CASE("gcd, lcm, coprimality") {
  const FieldCtx f(2, 1);
  const MonicPoly x({0, 1});
  const MonicPoly x1({1, 1});
  const MonicPoly prod = poly_mul(f, x, x1);

  CHECK(poly_gcd(f, x, x1).is_one());
  CHECK(coprime(f, x, x1));
  CHECK(!coprime(f, prod, x));
  CHECK(poly_gcd(f, prod, x) == x);
  CHECK(poly_lcm(f, x, x1) == prod);
  CHECK(poly_lcm(f, prod, x) == prod);
  CHECK(poly_gcd(f, MonicPoly::one(), prod).is_one());

  // gcd(a,b) divides both and is maximal: check against exhaustive search.
  const FieldCtx f3(3, 1);
  for (const MonicPoly& a : enumerate_monic(f3, 3, EnumerateMode::kExactly)) {
    for (const MonicPoly& b : enumerate_monic(f3, 2, EnumerateMode::kExactly)) {
      const MonicPoly g = poly_gcd(f3, a, b);
      CHECK(poly_divides(f3, g, a));
      CHECK(poly_divides(f3, g, b));
      for (const MonicPoly& d : enumerate_monic(f3, 2, EnumerateMode::kUpTo)) {
        if (poly_divides(f3, d, a) && poly_divides(f3, d, b)) {
          CHECK(poly_divides(f3, d, g));
        }
      }
    }
  }
}

TEST_CASE("gcd is symmetric and associative with lcm") {
  const FieldCtx f(2, 2);
  for (const MonicPoly& a : enumerate_monic(f, 2, EnumerateMode::kUpTo)) {
    for (const MonicPoly& b : enumerate_monic(f, 2, EnumerateMode::kUpTo)) {
      CHECK(poly_gcd(f, a, b) == poly_gcd(f, b, a));
      // gcd * lcm == a * b for monics
      CHECK(poly_mul(f, poly_gcd(f, a, b), poly_lcm(f, a, b)) == poly_mul(f, a, b));
    }
  }
}

TEST_CASE("rendering") {
  const FieldCtx f2(2, 1);
  CHECK(poly_to_string(f2, MonicPoly({1, 1, 1})) == "F2: z^2+z+1");
  CHECK(poly_to_string(f2, MonicPoly({0, 1})) == "F2: z");
  CHECK(poly_to_string(f2, MonicPoly::one()) == "F2: 1");
  const FieldCtx f5(5, 1);
  CHECK(poly_to_string(f5, MonicPoly({3, 2, 1})) == "F5: z^2+2*z+3");
  const FieldCtx f4(2, 2);
  // element code 3 = [1,1] in base-2 digits
  CHECK(poly_to_string(f4, MonicPoly({3, 1})) == "F4: z+[1,1]");
}
