#include "coprime_census/factor.hpp"

#include "coprime_census/errors.hpp"
#include "coprime_census/field.hpp"

#include <algorithm>

namespace coprime_census {

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const auto& fm) { return fm.second == 1; });
}

Factorization factorize(const FieldCtx& f, const MonicPoly& a) {
  Factorization out;
  MonicPoly rest = a;
  const int half = a.degree() / 2;
  for (int d = 1; d <= half && rest.degree() > 0; ++d) {
    if (d > rest.degree() / 2) break;  // remaining cofactor is irreducible
    for (const MonicPoly& p : f.irreducibles(static_cast<uint32_t>(d))) {
      if (p.degree() > rest.degree()) break;
      int mult = 0;
      while (poly_divides(f, p, rest)) {
        rest = poly_div_exact(f, rest, p);
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(p, mult);
      if (rest.degree() == 0) break;
    }
  }
  if (rest.degree() > 0) out.factors.emplace_back(rest, 1);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

int mobius(const FieldCtx& f, const MonicPoly& a) {
  const Factorization fac = factorize(f, a);
  if (!fac.squarefree()) return 0;
  return fac.omega() % 2 == 0 ? 1 : -1;
}

int omega(const FieldCtx& f, const MonicPoly& a) {
  return factorize(f, a).omega();
}

bool is_squarefree(const FieldCtx& f, const MonicPoly& a) {
  if (a.degree() == 0) return true;
  // squarefree <=> gcd(a, a') = 1, except in characteristic p the derivative
  // can vanish identically (a a p-th power), which is never squarefree.
  std::vector<uint32_t> deriv(a.coeffs().size() - 1, 0);
  bool zero = true;
  for (size_t i = 1; i < a.coeffs().size(); ++i) {
    const uint32_t scale = static_cast<uint32_t>(i % f.p());
    uint32_t c = 0;
    // i * a_i computed as a repeated sum collapsed to a scalar multiple mod p
    if (scale != 0 && a.coeffs()[i] != 0) {
      if (f.k() == 1) {
        c = static_cast<uint32_t>((uint64_t{a.coeffs()[i]} * scale) % f.p());
      } else {
        for (uint32_t t = 0; t < scale; ++t) c = f.add(c, a.coeffs()[i]);
      }
    }
    deriv[i - 1] = c;
    if (c != 0) zero = false;
  }
  if (zero) return false;
  // normalize the derivative monic and take the gcd
  while (!deriv.empty() && deriv.back() == 0) deriv.pop_back();
  const uint32_t s = f.inv(deriv.back());
  for (auto& c : deriv) c = f.mul(c, s);
  return poly_gcd(f, a, MonicPoly(std::move(deriv))).degree() == 0;
}

}  // namespace coprime_census
