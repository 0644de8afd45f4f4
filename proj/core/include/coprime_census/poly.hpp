#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coprime_census {

class FieldCtx;

// Monic polynomial over F_q. Coefficients are field element codes, lowest
// degree first; the last entry is always 1, so the zero polynomial is not
// representable and the constant 1 has degree 0. Pure data: all arithmetic
// lives in the free functions below, which take the field context explicitly.
class MonicPoly {
 public:
  MonicPoly() : c_{1} {}  // the constant polynomial 1
  explicit MonicPoly(std::vector<uint32_t> coeffs);

  static MonicPoly one() { return MonicPoly(); }
  // x^d with d >= 0.
  static MonicPoly power_of_x(uint32_t d);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_one() const noexcept { return c_.size() == 1; }
  const std::vector<uint32_t>& coeffs() const noexcept { return c_; }
  uint32_t coeff(size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

  friend bool operator==(const MonicPoly& a, const MonicPoly& b) = default;

 private:
  std::vector<uint32_t> c_;
};

// Canonical order: by degree, then lexicographically on the coefficient
// sequence (constant term first). Used for factor lists and anywhere a
// deterministic order of polynomials is promised.
bool poly_less(const MonicPoly& a, const MonicPoly& b);

MonicPoly poly_mul(const FieldCtx& f, const MonicPoly& a, const MonicPoly& b);

// Quotient and remainder of a by b; deg(rem) < deg(b), and the quotient of
// two monics is monic. The remainder is returned as a raw coefficient vector
// (it is usually not monic, and may be empty = zero).
struct MonicDivMod {
  MonicPoly quot;
  std::vector<uint32_t> rem;
};
MonicDivMod poly_divmod(const FieldCtx& f, const MonicPoly& a, const MonicPoly& b);

bool poly_divides(const FieldCtx& f, const MonicPoly& d, const MonicPoly& a);

// Exact division; throws ValidationError if d does not divide a.
MonicPoly poly_div_exact(const FieldCtx& f, const MonicPoly& a, const MonicPoly& d);

// gcd and lcm of monic polynomials are monic by convention.
MonicPoly poly_gcd(const FieldCtx& f, const MonicPoly& a, const MonicPoly& b);
MonicPoly poly_lcm(const FieldCtx& f, const MonicPoly& a, const MonicPoly& b);

bool coprime(const FieldCtx& f, const MonicPoly& a, const MonicPoly& b);

// "F4: z^2+z+[1,1]" — field tag, then terms in descending degree. Prime-field
// coefficients print as plain digits, extension-field ones as base-p digit
// vectors [d0,d1,...]; a coefficient equal to 1 is omitted on z-terms.
std::string poly_to_string(const FieldCtx& f, const MonicPoly& a);

}  // namespace coprime_census
