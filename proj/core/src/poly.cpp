#include "coprime_census/poly.hpp"

#include "coprime_census/errors.hpp"
#include "coprime_census/field.hpp"

#include <algorithm>
#include <string>

namespace coprime_census {
namespace {

void trim(std::vector<uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// rem <- rem mod b, b monic.
void reduce_by_monic(const FieldCtx& f, std::vector<uint32_t>& rem,
                     const std::vector<uint32_t>& b,
                     std::vector<uint32_t>* quot) {
  const size_t db = b.size() - 1;
  while (rem.size() > db) {
    const uint32_t lead = rem.back();
    const size_t shift = rem.size() - 1 - db;
    if (lead != 0) {
      if (quot) (*quot)[shift] = lead;
      for (size_t i = 0; i < db; ++i) {
        rem[shift + i] = f.sub(rem[shift + i], f.mul(lead, b[i]));
      }
    }
    rem.pop_back();
    trim(rem);
  }
}

std::string coeff_string(const FieldCtx& f, uint32_t c) {
  if (f.k() == 1) return std::to_string(c);
  std::string s = "[";
  uint32_t rest = c;
  for (uint32_t i = 0; i < f.k(); ++i) {
    if (i) s += ',';
    s += std::to_string(rest % f.p());
    rest = static_cast<uint32_t>(rest / f.p());
  }
  s += ']';
  return s;
}

}  // namespace

MonicPoly::MonicPoly(std::vector<uint32_t> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty() || c_.back() != 1) {
    throw ValidationError("monic polynomial: leading coefficient must be 1");
  }
}

MonicPoly MonicPoly::power_of_x(uint32_t d) {
  std::vector<uint32_t> c(d + 1, 0);
  c[d] = 1;
  return MonicPoly(std::move(c));
}

bool poly_less(const MonicPoly& a, const MonicPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();  // lexicographic, constant term first
}

MonicPoly poly_mul(const FieldCtx& f, const MonicPoly& a, const MonicPoly& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<uint32_t> out(ca.size() + cb.size() - 1, 0);
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (size_t j = 0; j < cb.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(ca[i], cb[j]));
    }
  }
  return MonicPoly(std::move(out));
}

MonicDivMod poly_divmod(const FieldCtx& f, const MonicPoly& a, const MonicPoly& b) {
  if (a.degree() < b.degree()) {
    throw ValidationError("poly_divmod: dividend degree below divisor degree");
  }
  std::vector<uint32_t> rem = a.coeffs();
  std::vector<uint32_t> quot(a.degree() - b.degree() + 1, 0);
  reduce_by_monic(f, rem, b.coeffs(), &quot);
  return {MonicPoly(std::move(quot)), std::move(rem)};
}

bool poly_divides(const FieldCtx& f, const MonicPoly& d, const MonicPoly& a) {
  if (d.degree() > a.degree()) return false;
  std::vector<uint32_t> rem = a.coeffs();
  reduce_by_monic(f, rem, d.coeffs(), nullptr);
  return rem.empty();
}

MonicPoly poly_div_exact(const FieldCtx& f, const MonicPoly& a, const MonicPoly& d) {
  MonicDivMod dm = poly_divmod(f, a, d);
  if (!dm.rem.empty()) throw ValidationError("poly_div_exact: not divisible");
  return dm.quot;
}

MonicPoly poly_gcd(const FieldCtx& f, const MonicPoly& a, const MonicPoly& b) {
  std::vector<uint32_t> r0 = a.coeffs();
  std::vector<uint32_t> r1 = b.coeffs();
  if (r0.size() < r1.size()) std::swap(r0, r1);
  while (!r1.empty()) {
    // scale r1 monic, then reduce r0 by it
    if (r1.back() != 1) {
      const uint32_t s = f.inv(r1.back());
      for (auto& c : r1) c = f.mul(c, s);
    }
    reduce_by_monic(f, r0, r1, nullptr);
    std::swap(r0, r1);
  }
  if (r0.back() != 1) {
    const uint32_t s = f.inv(r0.back());
    for (auto& c : r0) c = f.mul(c, s);
  }
  return MonicPoly(std::move(r0));
}

MonicPoly poly_lcm(const FieldCtx& f, const MonicPoly& a, const MonicPoly& b) {
  return poly_div_exact(f, poly_mul(f, a, b), poly_gcd(f, a, b));
}

bool coprime(const FieldCtx& f, const MonicPoly& a, const MonicPoly& b) {
  return poly_gcd(f, a, b).degree() == 0;
}

std::string poly_to_string(const FieldCtx& f, const MonicPoly& a) {
  std::string s = "F" + std::to_string(f.q()) + ": ";
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const uint32_t c = a.coeff(static_cast<size_t>(i));
    if (c == 0 && a.degree() > 0) continue;
    if (!first) s += '+';
    first = false;
    if (i == 0) {
      s += coeff_string(f, c);
    } else {
      if (c != 1) s += coeff_string(f, c) + "*";
      s += "z";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace coprime_census
