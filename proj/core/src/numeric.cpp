#include "coprime_census/numeric.hpp"

#include <charconv>
#include <ios>
#include <sstream>

namespace coprime_census {

BigFloat to_bigfloat(const BigInt& x) { return BigFloat(x); }

BigFloat to_bigfloat(const BigRat& x) {
  return BigFloat(boost::multiprecision::numerator(x)) /
         BigFloat(boost::multiprecision::denominator(x));
}

BigInt ipow(const BigInt& b, uint64_t e) {
  BigInt acc = 1;
  BigInt base = b;
  while (e != 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string decimal_string(const BigInt& x) { return x.str(); }

std::string float_string(const BigFloat& x) {
  return x.str(25, std::ios_base::scientific);
}

std::string double_string(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace coprime_census
