#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace coprime_census {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// ~166 mantissa bits. Every interval endpoint and error bound in this library
// is computed in this type; the density code budgets an explicit rounding
// allowance against it (see density.hpp).
using BigFloat = boost::multiprecision::cpp_bin_float_50;

BigFloat to_bigfloat(const BigInt& x);
BigFloat to_bigfloat(const BigRat& x);

// b^e for e >= 0.
BigInt ipow(const BigInt& b, uint64_t e);

// Deterministic renderings used by every serialization surface: counts as
// plain decimal, floats with 25 significant digits.
std::string decimal_string(const BigInt& x);
std::string float_string(const BigFloat& x);
std::string double_string(double x);

}  // namespace coprime_census
