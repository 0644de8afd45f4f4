#include "coprime_census/density.hpp"

#include "coprime_census/enumerate.hpp"
#include "coprime_census/errors.hpp"
#include "coprime_census/field.hpp"

#include <string>

namespace coprime_census {
namespace {

// Fixed relative rounding allowance applied to both interval ends. The
// truncation loop runs a few thousand BigFloat operations at ~166-bit
// precision, so the accumulated relative error is far below 1e-40; targets
// must stay well above it for the enclosure to be honest.
const char* kRoundingAllowance = "1e-40";
const char* kMinTargetWidth = "1e-30";

BigFloat pow_bigint(const BigFloat& base, BigInt exp) {
  BigFloat acc = 1;
  BigFloat b = base;
  while (exp > 0) {
    if ((exp & 1) != 0) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

}  // namespace

DensityInterval density_rho(const CoprimalityGraph& g, const FieldCtx& f,
                            const DensityOptions& opt) {
  if (opt.target_width <= 0) {
    throw ValidationError("density: target width must be positive");
  }
  if (opt.target_width < BigFloat(kMinTargetWidth)) {
    throw PrecisionError("density: target width below " +
                         std::string(kMinTargetWidth) +
                         " exceeds the working precision budget");
  }
  const GraphPolynomial poly =
      opt.plus ? q_g_plus(g, SubsetWalk::kGrayCode, opt.subset_budget)
               : q_g(g, SubsetWalk::kGrayCode, opt.subset_budget);
  // both variants have constant term 1 and no linear term; the tail bound
  // below silently relies on that
  if (poly.coeff(0) != 1 || poly.coeff(1) != 0) {
    throw std::logic_error("density: unexpected low-order coefficients");
  }

  const BigFloat c_tail = to_bigfloat(poly.abs_coeff_sum_from_quadratic());
  if (c_tail == 0) {
    // no quadratic-or-higher mass: every factor is exactly 1
    return DensityInterval{BigFloat(1), BigFloat(1), 0};
  }

  const BigFloat q = BigFloat(f.q());
  const BigFloat allowance = BigFloat(kRoundingAllowance);
  BigFloat partial = 1;
  BigFloat qd = 1;  // q^d
  for (uint32_t d = 1; d <= opt.max_truncation_degree; ++d) {
    qd *= q;
    const BigFloat zd = 1 / qd;
    const BigFloat factor = poly.eval(zd);
    if (factor <= 0) {
      throw EulerFactorError(
          "density: Euler factor at degree " + std::to_string(d) +
              " is nonpositive; the product has no positive enclosure",
          static_cast<int>(d));
    }
    partial *= pow_bigint(factor, count_irreducibles(f.q(), d));

    // certified tail for truncation at D = d
    const BigFloat c2 = c_tail / (qd * qd * q * q);  // C * q^{-2(d+1)}
    if (c2 >= BigFloat(0.5)) continue;
    const BigFloat tau = c_tail / (1 - c2) / qd / (q - 1);
    const BigFloat hi = partial * exp(tau) * (1 + allowance);
    const BigFloat lo = partial * exp(-tau) * (1 - allowance);
    if (hi - lo <= opt.target_width) {
      return DensityInterval{lo, hi, d};
    }
  }
  throw PrecisionError(
      "density: target width not reached by truncation degree " +
      std::to_string(opt.max_truncation_degree));
}

DensityInterval main_term(const DensityInterval& rho, const FieldCtx& f,
                          uint32_t vertices, int64_t n) {
  const BigFloat wv = to_bigfloat(ipow(w_count(f.q(), n), vertices));
  return DensityInterval{rho.lo * wv, rho.hi * wv, rho.truncation_degree};
}

}  // namespace coprime_census
