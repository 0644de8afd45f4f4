#include "coprime_census/bounds.hpp"

#include "coprime_census/errors.hpp"
#include "coprime_census/factor.hpp"

#include <cmath>
#include <string>

namespace coprime_census {
namespace {

// Largest natural log the BigFloat exponent field can absorb with margin.
const double kMaxExpArg = 1.4e9;

BigFloat checked_exp(const BigFloat& log_value) {
  if (log_value > BigFloat(kMaxExpArg)) {
    throw PrecisionError(
        "bound overflows the working float; use the log-space variant");
  }
  return exp(log_value);
}

}  // namespace

BigFloat error_bound_rk_log(const CoprimalityGraph& g, const FieldCtx& f,
                            int64_t n) {
  if (n < 0) throw ValidationError("error_bound_rk: n must be >= 0");
  const uint32_t v = g.vertex_count();
  const uint32_t e = g.edge_count();
  const uint32_t d = g.max_degree();
  if (n == 0 && d > 0) {
    throw ValidationError("error_bound_rk_log: bound is 0 at n = 0; no log");
  }
  if (e > 1u << 30) throw ValidationError("error_bound_rk: too many edges");
  const BigFloat ln_q = log(BigFloat(f.q()));
  const BigFloat ln2 = log(BigFloat(2));
  BigFloat l = BigFloat(d);                     // exp(d)
  l += pow(BigFloat(2), static_cast<int>(e)) * ln2;  // 2^(2^e)
  l += log(BigFloat(v));
  if (d > 0) l += BigFloat(d) * log(BigFloat(n));    // n^d
  l += BigFloat(static_cast<int64_t>(v) - 1) *
       (BigFloat(n) * ln_q - log(BigFloat(f.q()) - 1));  // (q^n/(q-1))^(v-1)
  return l;
}

BigFloat error_bound_rk(const CoprimalityGraph& g, const FieldCtx& f, int64_t n) {
  if (n < 0) throw ValidationError("error_bound_rk: n must be >= 0");
  if (n == 0 && g.max_degree() > 0) return BigFloat(0);
  return checked_exp(error_bound_rk_log(g, f, n));
}

BigFloat tail_density_sum(const CoprimalityGraph& g, const FieldCtx& f,
                          const TailBoundOptions& opt) {
  DensityOptions dopt;
  dopt.target_width = opt.rho_width;
  dopt.plus = true;
  dopt.subset_budget = opt.subset_budget;
  BigFloat sum = 0;
  for (uint32_t j = 1; j <= g.edge_count(); ++j) {
    sum += density_rho(g.remove_edge(j), f, dopt).hi;
  }
  return sum;
}

BigFloat error_bound_t_from_sum(const BigFloat& density_sum, const FieldCtx& f,
                                uint32_t vertices, int64_t n, double eps) {
  if (n < 0) throw ValidationError("error_bound_t: n must be >= 0");
  if (!(eps > 0.0) || !(eps < 0.5)) {
    throw ValidationError("error_bound_t: eps must lie in (0, 1/2)");
  }
  if (density_sum == 0) return BigFloat(0);
  const BigFloat ln_q = log(BigFloat(f.q()));
  BigFloat l = BigFloat(vertices) * (BigFloat(n) * ln_q - log(BigFloat(f.q()) - 1));
  l -= (1 - BigFloat(eps)) * BigFloat(n) * ln_q;
  return 3 * density_sum * checked_exp(l);
}

BigFloat error_bound_t(const CoprimalityGraph& g, const FieldCtx& f, int64_t n,
                       const TailBoundOptions& opt) {
  if (g.edge_count() == 0) return BigFloat(0);
  return error_bound_t_from_sum(tail_density_sum(g, f, opt), f,
                                g.vertex_count(), n, opt.eps);
}

OmegaBoundResult omega_bound_check(const FieldCtx& f, const MonicPoly& a) {
  if (a.degree() < 2) {
    throw ValidationError("omega_bound_check: degree must be >= 2");
  }
  const Factorization fac = factorize(f, a);
  if (!fac.squarefree()) {
    throw ValidationError("omega_bound_check: input must be squarefree");
  }
  const double n = static_cast<double>(a.degree());
  const double bound = 4.0 * (n / std::log(n)) * std::log(static_cast<double>(f.q()));
  OmegaBoundResult r;
  r.omega_value = fac.omega();
  r.bound = bound;
  r.holds = static_cast<double>(r.omega_value) <= bound;
  return r;
}

}  // namespace coprime_census
