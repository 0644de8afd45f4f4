#include "coprime_census/multiplicative.hpp"

#include "coprime_census/errors.hpp"
#include "coprime_census/factor.hpp"
#include "coprime_census/field.hpp"
#include "coprime_census/labeling.hpp"
#include "coprime_census/poly.hpp"

#include <string>

namespace coprime_census {
namespace {

bool is_vertex_kind(MfKind kind) {
  return kind == MfKind::kGGr || kind == MfKind::kGGrPlus;
}

bool is_signed_kind(MfKind kind) {
  return kind == MfKind::kFG || kind == MfKind::kGGr;
}

void check_args(MfKind kind, const CoprimalityGraph& g, uint32_t r,
                uint32_t prime_degree) {
  if (prime_degree < 1) {
    throw ValidationError("multiplicative eval: prime degree must be >= 1");
  }
  if (is_vertex_kind(kind) && (r < 1 || r > g.vertex_count())) {
    throw ValidationError("multiplicative eval: vertex out of range");
  }
}

}  // namespace

BigInt mf_eval_coeff(MfKind kind, const CoprimalityGraph& g, uint32_t r,
                     uint32_t m) {
  check_args(kind, g, r, 1);
  GraphPolynomial poly;
  switch (kind) {
    case MfKind::kFG: poly = q_g(g); break;
    case MfKind::kFGPlus: poly = q_g_plus(g); break;
    case MfKind::kGGr: poly = q_g_r(g, r); break;
    case MfKind::kGGrPlus: poly = q_g_r_plus(g, r); break;
  }
  return poly.coeff(m);
}

BigInt mf_eval_labelings(MfKind kind, const CoprimalityGraph& g, uint32_t r,
                         uint32_t prime_degree, uint32_t m) {
  check_args(kind, g, r, prime_degree);
  const uint32_t e = g.edge_count();
  if (e > 20) {
    throw BudgetError("multiplicative eval: 2^" + std::to_string(e) +
                      " labelings is over the direct-sum limit of 2^20");
  }

  // concrete prime: first irreducible of the requested degree over F_2
  FieldCtx f2(2, 1);
  const MonicPoly prime = f2.irreducibles(prime_degree)[0];
  const MonicPoly target = [&] {
    MonicPoly t = MonicPoly::one();
    for (uint32_t i = 0; i < m; ++i) t = poly_mul(f2, t, prime);
    return t;
  }();

  BigInt acc = 0;
  EdgeLabeling labeling;
  labeling.labels.assign(e, MonicPoly::one());
  for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
    for (uint32_t j = 0; j < e; ++j) {
      labeling.labels[j] = (mask >> j & 1) ? prime : MonicPoly::one();
    }
    const VertexLabeling vl = associated_vertex_labeling(f2, g, labeling);
    MonicPoly prod = MonicPoly::one();
    for (uint32_t vert = 1; vert <= g.vertex_count(); ++vert) {
      if (is_vertex_kind(kind) && vert == r) continue;
      prod = poly_mul(f2, prod, vl.labels[vert - 1]);
    }
    if (!(prod == target)) continue;
    if (is_signed_kind(kind)) {
      int sign = 1;
      for (uint32_t j = 0; j < e; ++j) sign *= mobius(f2, labeling.labels[j]);
      acc += sign;
    } else {
      acc += 1;
    }
  }
  return acc;
}

BigInt multiplicative_f_eval(MfKind kind, const CoprimalityGraph& g, uint32_t r,
                             uint32_t prime_degree, uint32_t m) {
  const BigInt by_coeff = mf_eval_coeff(kind, g, r, m);
  const BigInt by_labelings = mf_eval_labelings(kind, g, r, prime_degree, m);
  if (by_coeff != by_labelings) {
    throw std::logic_error(
        "multiplicative eval: coefficient route " + by_coeff.str() +
        " != labeling route " + by_labelings.str());
  }
  return by_coeff;
}

}  // namespace coprime_census
