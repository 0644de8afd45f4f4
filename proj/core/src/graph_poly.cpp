#include "coprime_census/graph_poly.hpp"

#include "coprime_census/errors.hpp"

#include <bit>
#include <string>

namespace coprime_census {

GraphPolynomial::GraphPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
  if (c_.empty()) c_.push_back(BigInt(0));
}

BigRat GraphPolynomial::eval(const BigRat& z) const {
  BigRat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + BigRat(c_[i]);
  return acc;
}

BigFloat GraphPolynomial::eval(const BigFloat& z) const {
  BigFloat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + to_bigfloat(c_[i]);
  return acc;
}

BigInt GraphPolynomial::abs_coeff_sum_from_quadratic() const {
  BigInt s = 0;
  for (size_t i = 2; i < c_.size(); ++i) s += abs(c_[i]);
  return s;
}

std::string GraphPolynomial::to_string() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const bool negative = c_[i] < 0;
    const BigInt mag = abs(c_[i]);
    if (s.empty()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    if (i == 0) {
      s += mag.str();
    } else {
      if (mag != 1) s += mag.str() + "*";
      s += "z";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

namespace {

// One engine behind all five sums. Walks every subset F of the edge set and
// adds sign^|F| * z^{#covered(F)}, where vertices ex1/ex2 (1-based, 0 = none)
// never count toward the exponent.
GraphPolynomial subset_sum(const CoprimalityGraph& g, bool signed_sum,
                           uint32_t ex1, uint32_t ex2, SubsetWalk walk,
                           uint64_t subset_budget) {
  const uint32_t v = g.vertex_count();
  const uint32_t e = g.edge_count();
  if (e >= 63 || (uint64_t{1} << e) > subset_budget) {
    throw BudgetError("graph polynomial: 2^" + std::to_string(e) +
                      " edge subsets exceed the subset budget");
  }
  std::vector<int64_t> coeff(v + 1, 0);
  const auto counted = [&](uint32_t vert1based) {
    return vert1based != ex1 && vert1based != ex2;
  };

  if (walk == SubsetWalk::kReference) {
    // recompute the covered-vertex count from scratch for every subset
    std::vector<uint64_t> stamp(v + 1, 0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
      const uint64_t epoch = mask + 1;
      int exp = 0;
      for (uint32_t j = 0; j < e; ++j) {
        if (!(mask >> j & 1)) continue;
        const auto [a, b] = g.edges()[j];
        for (uint32_t vert : {a, b}) {
          if (stamp[vert] != epoch) {
            stamp[vert] = epoch;
            if (counted(vert)) ++exp;
          }
        }
      }
      const int sign = signed_sum && (std::popcount(mask) & 1) ? -1 : 1;
      coeff[exp] += sign;
    }
  } else {
    // Gray-code walk: consecutive subsets differ in one edge, so the covered
    // count is maintained through per-vertex incidence counters.
    std::vector<uint32_t> incidence(v + 1, 0);
    int exp = 0;
    int sign = 1;
    coeff[0] += 1;  // the empty subset
    for (uint64_t t = 1; t < (uint64_t{1} << e); ++t) {
      const uint32_t j = static_cast<uint32_t>(std::countr_zero(t));
      const auto [a, b] = g.edges()[j];
      const uint64_t gray = t ^ (t >> 1);
      const bool inserted = (gray >> j & 1) != 0;
      for (uint32_t vert : {a, b}) {
        if (inserted) {
          if (incidence[vert]++ == 0 && counted(vert)) ++exp;
        } else {
          if (--incidence[vert] == 0 && counted(vert)) --exp;
        }
      }
      sign = -sign;
      coeff[exp] += signed_sum ? sign : 1;
    }
  }

  std::vector<BigInt> big(coeff.begin(), coeff.end());
  return GraphPolynomial(std::move(big));
}

uint32_t checked_vertex(const CoprimalityGraph& g, uint32_t r, const char* who) {
  if (r < 1 || r > g.vertex_count()) {
    throw ValidationError(std::string(who) + ": vertex out of range");
  }
  return r;
}

}  // namespace

GraphPolynomial q_g(const CoprimalityGraph& g, SubsetWalk walk, uint64_t subset_budget) {
  return subset_sum(g, true, 0, 0, walk, subset_budget);
}

GraphPolynomial q_g_plus(const CoprimalityGraph& g, SubsetWalk walk,
                         uint64_t subset_budget) {
  return subset_sum(g, false, 0, 0, walk, subset_budget);
}

GraphPolynomial q_g_r(const CoprimalityGraph& g, uint32_t r, SubsetWalk walk,
                      uint64_t subset_budget) {
  return subset_sum(g, true, checked_vertex(g, r, "q_g_r"), 0, walk, subset_budget);
}

GraphPolynomial q_g_r_plus(const CoprimalityGraph& g, uint32_t r, SubsetWalk walk,
                           uint64_t subset_budget) {
  return subset_sum(g, false, checked_vertex(g, r, "q_g_r_plus"), 0, walk,
                    subset_budget);
}

GraphPolynomial q_rs(const CoprimalityGraph& g, uint32_t r, uint32_t s,
                     SubsetWalk walk, uint64_t subset_budget) {
  checked_vertex(g, r, "q_rs");
  checked_vertex(g, s, "q_rs");
  if (r == s) throw ValidationError("q_rs: vertices must differ");
  if (g.has_edge(r, s)) {
    throw ValidationError("q_rs: {" + std::to_string(r) + "," + std::to_string(s) +
                          "} is an edge; the pair sum needs a non-edge");
  }
  return subset_sum(g, false, r, s, walk, subset_budget);
}

uint32_t vertex_span(const CoprimalityGraph& g) {
  uint32_t n = 0;
  for (uint32_t r = 1; r <= g.vertex_count(); ++r) n += g.degree(r) > 0 ? 1 : 0;
  return n;
}

}  // namespace coprime_census
