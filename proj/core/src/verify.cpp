#include "coprime_census/verify.hpp"

#include "coprime_census/bounds.hpp"
#include "coprime_census/counting.hpp"
#include "coprime_census/density.hpp"
#include "coprime_census/enumerate.hpp"
#include "coprime_census/errors.hpp"
#include "coprime_census/factor.hpp"
#include "coprime_census/graph_poly.hpp"
#include "coprime_census/multiplicative.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace coprime_census {
namespace {

// Every graph on exactly v labeled vertices: all subsets of the complete
// graph's edge set.
std::vector<CoprimalityGraph> all_graphs(uint32_t v) {
  std::vector<std::pair<uint32_t, uint32_t>> all_edges;
  for (uint32_t a = 1; a <= v; ++a) {
    for (uint32_t b = a + 1; b <= v; ++b) all_edges.emplace_back(a, b);
  }
  std::vector<CoprimalityGraph> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << all_edges.size()); ++mask) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (size_t j = 0; j < all_edges.size(); ++j) {
      if (mask >> j & 1) edges.push_back(all_edges[j]);
    }
    out.emplace_back(v, std::move(edges));
  }
  return out;
}

std::string graph_tag(const CoprimalityGraph& g, uint64_t q, int64_t n) {
  return "graph=" + graph_to_compact(g) + " q=" + std::to_string(q) +
         " n=" + std::to_string(n);
}

FieldCtx make_field(uint64_t q) {
  uint64_t p = 0;
  uint32_t k = 0;
  if (!factor_prime_power(q, p, k)) {
    throw ValidationError("verify: q = " + std::to_string(q) + " is not a prime power");
  }
  return FieldCtx(p, k);
}

VerifyCheck check_oracle_equivalence(const VerifyOptions& opt) {
  VerifyCheck c{"oracle-equivalence", true, ""};
  uint64_t cases = 0;
  for (uint64_t q : opt.qs) {
    const FieldCtx f = make_field(q);
    for (uint32_t v = 1; v <= opt.max_vertices; ++v) {
      for (const CoprimalityGraph& g : all_graphs(v)) {
        for (int64_t n = 0; n <= opt.max_n; ++n) {
          BruteForceOptions bopt;
          bopt.budget = opt.brute_budget;
          InclusionExclusionOptions iopt;
          iopt.budget = opt.ie_budget;
          iopt.fault_flip_mu = opt.inject_mu_fault;
          const BigInt brute = brute_force_count(f, g, n, bopt);
          const BigInt ie = inclusion_exclusion_count(f, g, n, iopt);
          ++cases;
          if (brute != ie) {
            c.pass = false;
            c.detail = graph_tag(g, q, n) + " brute=" + brute.str() +
                       " inclusion-exclusion=" + ie.str();
            return c;
          }
        }
      }
    }
  }
  c.detail = std::to_string(cases) + " cases agree";
  return c;
}

VerifyCheck check_graph_poly_identities(const VerifyOptions& opt) {
  VerifyCheck c{"graph-poly-identities", true, ""};
  uint64_t cases = 0;
  for (uint32_t v = 1; v <= opt.max_vertices; ++v) {
    for (const CoprimalityGraph& g : all_graphs(v)) {
      const BigInt two_e = BigInt(1) << g.edge_count();
      const GraphPolynomial qg = q_g(g);
      ++cases;
      if (qg.coeff(0) != 1 || qg.coeff(1) != 0) {
        c.pass = false;
        c.detail = graph_to_compact(g) + ": Q_G low-order coefficients wrong";
        return c;
      }
      if (!(qg == q_g(g, SubsetWalk::kReference))) {
        c.pass = false;
        c.detail = graph_to_compact(g) + ": Gray-code and reference walks differ";
        return c;
      }
      const GraphPolynomial qp = q_g_plus(g);
      BigInt sum = 0;
      for (const BigInt& b : qp.coeffs()) sum += b;
      if (sum != two_e) {
        c.pass = false;
        c.detail = graph_to_compact(g) + ": Q_G_plus(1) != 2^e";
        return c;
      }
      for (uint32_t r = 1; r <= v; ++r) {
        const GraphPolynomial qrp = q_g_r_plus(g, r);
        if (qrp.coeff(1) != g.degree(r)) {
          c.pass = false;
          c.detail = graph_to_compact(g) + ": Q_{G," + std::to_string(r) +
                     "}^+ linear coefficient != deg(r)";
          return c;
        }
        for (uint32_t s = r + 1; s <= v; ++s) {
          if (g.has_edge(r, s)) continue;
          const GraphPolynomial pair = q_rs(g, r, s);
          BigInt psum = 0;
          for (const BigInt& b : pair.coeffs()) psum += b;
          if (psum != two_e) {
            c.pass = false;
            c.detail = graph_to_compact(g) + ": Q_{" + std::to_string(r) + "," +
                       std::to_string(s) + "} coefficient sum != 2^e";
            return c;
          }
        }
      }
    }
  }
  c.detail = std::to_string(cases) + " graphs check out";
  return c;
}

VerifyCheck check_multiplicative_agreement(const VerifyOptions& opt) {
  VerifyCheck c{"multiplicative-agreement", true, ""};
  uint64_t cases = 0;
  for (uint32_t v = 1; v <= opt.max_vertices; ++v) {
    for (const CoprimalityGraph& g : all_graphs(v)) {
      for (uint32_t prime_degree : {1u, 2u}) {
        for (uint32_t m = 0; m <= v; ++m) {
          for (MfKind kind : {MfKind::kFG, MfKind::kFGPlus}) {
            ++cases;
            if (mf_eval_coeff(kind, g, 0, m) !=
                mf_eval_labelings(kind, g, 0, prime_degree, m)) {
              c.pass = false;
              c.detail = graph_to_compact(g) + ": routes disagree (edge kind, m=" +
                         std::to_string(m) + ")";
              return c;
            }
          }
          for (MfKind kind : {MfKind::kGGr, MfKind::kGGrPlus}) {
            for (uint32_t r = 1; r <= v; ++r) {
              ++cases;
              if (mf_eval_coeff(kind, g, r, m) !=
                  mf_eval_labelings(kind, g, r, prime_degree, m)) {
                c.pass = false;
                c.detail = graph_to_compact(g) + ": routes disagree (vertex kind, r=" +
                           std::to_string(r) + ", m=" + std::to_string(m) + ")";
                return c;
              }
            }
          }
        }
      }
    }
  }
  c.detail = std::to_string(cases) + " evaluations agree";
  return c;
}

VerifyCheck check_density_closed_form(const VerifyOptions& opt) {
  VerifyCheck c{"density-closed-form", true, ""};
  const CoprimalityGraph k2 = complete_graph(2);
  for (uint64_t q : opt.qs) {
    const FieldCtx f = make_field(q);
    DensityOptions dopt;
    dopt.target_width = BigFloat("1e-10");
    const DensityInterval rho = density_rho(k2, f, dopt);
    const BigFloat expect = 1 - BigFloat(1) / BigFloat(q);
    if (!rho.contains(expect) || rho.width() > BigFloat("1e-9")) {
      c.pass = false;
      c.detail = "q=" + std::to_string(q) + ": interval [" + float_string(rho.lo) +
                 ", " + float_string(rho.hi) + "] misses 1 - 1/q";
      return c;
    }
  }
  c.detail = "two-vertex density matches 1 - 1/q for all q tested";
  return c;
}

VerifyCheck check_empty_graph_law(const VerifyOptions& opt) {
  VerifyCheck c{"empty-graph-law", true, ""};
  uint64_t cases = 0;
  for (uint64_t q : opt.qs) {
    const FieldCtx f = make_field(q);
    for (uint32_t v = 1; v <= opt.max_vertices; ++v) {
      const CoprimalityGraph g = empty_graph(v);
      for (int64_t n = 0; n <= opt.max_n; ++n) {
        const BigInt total = ipow(w_count(q, n), v);
        const BigInt counted = inclusion_exclusion_count(f, g, n);
        ++cases;
        if (counted != total) {
          c.pass = false;
          c.detail = graph_tag(g, q, n) + ": count != w(q^n)^v";
          return c;
        }
        // exact deviation law against the literal q^{nv}/(q-1)^v main term:
        // w(q^n)^v == q^v * (q^{nv}/(q-1)^v) * (1 - q^{-(n+1)})^v
        const BigRat literal = BigRat(ipow(BigInt(q), static_cast<uint64_t>(n) * v),
                                      ipow(BigInt(q) - 1, v));
        const BigRat correction =
            BigRat(ipow(BigInt(q), static_cast<uint64_t>(n) + 1) - 1,
                   ipow(BigInt(q), static_cast<uint64_t>(n) + 1));
        BigRat rhs = literal * ipow(BigInt(q), v);
        for (uint32_t i = 0; i < v; ++i) rhs *= correction;
        if (BigRat(total) != rhs) {
          c.pass = false;
          c.detail = graph_tag(g, q, n) + ": normalization identity violated";
          return c;
        }
      }
    }
  }
  c.detail = std::to_string(cases) + " empty-graph cases match";
  return c;
}

VerifyCheck check_omega_bound(const VerifyOptions& opt) {
  VerifyCheck c{"omega-bound", true, ""};
  uint64_t cases = 0;
  const uint64_t q = opt.qs.empty() ? 2 : opt.qs.front();
  const FieldCtx f = make_field(q);
  const int64_t max_deg = 6;
  for (const MonicPoly& a : enumerate_monic(f, max_deg, EnumerateMode::kUpTo)) {
    if (a.degree() < 2 || !is_squarefree(f, a)) continue;
    ++cases;
    const OmegaBoundResult r = omega_bound_check(f, a);
    if (!r.holds) {
      c.pass = false;
      c.detail = poly_to_string(f, a) + ": omega = " + std::to_string(r.omega_value) +
                 " exceeds bound " + std::to_string(r.bound);
      return c;
    }
  }
  c.detail = std::to_string(cases) + " squarefree polynomials within the bound";
  return c;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

VerifyReport run_verification(const VerifyOptions& opt) {
  VerifyReport r;
  r.checks.push_back(check_graph_poly_identities(opt));
  r.checks.push_back(check_multiplicative_agreement(opt));
  r.checks.push_back(check_oracle_equivalence(opt));
  r.checks.push_back(check_density_closed_form(opt));
  r.checks.push_back(check_empty_graph_law(opt));
  r.checks.push_back(check_omega_bound(opt));
  return r;
}

}  // namespace coprime_census
