#pragma once

#include "coprime_census/graph.hpp"
#include "coprime_census/graph_poly.hpp"
#include "coprime_census/numeric.hpp"

#include <cstdint>

namespace coprime_census {

// The multiplicative functions attached to a graph, evaluated at a prime
// power P^m. Their values are integers that depend only on m (not on the
// prime P or the field), and they are exactly the coefficient sequences of
// the graph polynomials:
//   kFG      <-> q_g          kFGPlus     <-> q_g_plus
//   kGGr     <-> q_g_r        kGGrPlus    <-> q_g_r_plus
enum class MfKind { kFG, kFGPlus, kGGr, kGGrPlus };

// Route (a): read coefficient m straight out of the graph polynomial.
// r (1-based) is required for the kGGr/kGGrPlus kinds and ignored otherwise.
BigInt mf_eval_coeff(MfKind kind, const CoprimalityGraph& g, uint32_t r,
                     uint32_t m);

// Route (b): direct sum over the 2^e edge labelings with every label in
// {1, P}, where P is a concrete irreducible (the first of degree
// prime_degree over F_2 in enumeration order). Builds the real associated
// vertex labeling with polynomial lcms, computes each Moebius factor by
// factorization, and keeps the labelings whose vertex-label product is
// exactly P^m. Shares no code with route (a).
BigInt mf_eval_labelings(MfKind kind, const CoprimalityGraph& g, uint32_t r,
                         uint32_t prime_degree, uint32_t m);

// Evaluates both routes and returns the common value; throws
// ValidationError on bad arguments and std::logic_error if the routes ever
// disagree (they never should).
BigInt multiplicative_f_eval(MfKind kind, const CoprimalityGraph& g,
                             uint32_t r, uint32_t prime_degree, uint32_t m);

}  // namespace coprime_census
