#pragma once

#include "coprime_census/graph.hpp"
#include "coprime_census/poly.hpp"

#include <vector>

namespace coprime_census {

class FieldCtx;

// One monic polynomial per edge, in the graph's canonical edge order.
struct EdgeLabeling {
  std::vector<MonicPoly> labels;
};

// One monic polynomial per vertex (index 0 = vertex 1).
struct VertexLabeling {
  std::vector<MonicPoly> labels;
};

// M_r = lcm of the labels on edges incident to r; the empty lcm is 1, so
// isolated vertices get 1. Throws ValidationError if the label count does
// not match the edge count.
VertexLabeling associated_vertex_labeling(const FieldCtx& f,
                                          const CoprimalityGraph& g,
                                          const EdgeLabeling& l);

}  // namespace coprime_census
