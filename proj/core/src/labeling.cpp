#include "coprime_census/labeling.hpp"

#include "coprime_census/errors.hpp"
#include "coprime_census/field.hpp"

namespace coprime_census {

VertexLabeling associated_vertex_labeling(const FieldCtx& f,
                                          const CoprimalityGraph& g,
                                          const EdgeLabeling& l) {
  if (l.labels.size() != g.edge_count()) {
    throw ValidationError("associated_vertex_labeling: expected " +
                          std::to_string(g.edge_count()) + " edge labels, got " +
                          std::to_string(l.labels.size()));
  }
  VertexLabeling out;
  out.labels.assign(g.vertex_count(), MonicPoly::one());  // empty lcm is 1
  for (uint32_t j = 0; j < g.edge_count(); ++j) {
    const auto [a, b] = g.edges()[j];
    out.labels[a - 1] = poly_lcm(f, out.labels[a - 1], l.labels[j]);
    out.labels[b - 1] = poly_lcm(f, out.labels[b - 1], l.labels[j]);
  }
  return out;
}

}  // namespace coprime_census
