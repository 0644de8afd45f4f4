#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coprime_census {

// Simple undirected graph on vertices 1..v encoding which tuple components
// must be pairwise coprime. Vertices are 1-based everywhere in the public
// interface and in serialized forms; storage is 0-based internally. Edges are
// kept sorted as (min, max) pairs — the canonical edge order that every
// subset enumeration and labeling walks in.
class CoprimalityGraph {
 public:
  // Throws ValidationError on v < 1, out-of-range endpoints, self-loops or
  // duplicate edges.
  CoprimalityGraph(uint32_t vertices,
                   std::vector<std::pair<uint32_t, uint32_t>> edges);

  uint32_t vertex_count() const noexcept { return v_; }
  uint32_t edge_count() const noexcept { return static_cast<uint32_t>(e_.size()); }

  // Edge j, 1 <= j <= edge_count(), as a 1-based (min, max) pair.
  std::pair<uint32_t, uint32_t> edge(uint32_t j) const;
  const std::vector<std::pair<uint32_t, uint32_t>>& edges() const noexcept {
    return e_;
  }

  bool has_edge(uint32_t r, uint32_t s) const;
  uint32_t degree(uint32_t r) const;    // 1-based vertex
  uint32_t max_degree() const;

  // The graph with edge j removed, 1 <= j <= edge_count().
  CoprimalityGraph remove_edge(uint32_t j) const;

  friend bool operator==(const CoprimalityGraph& a,
                         const CoprimalityGraph& b) = default;

 private:
  uint32_t v_;
  std::vector<std::pair<uint32_t, uint32_t>> e_;  // sorted, 1-based
};

// Two accepted descriptions:
//   JSON:    {"vertices": 3, "edges": [[1,2],[2,3]]}
//   compact: "v=3;1-2,2-3"   (empty edge list: "v=3;" or just "v=3")
// Leading '{' selects the JSON reader. Throws ValidationError on malformed
// input.
CoprimalityGraph parse_graph(const std::string& text);

std::string graph_to_json(const CoprimalityGraph& g);
std::string graph_to_compact(const CoprimalityGraph& g);

// Complete graph on v vertices, path on v vertices, empty graph.
CoprimalityGraph complete_graph(uint32_t v);
CoprimalityGraph path_graph(uint32_t v);
CoprimalityGraph empty_graph(uint32_t v);

}  // namespace coprime_census
