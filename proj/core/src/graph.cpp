#include "coprime_census/graph.hpp"

#include "coprime_census/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace coprime_census {

CoprimalityGraph::CoprimalityGraph(
    uint32_t vertices, std::vector<std::pair<uint32_t, uint32_t>> edges)
    : v_(vertices) {
  if (v_ < 1) throw ValidationError("graph: need at least one vertex");
  std::set<std::pair<uint32_t, uint32_t>> seen;
  e_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 1 || a > v_ || b < 1 || b > v_) {
      throw ValidationError("graph: edge endpoint out of range 1.." + std::to_string(v_));
    }
    if (a == b) throw ValidationError("graph: self-loop at vertex " + std::to_string(a));
    auto e = std::minmax(a, b);
    if (!seen.insert({e.first, e.second}).second) {
      throw ValidationError("graph: duplicate edge " + std::to_string(e.first) + "-" +
                            std::to_string(e.second));
    }
  }
  e_.assign(seen.begin(), seen.end());
}

std::pair<uint32_t, uint32_t> CoprimalityGraph::edge(uint32_t j) const {
  if (j < 1 || j > e_.size()) throw ValidationError("graph: edge index out of range");
  return e_[j - 1];
}

bool CoprimalityGraph::has_edge(uint32_t r, uint32_t s) const {
  if (r == s) return false;
  auto e = std::minmax(r, s);
  return std::binary_search(e_.begin(), e_.end(), std::make_pair(e.first, e.second));
}

uint32_t CoprimalityGraph::degree(uint32_t r) const {
  if (r < 1 || r > v_) throw ValidationError("graph: vertex out of range");
  uint32_t d = 0;
  for (const auto& [a, b] : e_) d += (a == r || b == r) ? 1 : 0;
  return d;
}

uint32_t CoprimalityGraph::max_degree() const {
  uint32_t m = 0;
  for (uint32_t r = 1; r <= v_; ++r) m = std::max(m, degree(r));
  return m;
}

CoprimalityGraph CoprimalityGraph::remove_edge(uint32_t j) const {
  if (j < 1 || j > e_.size()) throw ValidationError("graph: edge index out of range");
  std::vector<std::pair<uint32_t, uint32_t>> rest = e_;
  rest.erase(rest.begin() + (j - 1));
  return CoprimalityGraph(v_, std::move(rest));
}

namespace {

CoprimalityGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("graph: bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw ValidationError("graph: JSON needs \"vertices\" and \"edges\"");
  }
  if (!j["vertices"].is_number_unsigned()) {
    throw ValidationError("graph: \"vertices\" must be a positive integer");
  }
  const uint64_t v = j["vertices"].get<uint64_t>();
  if (v < 1 || v > 1u << 20) throw ValidationError("graph: vertex count out of range");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  if (!j["edges"].is_array()) throw ValidationError("graph: \"edges\" must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw ValidationError("graph: each edge must be a pair of vertex numbers");
    }
    edges.emplace_back(e[0].get<uint32_t>(), e[1].get<uint32_t>());
  }
  return CoprimalityGraph(static_cast<uint32_t>(v), std::move(edges));
}

uint32_t parse_u32(const std::string& s, size_t& at, const char* what) {
  if (at >= s.size() || !isdigit(static_cast<unsigned char>(s[at]))) {
    throw ValidationError(std::string("graph: expected ") + what + " in \"" + s + "\"");
  }
  uint64_t x = 0;
  while (at < s.size() && isdigit(static_cast<unsigned char>(s[at]))) {
    x = x * 10 + (s[at++] - '0');
    if (x > 1u << 20) throw ValidationError("graph: number too large");
  }
  return static_cast<uint32_t>(x);
}

CoprimalityGraph parse_graph_compact(const std::string& text) {
  // "v=3;1-2,2-3" — edges optional, so "v=3" and "v=3;" are both fine
  size_t at = 0;
  if (text.rfind("v=", 0) != 0) {
    throw ValidationError("graph: compact form must start with \"v=\": \"" + text + "\"");
  }
  at = 2;
  const uint32_t v = parse_u32(text, at, "vertex count");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  if (at < text.size()) {
    if (text[at] != ';') throw ValidationError("graph: expected ';' after vertex count");
    ++at;
    while (at < text.size()) {
      const uint32_t a = parse_u32(text, at, "edge endpoint");
      if (at >= text.size() || text[at] != '-') {
        throw ValidationError("graph: expected '-' inside edge");
      }
      ++at;
      const uint32_t b = parse_u32(text, at, "edge endpoint");
      edges.emplace_back(a, b);
      if (at < text.size()) {
        if (text[at] != ',') throw ValidationError("graph: expected ',' between edges");
        ++at;
        if (at == text.size()) throw ValidationError("graph: trailing ',' in edge list");
      }
    }
  }
  return CoprimalityGraph(v, std::move(edges));
}

}  // namespace

CoprimalityGraph parse_graph(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ValidationError("graph: empty description");
  if (text[first] == '{') return parse_graph_json(text);
  std::string trimmed = text.substr(first);
  while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.pop_back();
  }
  return parse_graph_compact(trimmed);
}

std::string graph_to_json(const CoprimalityGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  return j.dump();
}

std::string graph_to_compact(const CoprimalityGraph& g) {
  std::string s = "v=" + std::to_string(g.vertex_count()) + ";";
  bool first = true;
  for (const auto& [a, b] : g.edges()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(a) + "-" + std::to_string(b);
  }
  return s;
}

CoprimalityGraph complete_graph(uint32_t v) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t a = 1; a <= v; ++a) {
    for (uint32_t b = a + 1; b <= v; ++b) edges.emplace_back(a, b);
  }
  return CoprimalityGraph(v, std::move(edges));
}

CoprimalityGraph path_graph(uint32_t v) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t a = 1; a + 1 <= v && v > 1; ++a) edges.emplace_back(a, a + 1);
  return CoprimalityGraph(v, std::move(edges));
}

CoprimalityGraph empty_graph(uint32_t v) { return CoprimalityGraph(v, {}); }

}  // namespace coprime_census
