#pragma once

// Shadow tracking through iterated line graphs.
//
// Every vertex of L^k(G) arises from a set of base vertices of G, its
// shadow: at level 0 the shadow of v is {v}, and a level-(j+1) vertex is an
// edge {a, b} of the level-j graph with shadow Sh(a) | Sh(b).  A level-k
// shadow never has more than k+1 base vertices.  Base graphs are capped at
// 64 vertices so shadows fit in one machine word.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "grahamlab/graph.hpp"

namespace grahamlab {

struct ShadowedGraph {
  Graph graph;
  std::uint32_t base_vertex_count = 0;
  int level = 0;
  std::vector<std::uint64_t> shadows;  // one bitmask per vertex of graph

  std::uint64_t full_mask() const {
    return base_vertex_count == 64 ? ~0ull : (1ull << base_vertex_count) - 1;
  }
};

inline ShadowedGraph shadow_line_iterate(const Graph& g, int k, const ResourceLimits& limits = {}) {
  if (k < 0) throw std::invalid_argument("shadow_line_iterate: negative k");
  if (g.vertex_count > 64)
    throw std::invalid_argument("shadow_line_iterate: base graph larger than 64 vertices");
  ShadowedGraph cur;
  cur.graph = g;
  cur.base_vertex_count = g.vertex_count;
  cur.level = 0;
  cur.shadows.resize(g.vertex_count);
  for (std::uint32_t v = 0; v < g.vertex_count; ++v) cur.shadows[v] = 1ull << v;

  for (int level = 1; level <= k; ++level) {
    // Vertex i of the next graph is edge i of the current one.
    std::vector<std::uint64_t> next_shadows;
    next_shadows.reserve(cur.graph.edges.size());
    for (const auto& [a, b] : cur.graph.edges) {
      std::uint64_t sh = cur.shadows[a] | cur.shadows[b];
      if (std::popcount(sh) > level + 1)
        throw std::logic_error("shadow_line_iterate: shadow bound violated");
      next_shadows.push_back(sh);
    }
    cur.graph = line_graph(cur.graph, limits);
    cur.shadows = std::move(next_shadows);
    cur.level = level;
  }
  return cur;
}

}  // namespace grahamlab
