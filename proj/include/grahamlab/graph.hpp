#pragma once

// Undirected simple graphs and the line-graph operator L.
//
// A Graph stores a vertex count and a normalized edge list (u < v, sorted
// lexicographically, no duplicates).  The vertices of L(G) are the edges of
// G in that order, so vertex i of L(G) is edges[i] of G; this fixed
// correspondence is what the shadow machinery relies on.
//
// iterated_sizes produces |G|, |L(G)|, |L^2(G)|, ... .  Since
// |L^{j+1}| = sum_v C(deg_{L^j}(v), 2), the last two terms of a sequence are
// read off the degree profile of the deepest graph actually built, so a
// depth-d sequence only materializes line graphs up to L^{d-2}.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grahamlab/bigint.hpp"

namespace grahamlab {

struct ResourceLimits {
  std::uint64_t vertex_ceiling = 5'000'000;
  std::uint64_t edge_ceiling = 50'000'000;
};

// Thrown when an intermediate graph would exceed the configured ceilings.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

struct Graph {
  std::uint32_t vertex_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::size_t edge_count() const { return edges.size(); }
  bool operator==(const Graph&) const = default;
};

// Normalizes and validates a raw edge list.
inline Graph make_graph(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> raw) {
  for (auto& e : raw) {
    if (e.first == e.second) throw std::invalid_argument("make_graph: self-loop");
    if (e.first >= n || e.second >= n) throw std::invalid_argument("make_graph: endpoint out of range");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return Graph{n, std::move(raw)};
}

inline std::vector<std::uint32_t> degrees(const Graph& g) {
  std::vector<std::uint32_t> deg(g.vertex_count, 0);
  for (const auto& [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

inline std::vector<std::vector<std::uint32_t>> adjacency(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.vertex_count);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count == 0) return false;
  auto adj = adjacency(g);
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
  }
  return visited == g.vertex_count;
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count >= 1 && g.edges.size() == g.vertex_count - 1 && is_connected(g);
}

// Number of edges of L(g), i.e. sum_v C(deg v, 2).
inline Int line_graph_edge_count(const Graph& g) {
  Int total = 0;
  for (std::uint32_t d : degrees(g)) total += pairs_of(d);
  return total;
}

// Two distinct edges of a simple graph share at most one endpoint, so
// emitting one pair per shared endpoint produces each L-edge exactly once.
inline Graph line_graph(const Graph& g, const ResourceLimits& limits = {}) {
  if (g.edges.size() > limits.vertex_ceiling)
    throw resource_limit_error("line_graph: vertex ceiling exceeded (" +
                               std::to_string(g.edges.size()) + " > " +
                               std::to_string(limits.vertex_ceiling) + ")");
  Int out_edges = line_graph_edge_count(g);
  if (out_edges > limits.edge_ceiling)
    throw resource_limit_error("line_graph: edge ceiling exceeded (" + out_edges.str() +
                               " > " + std::to_string(limits.edge_ceiling) + ")");

  std::vector<std::vector<std::uint32_t>> incident(g.vertex_count);
  for (std::uint32_t eid = 0; eid < g.edges.size(); ++eid) {
    incident[g.edges[eid].first].push_back(eid);
    incident[g.edges[eid].second].push_back(eid);
  }
  Graph out;
  out.vertex_count = static_cast<std::uint32_t>(g.edges.size());
  out.edges.reserve(static_cast<std::size_t>(out_edges));
  for (const auto& inc : incident)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        out.edges.emplace_back(inc[i], inc[j]);  // inc is ascending, so pairs are normalized
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

struct GrahamSequence {
  std::vector<Int> terms;  // terms[j] = |L^j(G)|
  bool operator==(const GrahamSequence&) const = default;
};

inline GrahamSequence iterated_sizes(const Graph& g, int depth, const ResourceLimits& limits = {}) {
  if (depth < 0) throw std::invalid_argument("iterated_sizes: negative depth");
  GrahamSequence seq;
  seq.terms.reserve(depth + 1);
  seq.terms.push_back(g.vertex_count);
  if (depth == 0) return seq;
  seq.terms.push_back(g.edges.size());
  Graph cur = g;
  while (static_cast<int>(seq.terms.size()) <= depth) {
    seq.terms.push_back(line_graph_edge_count(cur));
    if (static_cast<int>(seq.terms.size()) <= depth) cur = line_graph(cur, limits);
  }
  return seq;
}

// Degree of L^k(G) when G is d-regular: line graphs of regular graphs stay
// regular, with degree doubling minus two at each step.
inline Int regular_line_degree(const Int& d, int k) {
  if (d < 2) throw std::invalid_argument("regular_line_degree: d must be >= 2");
  if (k < 0) throw std::invalid_argument("regular_line_degree: negative k");
  return pow2(k) * d - pow2(k + 1) + 2;
}

// |L^k(K_{1,d})|.  After one step the star becomes K_d, and from there the
// graph is regular at every level, so the size recurrence is
// count <- count * degree / 2 with degree <- 2*degree - 2.
inline Int star_lk_size(int d, int k) {
  if (d < 1) throw std::invalid_argument("star_lk_size: d must be >= 1");
  if (k < 0) throw std::invalid_argument("star_lk_size: negative k");
  if (k == 0) return d + 1;
  Int count = d;
  Int deg = d - 1;
  for (int step = 1; step < k; ++step) {
    if (count == 0) break;
    Int prod = count * deg;
    if (prod % 2 != 0) throw std::logic_error("star_lk_size: recurrence produced odd product");
    count = prod / 2;
    deg = 2 * deg - 2;
  }
  return count < 0 ? Int(0) : count;
}

// Edge-list text format: one "u v" pair per line, 0-based; blank lines are
// ignored; an optional leading "n <count>" header declares the vertex count
// (required when isolated vertices exist).
inline Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> raw;
  bool have_n = false;
  std::uint64_t declared_n = 0;
  std::uint64_t max_seen = 0;
  bool any_vertex = false;
  std::string line;
  bool first_content = true;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (first_content && tok == "n") {
      if (!(ls >> declared_n)) throw std::invalid_argument("edge list: malformed header");
      std::string rest;
      if (ls >> rest) throw std::invalid_argument("edge list: trailing tokens after header");
      have_n = true;
      first_content = false;
      continue;
    }
    first_content = false;
    std::uint64_t u, v;
    try {
      std::size_t pos;
      u = std::stoull(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("edge list: malformed line: " + line);
    }
    if (!(ls >> v)) throw std::invalid_argument("edge list: malformed line: " + line);
    std::string rest;
    if (ls >> rest) throw std::invalid_argument("edge list: trailing tokens: " + line);
    max_seen = std::max({max_seen, u, v});
    any_vertex = true;
    raw.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  std::uint64_t n = have_n ? declared_n : (any_vertex ? max_seen + 1 : 0);
  if (n > 0xFFFFFFFFull) throw std::invalid_argument("edge list: vertex count too large");
  return make_graph(static_cast<std::uint32_t>(n), std::move(raw));
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count << "\n";
  for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
}

}  // namespace grahamlab
