#pragma once

// Brute-force reference implementations for the test suite.  Everything
// here is deliberately written with different algorithms than the library:
// line graphs by pairwise edge comparison, labeled trees from Prufer
// sequences, tree isomorphism by AHU codes rooted at graph centers (the
// library roots at centroids), connectivity by scanning all vertex masks.
// Slow is fine; independent is the point.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "grahamlab/graph.hpp"

namespace oracles {

using grahamlab::Graph;

// Line graph by checking every pair of edges for a shared endpoint.
inline Graph brute_line_graph(const Graph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      auto [a, b] = g.edges[i];
      auto [c, d] = g.edges[j];
      if (a == c || a == d || b == c || b == d)
        out.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  return grahamlab::make_graph(static_cast<std::uint32_t>(g.edges.size()), out);
}

// All labeled trees on n vertices, one per Prufer sequence.
inline std::vector<Graph> all_labeled_trees(int n) {
  std::vector<Graph> trees;
  if (n == 1) {
    trees.push_back(grahamlab::make_graph(1, {}));
    return trees;
  }
  if (n == 2) {
    trees.push_back(grahamlab::make_graph(2, {{0, 1}}));
    return trees;
  }
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<int> deg = degree;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) leaves.insert(v);
    for (int x : seq) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      if (--deg[x] == 1) leaves.insert(x);
    }
    int u = *leaves.begin(), v = *std::next(leaves.begin());
    edges.emplace_back(std::min(u, v), std::max(u, v));
    trees.push_back(grahamlab::make_graph(n, edges));

    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return trees;
}

// AHU subtree code: parenthesized sorted children codes.
inline std::string ahu_rooted(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t v,
                              std::uint32_t parent) {
  std::vector<std::string> kids;
  for (std::uint32_t u : adj[v])
    if (u != parent) kids.push_back(ahu_rooted(adj, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ")";
  return s;
}

// Canonical code rooted at the tree center(s), found by leaf stripping.
inline std::string ahu_center_code(const Graph& t) {
  auto adj = grahamlab::adjacency(t);
  int n = static_cast<int>(t.vertex_count);
  if (n == 1) return "()";
  std::vector<int> deg(n);
  std::vector<std::uint32_t> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : layer) {
      --remaining;
      for (std::uint32_t u : adj[v])
        if (--deg[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::string best;
  for (std::uint32_t c : layer) {
    std::string code = ahu_rooted(adj, c, c);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

// Isomorphism by trying every vertex permutation; fine for n <= 8.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  int n = static_cast<int>(a.vertex_count);
  std::set<std::pair<std::uint32_t, std::uint32_t>> bset(b.edges.begin(), b.edges.end());
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges) {
      std::uint32_t x = perm[u], y = perm[v];
      if (!bset.count({std::min(x, y), std::max(x, y)})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Relabels vertices with a seeded shuffle.
inline Graph shuffle_graph(const Graph& g, std::mt19937& rng) {
  std::vector<std::uint32_t> perm(g.vertex_count);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& [u, v] : g.edges)
    edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  return grahamlab::make_graph(g.vertex_count, edges);
}

inline bool mask_connected(const Graph& g, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t start = 0;
  while (!((mask >> start) & 1u)) ++start;
  std::uint32_t seen = 1u << start;
  std::vector<std::uint32_t> stack{start};
  auto adj = grahamlab::adjacency(g);
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t u : adj[v])
      if (((mask >> u) & 1u) && !((seen >> u) & 1u)) {
        seen |= 1u << u;
        stack.push_back(u);
      }
  }
  return seen == mask;
}

// Every connected vertex subset of g with 1 <= |S| <= max_size, as sorted
// vertex lists, by scanning all 2^n masks.
inline std::set<std::vector<std::uint32_t>> brute_connected_subsets(const Graph& g, int max_size) {
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << g.vertex_count); ++mask) {
    if (std::popcount(mask) > max_size) continue;
    if (!mask_connected(g, mask)) continue;
    std::vector<std::uint32_t> vs;
    for (std::uint32_t v = 0; v < g.vertex_count; ++v)
      if ((mask >> v) & 1u) vs.push_back(v);
    out.insert(std::move(vs));
  }
  return out;
}

// Free-tree count by growing every (n-1)-vertex tree with one extra leaf
// and deduplicating by AHU center code.
inline std::size_t leaf_extension_tree_count(int n) {
  std::vector<Graph> current{grahamlab::make_graph(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const Graph& t : current)
      for (std::uint32_t host = 0; host < t.vertex_count; ++host) {
        auto edges = t.edges;
        edges.emplace_back(host, t.vertex_count);
        Graph grown = grahamlab::make_graph(t.vertex_count + 1, edges);
        next.emplace(ahu_center_code(grown), grown);
      }
    current.clear();
    for (auto& [code, tree] : next) current.push_back(std::move(tree));
  }
  return current.size();
}

}  // namespace oracles
