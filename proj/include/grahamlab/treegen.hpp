#pragma once

// Free trees up to isomorphism: canonical codes, enumeration, and connected
// vertex-subset (subtree) enumeration.
//
// The canonical code of a tree is its canonical rooted level sequence taken
// at the centroid; a bicentroidal tree is rooted at whichever centroid gives
// the lexicographically smaller sequence.  The canonical sequence of a
// rooted tree lists preorder depths with child subtrees in lexicographically
// nonincreasing order of their own sequences, so two trees get equal codes
// exactly when they are isomorphic.
//
// enumerate_trees assembles one representative per isomorphism class via the
// centroid decomposition: a tree with a unique centroid is a root whose
// child subtrees all have at most floor((n-1)/2) vertices, and a
// bicentroidal tree (n even) is an unordered pair of rooted trees on n/2
// vertices joined by an edge.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "grahamlab/graph.hpp"

namespace grahamlab {

struct TreeCode {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const TreeCode&) const = default;

  std::string hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
      s.push_back(digits[b >> 4]);
      s.push_back(digits[b & 0xf]);
    }
    return s;
  }

  static TreeCode from_hex(const std::string& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("TreeCode: odd hex length");
    auto nibble = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      throw std::invalid_argument("TreeCode: bad hex digit");
    };
    TreeCode code;
    code.bytes.reserve(s.size() / 2);
    for (std::size_t i = 0; i < s.size(); i += 2)
      code.bytes.push_back(static_cast<std::uint8_t>(nibble(s[i]) * 16 + nibble(s[i + 1])));
    return code;
  }
};

namespace detail {

// Canonical level sequence of the subtree at v (depth 0 at v), children
// sorted so the concatenation is lexicographically maximal.
inline std::vector<std::uint8_t> canon_seq(const std::vector<std::vector<std::uint32_t>>& adj,
                                           std::uint32_t v, std::uint32_t parent) {
  std::vector<std::vector<std::uint8_t>> kids;
  for (std::uint32_t u : adj[v])
    if (u != parent) kids.push_back(canon_seq(adj, u, v));
  std::sort(kids.begin(), kids.end(), std::greater<>());
  std::vector<std::uint8_t> out{0};
  for (const auto& kid : kids)
    for (std::uint8_t d : kid) out.push_back(static_cast<std::uint8_t>(d + 1));
  return out;
}

// Centroids: one or two adjacent vertices minimizing the largest component
// left after their removal.
inline std::vector<std::uint32_t> centroids(const Graph& t) {
  std::uint32_t n = t.vertex_count;
  if (n == 1) return {0};
  auto adj = adjacency(t);
  std::vector<std::uint32_t> order, parent(n, n), size(n, 1);
  order.reserve(n);
  order.push_back(0);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint32_t u : adj[order[i]])
      if (u != parent[order[i]]) {
        parent[u] = order[i];
        order.push_back(u);
      }
  for (std::size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  std::vector<std::uint32_t> best;
  std::uint32_t best_max = n;
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t mx = n - size[v];
    for (std::uint32_t u : adj[v])
      if (parent[u] == v) mx = std::max(mx, size[u]);
    if (mx < best_max) {
      best_max = mx;
      best.assign(1, v);
    } else if (mx == best_max) {
      best.push_back(v);
    }
  }
  return best;
}

}  // namespace detail

inline TreeCode canonical_code(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("canonical_code: input is not a tree");
  if (t.vertex_count > 255) throw std::invalid_argument("canonical_code: tree too large");
  auto adj = adjacency(t);
  auto cs = detail::centroids(t);
  TreeCode code;
  code.bytes = detail::canon_seq(adj, cs[0], cs[0]);
  for (std::size_t i = 1; i < cs.size(); ++i) {
    auto alt = detail::canon_seq(adj, cs[i], cs[i]);
    if (alt < code.bytes) code.bytes = std::move(alt);
  }
  return code;
}

namespace detail {

// All rooted trees on `size` vertices as canonical level sequences, each
// child subtree capped at max_child vertices.  Children are chosen in
// nonincreasing sequence order, which both avoids duplicates and makes the
// assembled sequence canonical.
inline const std::vector<std::vector<std::uint8_t>>& rooted_shapes(int size);

inline void gen_rooted(int remaining, const std::vector<std::uint8_t>* bound, int max_child,
                       std::vector<std::uint8_t>& acc,
                       std::vector<std::vector<std::uint8_t>>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int c = std::min(remaining, max_child); c >= 1; --c) {
    for (const auto& shape : rooted_shapes(c)) {
      if (bound && shape > *bound) continue;
      std::size_t mark = acc.size();
      for (std::uint8_t d : shape) acc.push_back(static_cast<std::uint8_t>(d + 1));
      gen_rooted(remaining - c, &shape, max_child, acc, out);
      acc.resize(mark);
    }
  }
}

inline const std::vector<std::vector<std::uint8_t>>& rooted_shapes(int size) {
  static std::map<int, std::vector<std::vector<std::uint8_t>>> cache;
  auto it = cache.find(size);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<std::uint8_t>> shapes;
  std::vector<std::uint8_t> acc{0};
  gen_rooted(size - 1, nullptr, size - 1, acc, shapes);
  return cache.emplace(size, std::move(shapes)).first->second;
}

// Rebuilds a tree from a preorder level sequence: the parent of vertex i is
// the nearest j < i one level up.
inline Graph graph_from_level_seq(const std::vector<std::uint8_t>& seq) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> last_at_depth(seq.size() + 1, 0);
  for (std::uint32_t i = 1; i < seq.size(); ++i) {
    edges.emplace_back(last_at_depth[seq[i] - 1], i);
    last_at_depth[seq[i]] = i;
  }
  return make_graph(static_cast<std::uint32_t>(seq.size()), std::move(edges));
}

}  // namespace detail

// One Graph per isomorphism class of free trees on n vertices, in a fixed
// deterministic order.
inline std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("enumerate_trees: n must be in 1..16");
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph{1, {}});
    return out;
  }
  // Unique centroid: all child subtrees have at most floor((n-1)/2) vertices.
  {
    std::vector<std::vector<std::uint8_t>> shapes;
    std::vector<std::uint8_t> acc{0};
    detail::gen_rooted(n - 1, nullptr, (n - 1) / 2, acc, shapes);
    for (const auto& seq : shapes) out.push_back(detail::graph_from_level_seq(seq));
  }
  // Bicentroid: unordered pairs of rooted trees on n/2 vertices.
  if (n % 2 == 0) {
    const auto& halves = detail::rooted_shapes(n / 2);
    for (std::size_t i = 0; i < halves.size(); ++i)
      for (std::size_t j = i; j < halves.size(); ++j) {
        Graph a = detail::graph_from_level_seq(halves[i]);
        Graph b = detail::graph_from_level_seq(halves[j]);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = a.edges;
        std::uint32_t off = a.vertex_count;
        for (const auto& [u, v] : b.edges) edges.emplace_back(u + off, v + off);
        edges.emplace_back(0, off);  // join the two roots
        out.push_back(make_graph(static_cast<std::uint32_t>(n), std::move(edges)));
      }
  }
  return out;
}

inline Graph induced_subgraph(const Graph& g, std::vector<std::uint32_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  std::vector<std::uint32_t> rank(g.vertex_count, g.vertex_count);
  for (std::uint32_t i = 0; i < vertices.size(); ++i) rank[vertices[i]] = i;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& [u, v] : g.edges)
    if (rank[u] != g.vertex_count && rank[v] != g.vertex_count)
      edges.emplace_back(rank[u], rank[v]);
  return make_graph(static_cast<std::uint32_t>(vertices.size()), std::move(edges));
}

namespace detail {

// In a tree an unseen neighbor of the newest subtree vertex is reachable
// from the subtree only through that vertex, so extending with
// larger-than-root neighbors visits every connected subset exactly once.
template <class F>
void extend_subsets(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t root,
                    int max_size, std::vector<std::uint32_t>& sub, std::vector<char>& in_sub,
                    std::vector<std::uint32_t> ext, F& visit) {
  visit(const_cast<const std::vector<std::uint32_t>&>(sub));
  if (static_cast<int>(sub.size()) == max_size) return;
  while (!ext.empty()) {
    std::uint32_t w = ext.back();
    ext.pop_back();
    sub.push_back(w);
    in_sub[w] = 1;
    auto ext2 = ext;
    for (std::uint32_t u : adj[w])
      if (u > root && !in_sub[u]) ext2.push_back(u);
    extend_subsets(adj, root, max_size, sub, in_sub, std::move(ext2), visit);
    in_sub[w] = 0;
    sub.pop_back();
  }
}

}  // namespace detail

// Visits every connected vertex subset of tree t with 1..max_size vertices
// exactly once.  The visited vector lists the subset with its smallest
// vertex first; it is reused between calls.
template <class F>
void connected_subsets(const Graph& t, int max_size, F&& visit) {
  if (!is_tree(t)) throw std::invalid_argument("connected_subsets: input is not a tree");
  if (max_size < 1) return;
  auto adj = adjacency(t);
  std::vector<std::uint32_t> sub;
  std::vector<char> in_sub(t.vertex_count, 0);
  for (std::uint32_t v = 0; v < t.vertex_count; ++v) {
    sub.assign(1, v);
    in_sub[v] = 1;
    std::vector<std::uint32_t> ext;
    for (std::uint32_t u : adj[v])
      if (u > v) ext.push_back(u);
    detail::extend_subsets(adj, v, max_size, sub, in_sub, std::move(ext), visit);
    in_sub[v] = 0;
  }
}

}  // namespace grahamlab
