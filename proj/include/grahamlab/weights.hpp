#pragma once

// Shadow-weight counting.
//
// wt(T, k) is the number of vertices of L^k(T) whose shadow covers all of
// V(T).  Grouping the vertices of L^k(t) by the subtree their shadow spans
// gives the decomposition
//
//   |L^k(t)| = sum over connected S of V(t) of wt(t[S], k),
//
// and since a level-k shadow has at most k+1 vertices only subsets with at
// most k+1 vertices contribute.  A WtTable caches wt per (canonical tree
// code, level) so the decomposition can evaluate |L^k| without building any
// line graph of t itself.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grahamlab/shadow.hpp"
#include "grahamlab/treegen.hpp"

namespace grahamlab {

class wt_cache_version_error : public std::runtime_error {
 public:
  explicit wt_cache_version_error(const std::string& what) : std::runtime_error(what) {}
};
class wt_cache_malformed_error : public std::runtime_error {
 public:
  explicit wt_cache_malformed_error(const std::string& what) : std::runtime_error(what) {}
};
class wt_cache_checksum_error : public std::runtime_error {
 public:
  explicit wt_cache_checksum_error(const std::string& what) : std::runtime_error(what) {}
};
class wt_table_miss_error : public std::runtime_error {
 public:
  explicit wt_table_miss_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int weight(const Graph& t, int k, const ResourceLimits& limits = {}) {
  if (!is_tree(t)) throw std::invalid_argument("weight: input is not a tree");
  if (k < 0) throw std::invalid_argument("weight: negative k");
  if (t.vertex_count > static_cast<std::uint32_t>(k) + 2) return 0;  // shadow bound
  ShadowedGraph sg = shadow_line_iterate(t, k, limits);
  std::uint64_t full = sg.full_mask();
  Int count = 0;
  for (std::uint64_t sh : sg.shadows)
    if (sh == full) ++count;
  return count;
}

struct WtKey {
  TreeCode code;
  int k = 0;
  auto operator<=>(const WtKey&) const = default;
};

struct WtTable {
  int version = 1;
  int max_vertices = 0;  // trees up to this size are tabulated
  int built_k = -1;      // levels 0..built_k are tabulated
  std::map<WtKey, Int> entries;

  bool operator==(const WtTable&) const = default;

  bool covers(int k, std::uint32_t tree_size) const {
    return k <= built_k &&
           std::min<std::uint32_t>(k + 1, tree_size) <= static_cast<std::uint32_t>(max_vertices);
  }
};

// Tabulates wt for every tree class with at most max_vertices vertices and
// every level 0..k.  An entry (code, j) is stored only when the coded tree
// has at most j+1 vertices; larger trees have weight 0 and are omitted, so
// max_vertices beyond k+1 would be pointless and is clamped.
inline WtTable build_wt_table(int k, int max_vertices, const ResourceLimits& limits = {}) {
  if (k < 0) throw std::invalid_argument("build_wt_table: negative k");
  if (max_vertices < 1) throw std::invalid_argument("build_wt_table: max_vertices must be >= 1");
  WtTable table;
  table.max_vertices = std::min(max_vertices, k + 1);
  table.built_k = k;
  for (int n = 1; n <= table.max_vertices; ++n)
    for (const Graph& t : enumerate_trees(n)) {
      TreeCode code = canonical_code(t);
      for (int j = n - 1; j <= k; ++j)  // n <= j+1
        table.entries.emplace(WtKey{code, j}, weight(t, j, limits));
    }
  return table;
}

// Evaluates |L^k(t)| through the shadow decomposition.
inline Int lk_size_via_shadows(const Graph& t, int k, const WtTable& table) {
  if (!is_tree(t)) throw std::invalid_argument("lk_size_via_shadows: input is not a tree");
  if (k < 0) throw std::invalid_argument("lk_size_via_shadows: negative k");
  if (!table.covers(k, t.vertex_count))
    throw wt_table_miss_error("lk_size_via_shadows: table does not cover level " +
                              std::to_string(k) + " with trees up to " +
                              std::to_string(std::min<std::uint32_t>(k + 1, t.vertex_count)) +
                              " vertices");
  int max_size = static_cast<int>(std::min<std::uint32_t>(k + 1, t.vertex_count));
  Int total = 0;
  connected_subsets(t, max_size, [&](const std::vector<std::uint32_t>& sub) {
    TreeCode code = canonical_code(induced_subgraph(t, sub));
    auto it = table.entries.find(WtKey{code, k});
    if (it == table.entries.end())
      throw wt_table_miss_error("lk_size_via_shadows: missing entry for a " +
                                std::to_string(sub.size()) + "-vertex subtree at level " +
                                std::to_string(k));
    total += it->second;
  });
  return total;
}

// Cache file format, line oriented:
//   WTCACHE 1 <max_vertices>
//   WT1\t<hex tree code>\t<k>\t<decimal weight>
//   ...
//   END <record count>
inline void wt_cache_store(const WtTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("wt_cache_store: cannot open " + path.string());
  out << "WTCACHE 1 " << table.max_vertices << "\n";
  for (const auto& [key, wt] : table.entries)
    out << "WT1\t" << key.code.hex() << "\t" << key.k << "\t" << wt.str() << "\n";
  out << "END " << table.entries.size() << "\n";
  if (!out) throw std::runtime_error("wt_cache_store: write failed for " + path.string());
}

inline WtTable wt_cache_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("wt_cache_load: cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw wt_cache_malformed_error("wt cache: empty file");
  {
    std::istringstream hs(line);
    std::string magic;
    long version = -1, maxv = -1;
    if (!(hs >> magic >> version >> maxv) || magic != "WTCACHE")
      throw wt_cache_malformed_error("wt cache: bad header: " + line);
    if (version != 1)
      throw wt_cache_version_error("wt cache: unsupported version " + std::to_string(version));
    if (maxv < 1) throw wt_cache_malformed_error("wt cache: bad max_vertices");
    WtTable table;
    table.max_vertices = static_cast<int>(maxv);
    bool saw_end = false;
    std::size_t records = 0, declared = 0;
    while (std::getline(in, line)) {
      if (line.rfind("END ", 0) == 0) {
        const char* b = line.data() + 4;
        auto [p, ec] = std::from_chars(b, line.data() + line.size(), declared);
        if (ec != std::errc() || p != line.data() + line.size())
          throw wt_cache_malformed_error("wt cache: bad END line: " + line);
        saw_end = true;
        break;
      }
      std::size_t t1 = line.find('\t');
      std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
      std::size_t t3 = t2 == std::string::npos ? t2 : line.find('\t', t2 + 1);
      if (line.rfind("WT1\t", 0) != 0 || t2 == std::string::npos || t3 == std::string::npos ||
          line.find('\t', t3 + 1) != std::string::npos)
        throw wt_cache_malformed_error("wt cache: malformed record: " + line);
      TreeCode code = TreeCode::from_hex(line.substr(t1 + 1, t2 - t1 - 1));
      int k = 0;
      {
        std::string ks = line.substr(t2 + 1, t3 - t2 - 1);
        auto [p, ec] = std::from_chars(ks.data(), ks.data() + ks.size(), k);
        if (ec != std::errc() || p != ks.data() + ks.size() || k < 0)
          throw wt_cache_malformed_error("wt cache: bad level in record: " + line);
      }
      std::string ws = line.substr(t3 + 1);
      if (ws.empty() || ws.find_first_not_of("0123456789") != std::string::npos)
        throw wt_cache_malformed_error("wt cache: bad weight in record: " + line);
      if (!table.entries.emplace(WtKey{std::move(code), k}, Int(ws)).second)
        throw wt_cache_malformed_error("wt cache: duplicate record: " + line);
      table.built_k = std::max(table.built_k, k);
      ++records;
    }
    if (!saw_end) throw wt_cache_malformed_error("wt cache: missing END terminator");
    if (std::getline(in, line) && !line.empty())
      throw wt_cache_malformed_error("wt cache: trailing data after END");
    if (records != declared)
      throw wt_cache_checksum_error("wt cache: record count mismatch: " + std::to_string(records) +
                                    " read, " + std::to_string(declared) + " declared");
    return table;
  }
}

}  // namespace grahamlab
