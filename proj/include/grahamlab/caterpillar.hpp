#pragma once

// Stars with tails, caterpillars, and the level-k caterpillar size formula.
//
// S(d; a, b) is a star with d legs whose center also starts two paths of
// lengths a and b.  cat(d_1..d_t; m) is a spine path of length (t+1)m (plus
// optional padding at the far end) with d_i legs attached at spine position
// i*m.  When the spacing is m = 2k the joints are far enough apart that
// L^k factors through the joints:
//
//   |L^k(cat)| = k + 1 + sum_j (|L^k(S(d_j; k, k))| + k - 1) + pad.
//
// |L^k(S(d; k, k))| - 1/2 agrees with a degree-k polynomial f_k(d);
// f_k_poly recovers it by exact interpolation on d = 0..k+1 and validates
// the fit at d = k+2..k+5.

#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grahamlab/graph.hpp"
#include "grahamlab/polynomial.hpp"

namespace grahamlab {

// Center is vertex 0, then legs, then the a-path, then the b-path.
inline Graph star_graph(int d, int a, int b) {
  if (d < 0 || a < 0 || b < 0) throw std::invalid_argument("star_graph: negative parameter");
  if (d + a + b < 1) throw std::invalid_argument("star_graph: empty star");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t next = 1;
  for (int i = 0; i < d; ++i) edges.emplace_back(0, next++);
  for (int path_len : {a, b}) {
    std::uint32_t prev = 0;
    for (int i = 0; i < path_len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return make_graph(next, std::move(edges));
}

struct CaterpillarSpec {
  std::vector<int> parts;  // legs at joint i, position (i+1)*m on the spine
  int m = 1;               // joint spacing
  int pad = 0;             // extra spine length past the last segment

  Int vertex_count() const {
    Int total = Int(parts.size() + 1) * m + 1 + pad;
    for (int d : parts) total += d;
    return total;
  }
  bool operator==(const CaterpillarSpec&) const = default;
};

// Text form: "parts=3,0,2 m=6 pad=17" (pad may be omitted when zero).
inline CaterpillarSpec parse_caterpillar_spec(const std::string& text) {
  CaterpillarSpec spec;
  spec.m = 0;
  std::istringstream in(text);
  std::string token;
  bool saw_parts = false, saw_m = false, saw_pad = false;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("caterpillar spec: bad token " + token);
    std::string key = token.substr(0, eq), value = token.substr(eq + 1);
    auto parse_int = [&](const std::string& v) {
      std::size_t pos = 0;
      int x = std::stoi(v, &pos);
      if (pos != v.size() || x < 0) throw std::invalid_argument("caterpillar spec: bad value " + v);
      return x;
    };
    if (key == "parts" && !saw_parts) {
      saw_parts = true;
      std::string item;
      std::istringstream vs(value);
      while (std::getline(vs, item, ',')) spec.parts.push_back(parse_int(item));
    } else if (key == "m" && !saw_m) {
      saw_m = true;
      spec.m = parse_int(value);
    } else if (key == "pad" && !saw_pad) {
      saw_pad = true;
      spec.pad = parse_int(value);
    } else {
      throw std::invalid_argument("caterpillar spec: unexpected token " + token);
    }
  }
  if (!saw_parts || !saw_m || spec.m < 1)
    throw std::invalid_argument("caterpillar spec: need parts=... and m>=1");
  return spec;
}

inline std::string format_caterpillar_spec(const CaterpillarSpec& spec) {
  std::string s = "parts=";
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(spec.parts[i]);
  }
  s += " m=" + std::to_string(spec.m);
  if (spec.pad != 0) s += " pad=" + std::to_string(spec.pad);
  return s;
}

// Spine vertices come first (0..(t+1)m+pad), then the legs of each joint in
// order, so the layout is deterministic.
inline Graph caterpillar_graph(const CaterpillarSpec& spec) {
  if (spec.m < 1) throw std::invalid_argument("caterpillar_graph: spacing must be >= 1");
  if (spec.pad < 0) throw std::invalid_argument("caterpillar_graph: negative pad");
  for (int d : spec.parts)
    if (d < 0) throw std::invalid_argument("caterpillar_graph: negative part");
  std::size_t t = spec.parts.size();
  std::uint64_t spine_len = static_cast<std::uint64_t>(t + 1) * spec.m + spec.pad;
  Int total = spec.vertex_count();
  if (total > 0xFFFFFFFFull) throw std::invalid_argument("caterpillar_graph: too many vertices");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint64_t i = 0; i < spine_len; ++i)
    edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1));
  std::uint32_t next = static_cast<std::uint32_t>(spine_len + 1);
  for (std::size_t i = 0; i < t; ++i) {
    std::uint32_t joint = static_cast<std::uint32_t>((i + 1) * static_cast<std::uint64_t>(spec.m));
    for (int leg = 0; leg < spec.parts[i]; ++leg) edges.emplace_back(joint, next++);
  }
  return make_graph(next, std::move(edges));
}

// |L^k(S(d; k, k))| as a function of d; swappable so the formula can run on
// either direct iteration or the shadow decomposition.
using StarSizer = std::function<Int(int d, int k)>;

inline Int star_kk_size_direct(int d, int k, const ResourceLimits& limits = {}) {
  return iterated_sizes(star_graph(d, k, k), k, limits).terms.at(k);
}

inline StarSizer direct_star_sizer(const ResourceLimits& limits = {}) {
  return [limits](int d, int k) { return star_kk_size_direct(d, k, limits); };
}

inline Int cat_lk_size_formula(const std::vector<int>& parts, int k, const StarSizer& sizer,
                               int pad = 0) {
  if (k < 1) throw std::invalid_argument("cat_lk_size_formula: k must be >= 1");
  Int total = k + 1 + pad;
  for (int d : parts) total += sizer(d, k) + (k - 1);
  return total;
}

// The additive constant of the size formula: everything except the star
// terms, i.e. k + 1 + pad + (k - 1) t for t joints.
inline Int cat_formula_constant(int k, std::size_t t, int pad = 0) {
  return Int(k) + 1 + pad + Int(k - 1) * t;
}

// f_k with |L^k(S(d; k, k))| = f_k(d) + 1/2: interpolated on d = 0..k+1,
// then checked at four more points.  A degree or fit mismatch means the
// sizer and the polynomial model disagree, which must stop everything.
inline Polynomial f_k_poly(int k, const StarSizer& sizer) {
  if (k < 1) throw std::invalid_argument("f_k_poly: k must be >= 1");
  std::vector<std::pair<Rat, Rat>> pts;
  for (int d = 0; d <= k + 1; ++d) pts.emplace_back(Rat(d), Rat(sizer(d, k)) - Rat(1, 2));
  Polynomial f = Polynomial::interpolate(pts);
  if (f.degree() != k)
    throw verification_error("f_k_poly: interpolant for k=" + std::to_string(k) + " has degree " +
                             std::to_string(f.degree()) + ", expected " + std::to_string(k));
  for (int d = k + 2; d <= k + 5; ++d) {
    Rat want = Rat(sizer(d, k)) - Rat(1, 2);
    if (f(Rat(d)) != want)
      throw verification_error("f_k_poly: validation failed at d=" + std::to_string(d));
  }
  return f;
}

struct CoeffRatioReport {
  int k = 0;
  Rat actual_ratio;     // max |coeff| / |leading coeff|
  Rat reported_bound;   // (k+3)^{2k+3} 2^{ceil(k^2/2)+k+4}
  bool within_bound = false;
};

// The bound exponent k^2/2 is a half-integer for odd k, so the comparison
// squares both sides and the displayed bound rounds the exponent up.
inline CoeffRatioReport coeff_ratio_report(int k, const StarSizer& sizer) {
  Polynomial f = f_k_poly(k, sizer);
  CoeffRatioReport rep;
  rep.k = k;
  rep.actual_ratio = f.max_abs_coeff() / rat_abs(f.leading());
  rep.reported_bound =
      Rat(int_pow(Int(k + 3), 2 * k + 3) * pow2((k * k + 1) / 2 + k + 4));
  Rat lhs_sq = rep.actual_ratio * rep.actual_ratio;
  Rat rhs_sq = Rat(int_pow(Int(k + 3), 4 * k + 6) * pow2(k * k + 2 * k + 8));
  rep.within_bound = lhs_sq <= rhs_sq;
  return rep;
}

}  // namespace grahamlab
