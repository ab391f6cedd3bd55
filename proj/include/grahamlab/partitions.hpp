#pragma once

// Sums of polynomial values over integer partitions, the difference
// polynomial g, and nested PTE block families.
//
// For f of degree d and the level-k split T_k / T_bar_k,
//   g(t) = sum_{x in T_k} f(x+t) - sum_{x in T_bar_k} f(x+t)
// collapses to a polynomial of degree d-k whose coefficients are binomial
// combinations of the power-sum defects; its leading coefficient is
// +-C * C(d,k) * k! * 2^{C(k,2)} with sign (-1)^{k+1} sign(C).
//
// r_threshold computes the separation radius R_k used by the nested family
// construction, with e replaced by a rational rounded up in the 17th digit
// so every ceiling stays a true upper bound.  lambda_family concatenates
// one W-family block per level k = d-1 .. 2, each shifted by alpha R_k 2^k;
// f_hat separates the members because consecutive steps at one level
// dominate the whole span of the level above.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "grahamlab/polynomial.hpp"
#include "grahamlab/pte.hpp"
#include "grahamlab/util.hpp"

namespace grahamlab {

class desk_budget_error : public std::runtime_error {
 public:
  explicit desk_budget_error(const std::string& what) : std::runtime_error(what) {}
};

constexpr int kPartitionCeiling = 120;

struct Partition {
  std::vector<Int> parts;  // nonincreasing

  Int n() const {
    Int s = 0;
    for (const auto& p : parts) s += p;
    return s;
  }
  bool operator==(const Partition&) const = default;
};

namespace detail {

template <class F>
bool visit_partition(F& visit, const std::vector<int>& parts) {
  if constexpr (std::is_void_v<decltype(visit(parts))>) {
    visit(parts);
    return true;
  } else {
    return visit(parts);
  }
}

template <class F>
bool partition_rec(int remaining, int max_part, std::vector<int>& buf, F& visit) {
  if (remaining == 0) return visit_partition(visit, buf);
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    buf.push_back(p);
    bool go = partition_rec(remaining - p, p, buf, visit);
    buf.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace detail

// Visits the partitions of n in reverse-lexicographic order, (n) first and
// (1,...,1) last.  The buffer is reused between visits; a visitor returning
// bool may stop the stream early with false.
template <class F>
void enumerate_partitions(int n, F&& visit) {
  if (n < 0 || n > kPartitionCeiling)
    throw std::invalid_argument("enumerate_partitions: n must be in 0..120");
  std::vector<int> buf;
  detail::partition_rec(n, n, buf, visit);
}

template <class Container>
Rat f_hat(const Polynomial& f, const Container& parts) {
  Rat total = 0;
  for (const auto& p : parts) total += f(Rat(p));
  return total;
}

inline Rat f_hat(const Polynomial& f, const Partition& p) { return f_hat(f, p.parts); }

// Number of distinct values of sum_i f(part_i) over all partitions of n.
// Shards by largest part when running parallel; per-shard value sets merge
// into one, so the result does not depend on the schedule.
inline std::size_t distinct_fhat_count(const Polynomial& f, int n, int parallelism = 1) {
  if (n < 1 || n > kPartitionCeiling)
    throw std::invalid_argument("distinct_fhat_count: n must be in 1..120");
  std::vector<Rat> value_of(n + 1);
  for (int i = 1; i <= n; ++i) value_of[i] = f(Rat(i));
  auto shard = [&](std::size_t idx) {
    int largest = static_cast<int>(idx) + 1;
    std::set<Rat> values;
    std::vector<int> buf;
    Rat base = value_of[largest];
    auto visit = [&](const std::vector<int>& parts) {
      Rat total = base;
      for (int p : parts) total += value_of[p];
      values.insert(std::move(total));
    };
    detail::partition_rec(n - largest, largest, buf, visit);
    return values;
  };
  auto sets = parallel_map(static_cast<std::size_t>(n), parallelism, shard);
  std::set<Rat> all;
  for (auto& s : sets) all.merge(s);
  return all.size();
}

// g(t) = f_hat(T_k + t) - f_hat(T_bar_k + t) as a polynomial in t, via the
// binomial expansion against the power-sum defects.  The leading-term law
// is asserted, and the expansion is spot-checked at t = 0..5 against direct
// evaluation; a mismatch is a falsification alarm, not a recoverable error.
inline Polynomial g_poly(const Polynomial& f, int k) {
  int d = f.degree();
  if (k < 1) throw std::invalid_argument("g_poly: k must be >= 1");
  if (d < k) throw std::invalid_argument("g_poly: need deg f >= k");
  PtePair split = pte_split(k);
  std::vector<Int> defect(d + 1, 0);  // defect[m] = S_m(T_k) - S_m(T_bar_k)
  for (int m = k; m <= d; ++m)
    defect[m] = power_sum(split.t_set, m) - power_sum(split.t_bar, m);
  std::vector<Rat> c(d - k + 1, Rat(0));
  for (int q = 0; q <= d - k; ++q)
    for (int j = q + k; j <= d; ++j)
      c[q] += f.coeff(j) * Rat(binomial(Int(j), q) * defect[j - q]);
  Polynomial g = Polynomial::from_coeffs(std::move(c));

  if (g.degree() != d - k)
    throw verification_error("g_poly: degree " + std::to_string(g.degree()) + ", expected " +
                             std::to_string(d - k));
  Rat lead_want = f.leading() * Rat(binomial(Int(d), k) * pte_defect_formula(k));
  if (g.leading() != lead_want)
    throw verification_error("g_poly: leading coefficient violates the closed form");
  for (int t = 0; t <= 5; ++t) {
    Rat direct = 0;
    for (std::uint32_t x : split.t_set) direct += f(Rat(x + t));
    for (std::uint32_t x : split.t_bar) direct -= f(Rat(x + t));
    if (direct != g(Rat(t)))
      throw verification_error("g_poly: expansion disagrees with direct evaluation at t=" +
                               std::to_string(t));
  }
  return g;
}

// e rounded up in the 17th decimal digit, so bounds computed from it only
// ever grow.
inline Rat e_upper() { return Rat(Int("271828182845904524"), Int("100000000000000000")); }

namespace detail {

inline Int r_threshold_value(const Polynomial& f, int k) {
  int d = f.degree();
  Rat c_abs = rat_abs(f.leading());
  Rat c_prime = f.max_abs_coeff();
  long long expo = static_cast<long long>(d + 1) * d / 2 - static_cast<long long>(k + 2) * (k + 1) / 2;
  Rat val = c_prime * 4 * e_upper() * d * d * Rat(pow2(expo) * factorial(d - k - 1)) / c_abs;
  return ceil_rat(val);
}

}  // namespace detail

// R_k = ceil(C' 4e d^2 2^{C(d+1,2)-C(k+2,2)} (d-k-1)! / C); successive
// thresholds must shrink by at least 2^k (d-k), which is re-verified here.
inline Int r_threshold(const Polynomial& f, int k) {
  int d = f.degree();
  if (d < 1 || f.is_zero()) throw std::invalid_argument("r_threshold: need a nonconstant f");
  if (k < 0 || k > d - 1) throw std::invalid_argument("r_threshold: k must be in 0..deg f - 1");
  Int r = detail::r_threshold_value(f, k);
  if (k >= 1) {
    Int prev = detail::r_threshold_value(f, k - 1);
    if (prev < pow2(k) * (d - k) * r)
      throw verification_error("r_threshold: ratio R_" + std::to_string(k - 1) + "/R_" +
                               std::to_string(k) + " fell below 2^k (d-k)");
  }
  return r;
}

struct LambdaLevelSpec {
  int k = 2;      // PTE level of the blocks
  int sigma = 0;  // family chain parameter r+s
  int take = 0;   // how many chain members become blocks (prefix)
  Int shift;      // added to every part of every block
};

// The construction's own level parameters: sigma_k = floor(2^{k(t-1)/2 - t}
// sqrt(alpha R_{k-1})) with t = d-k, shift alpha R_k 2^k, and the first
// sigma(sigma+1)/2 chain members used as blocks.
inline std::vector<LambdaLevelSpec> lambda_default_levels(const Polynomial& f) {
  int d = f.degree();
  if (d < 3) throw std::invalid_argument("lambda_default_levels: need deg f >= 3");
  Rat alpha_rat = f.max_abs_coeff() / rat_abs(f.leading());
  Int alpha = ceil_rat(alpha_rat);
  std::vector<LambdaLevelSpec> levels;
  for (int t = 1; t <= d - 2; ++t) {
    int k = d - t;
    Int r_prev = detail::r_threshold_value(f, k - 1);
    Int r_here = detail::r_threshold_value(f, k);
    long long num_exp = static_cast<long long>(k) * (t - 1);  // doubled exponent
    Int under_root = alpha * r_prev * pow2(num_exp);
    Int sigma_big = boost::multiprecision::sqrt(under_root) / pow2(t);
    if (sigma_big > 1'000'000)
      throw desk_budget_error("lambda_default_levels: sigma " + sigma_big.str() +
                              " at level k=" + std::to_string(k) + " is beyond desk scale");
    int sigma = static_cast<int>(sigma_big);
    levels.push_back(LambdaLevelSpec{k, sigma, sigma * (sigma + 1) / 2, alpha * r_here * pow2(k)});
  }
  return levels;
}

struct LambdaNestingCheck {
  int upper_k = 0;     // coarser level (smaller shifts)
  int lower_k = 0;     // finer level (larger shifts)
  Rat lower_min_step;  // smallest consecutive f_hat step at the finer level
  Rat upper_span;      // whole f_hat span of the coarser level
  bool ok = false;
};

struct LambdaFamilyReport {
  std::vector<LambdaLevelSpec> levels;
  std::vector<Partition> members;
  std::vector<Rat> fhat_values;  // aligned with members
  Int partitioned_n;             // common sum of every member
  bool all_distinct = false;
  std::vector<LambdaNestingCheck> nesting;
  bool nesting_ok = true;
};

inline LambdaFamilyReport lambda_family(const Polynomial& f,
                                        const std::vector<LambdaLevelSpec>& levels,
                                        std::size_t member_budget = 20000) {
  if (levels.empty()) throw std::invalid_argument("lambda_family: no levels");
  std::size_t member_count = 1;
  for (const auto& lv : levels) {
    if (lv.take < 1 || lv.take > (lv.sigma + 1) * (lv.sigma + 2) / 2)
      throw std::invalid_argument("lambda_family: take out of range at level k=" +
                                  std::to_string(lv.k));
    if (lv.shift < 0) throw std::invalid_argument("lambda_family: negative shift");
    member_count *= static_cast<std::size_t>(lv.take);
    if (member_count > member_budget)
      throw desk_budget_error("lambda_family: member count exceeds desk budget of " +
                              std::to_string(member_budget));
  }

  LambdaFamilyReport rep;
  rep.levels = levels;
  // Per level: the chosen blocks and their f_hat values.
  std::vector<std::vector<Composition>> blocks(levels.size());
  std::vector<std::vector<Rat>> block_fhat(levels.size());
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto& lv = levels[li];
    auto fam = w_family(lv.k, lv.sigma);
    for (int j = 0; j < lv.take; ++j) {
      Composition comp = fam[j].comp;
      for (auto& part : comp.parts) part += lv.shift;
      block_fhat[li].push_back(f_hat(f, comp.parts));
      blocks[li].push_back(std::move(comp));
    }
  }

  for (std::size_t li = 0; li + 1 < levels.size(); ++li) {
    // levels run from high k (small shifts) to low k (large shifts); steps
    // of the finer level must dominate the span of the coarser one.
    const auto& coarse = block_fhat[li];
    const auto& fine = block_fhat[li + 1];
    LambdaNestingCheck chk;
    chk.upper_k = levels[li].k;
    chk.lower_k = levels[li + 1].k;
    chk.upper_span = *std::max_element(coarse.begin(), coarse.end()) -
                     *std::min_element(coarse.begin(), coarse.end());
    chk.lower_min_step = 0;
    for (std::size_t j = 0; j + 1 < fine.size(); ++j) {
      Rat step = rat_abs(fine[j + 1] - fine[j]);
      if (j == 0 || step < chk.lower_min_step) chk.lower_min_step = step;
    }
    chk.ok = fine.size() < 2 || chk.lower_min_step >= chk.upper_span;
    rep.nesting_ok = rep.nesting_ok && chk.ok;
    rep.nesting.push_back(chk);
  }

  std::vector<std::size_t> idx(levels.size(), 0);
  std::set<Rat> seen;
  bool first = true;
  for (;;) {
    Partition member;
    Rat value = 0;
    for (std::size_t li = 0; li < levels.size(); ++li) {
      const auto& comp = blocks[li][idx[li]];
      member.parts.insert(member.parts.end(), comp.parts.begin(), comp.parts.end());
      value += block_fhat[li][idx[li]];
    }
    std::sort(member.parts.begin(), member.parts.end(), std::greater<>());
    Int total = member.n();
    if (first) {
      rep.partitioned_n = total;
      first = false;
    } else if (total != rep.partitioned_n) {
      throw verification_error("lambda_family: members partition different integers");
    }
    seen.insert(value);
    rep.fhat_values.push_back(std::move(value));
    rep.members.push_back(std::move(member));
    std::size_t li = levels.size();
    while (li-- > 0) {
      if (++idx[li] < blocks[li].size()) break;
      idx[li] = 0;
      if (li == 0) {
        rep.all_distinct = seen.size() == rep.members.size();
        return rep;
      }
    }
  }
}

inline LambdaFamilyReport lambda_family(const Polynomial& f,
                                        std::optional<std::vector<int>> sigma_override = {},
                                        std::size_t member_budget = 20000) {
  std::vector<LambdaLevelSpec> levels = lambda_default_levels(f);
  if (sigma_override) {
    if (sigma_override->size() != levels.size())
      throw std::invalid_argument("lambda_family: override needs one sigma per level (deg f - 2)");
    for (std::size_t i = 0; i < levels.size(); ++i) {
      int sigma = (*sigma_override)[i];
      if (sigma < 1) throw std::invalid_argument("lambda_family: override sigma must be >= 1");
      levels[i].sigma = sigma;
      levels[i].take = sigma * (sigma + 1) / 2;
    }
  }
  return lambda_family(f, levels, member_budget);
}

}  // namespace grahamlab
