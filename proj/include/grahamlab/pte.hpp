#pragma once

// Prouhet-Tarry-Escott machinery.
//
// pte_split(k) divides {0, ..., 2^k - 1} by binary digit-sum parity into
// T_k (odd) and its complement.  The two halves agree on all power sums
// S_m for m < k, and the first disagreement is
//   S_k(T_k) - S_k(T_bar_k) = (-1)^{k+1} k! 2^{C(k,2)}.
//
// w_sequence(k; r, s, t) concatenates shifted copies of the halves:
//   (T_bar)^r (T)^s prod_{j=1..t}(T_bar + j 2^k) (T + (t+1) 2^k)
//   prod_{j=1..s-t}(T_bar + (j+t+1) 2^k) prod_{j=1..r}(T + (j+s+1) 2^k).
// All members with r + s = sigma have the same length 2^{k-1}(2 sigma + 1)
// and the same sum, and consecutive members of the family chain differ by
// swapping one T_{k+1} + c subsequence for T_bar_{k+1} + c.
//
// The sum of any member depends only on sigma = r + s:
//   4^{k-1} (sigma^2 + 5 sigma + 3) - 2^{k-2} (2 sigma + 1),
// obtained by summing the block shifts directly (the cross terms in r, s, t
// cancel).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grahamlab/bigint.hpp"

namespace grahamlab {

struct PtePair {
  int k = 0;
  std::vector<std::uint32_t> t_set;  // odd digit sum, ascending
  std::vector<std::uint32_t> t_bar;  // even digit sum, ascending
};

// Computes the split both by digit parity and by the doubling recursion
// T_{j+1} = T_j u ((complement of T_j) + 2^j) and insists they agree.
inline PtePair pte_split(int k) {
  if (k < 1 || k > 20) throw std::invalid_argument("pte_split: k must be in 1..20");
  PtePair out;
  out.k = k;
  std::uint32_t limit = 1u << k;
  for (std::uint32_t x = 0; x < limit; ++x)
    (std::popcount(x) % 2 == 1 ? out.t_set : out.t_bar).push_back(x);

  std::vector<std::uint32_t> rec{};  // T_0 over {0}: empty
  for (int j = 0; j < k; ++j) {
    std::vector<std::uint32_t> next = rec;
    std::size_t at = 0;
    for (std::uint32_t x = 0; x < (1u << j); ++x) {
      while (at < rec.size() && rec[at] < x) ++at;
      bool in_rec = at < rec.size() && rec[at] == x;
      if (!in_rec) next.push_back(x + (1u << j));
    }
    std::sort(next.begin(), next.end());
    rec = std::move(next);
  }
  if (rec != out.t_set) throw std::logic_error("pte_split: recursion and parity disagree");
  return out;
}

// sum of x^m with the convention 0^0 = 1
template <class Container>
Int power_sum(const Container& xs, int m) {
  if (m < 0) throw std::invalid_argument("power_sum: negative exponent");
  Int total = 0;
  for (const auto& x : xs) total += int_pow(Int(x), static_cast<unsigned long long>(m));
  return total;
}

// S_{k+j}(T_k) - S_{k+j}(T_bar_k)
inline Int pte_defect(int k, int j) {
  if (j < 0) throw std::invalid_argument("pte_defect: negative j");
  PtePair p = pte_split(k);
  return power_sum(p.t_set, k + j) - power_sum(p.t_bar, k + j);
}

// closed form for the first disagreement, j = 0
inline Int pte_defect_formula(int k) {
  Int v = factorial(k) * pow2(k * (k - 1) / 2);
  return k % 2 == 0 ? -v : v;
}

struct Composition {
  std::vector<Int> parts;

  Int sum() const {
    Int s = 0;
    for (const auto& p : parts) s += p;
    return s;
  }
  std::size_t length() const { return parts.size(); }
  bool operator==(const Composition&) const = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += parts[i].str();
    }
    return s;
  }
};

namespace detail {
inline void append_block(Composition& c, const std::vector<std::uint32_t>& base, const Int& shift) {
  for (std::uint32_t x : base) c.parts.push_back(Int(x) + shift);
}
}  // namespace detail

inline Composition w_sequence(int k, int r, int s, int t) {
  if (k < 2) throw std::invalid_argument("w_sequence: k must be >= 2");
  if (r < 0 || s < 0 || t < 0 || t > s) throw std::invalid_argument("w_sequence: need r, s >= 0 and 0 <= t <= s");
  PtePair p = pte_split(k);
  Int block = pow2(k);
  Composition out;
  out.parts.reserve(static_cast<std::size_t>(1) << (k - 1) << 1);
  for (int i = 0; i < r; ++i) detail::append_block(out, p.t_bar, 0);
  for (int i = 0; i < s; ++i) detail::append_block(out, p.t_set, 0);
  for (int j = 1; j <= t; ++j) detail::append_block(out, p.t_bar, j * block);
  detail::append_block(out, p.t_set, (t + 1) * block);
  for (int j = 1; j <= s - t; ++j) detail::append_block(out, p.t_bar, (j + t + 1) * block);
  for (int j = 1; j <= r; ++j) detail::append_block(out, p.t_set, (j + s + 1) * block);

  std::size_t expect_len = (static_cast<std::size_t>(1) << (k - 1)) * (2 * r + 2 * s + 1);
  if (out.length() != expect_len)
    throw verification_error("w_sequence: length " + std::to_string(out.length()) +
                             " != closed form " + std::to_string(expect_len));
  return out;
}

// sum of every W(k; r, s, t) with r + s = sigma
inline Int w_sum_closed_form(int k, int sigma) {
  if (k < 2) throw std::invalid_argument("w_sum_closed_form: k must be >= 2");
  Int sig = sigma;
  return int_pow(Int(4), k - 1) * (sig * sig + 5 * sig + 3) - pow2(k - 2) * (2 * sig + 1);
}

struct WFamilyMember {
  int r = 0, s = 0, t = 0;
  Composition comp;
};

// The family chain over all rows r = 0..sigma with s = sigma - r and
// t = 0..s, in that order; (sigma+1)(sigma+2)/2 members in total.
inline std::vector<WFamilyMember> w_family(int k, int sigma) {
  if (sigma < 0) throw std::invalid_argument("w_family: negative sigma");
  std::vector<WFamilyMember> fam;
  fam.reserve((sigma + 1) * (sigma + 2) / 2);
  for (int r = 0; r <= sigma; ++r) {
    int s = sigma - r;
    for (int t = 0; t <= s; ++t) fam.push_back(WFamilyMember{r, s, t, w_sequence(k, r, s, t)});
  }
  Int want = w_sum_closed_form(k, sigma);
  for (const auto& m : fam)
    if (m.comp.sum() != want)
      throw verification_error("w_family: member (" + std::to_string(m.r) + "," +
                               std::to_string(m.s) + "," + std::to_string(m.t) + ") sums to " +
                               m.comp.sum().str() + ", expected " + want.str());
  return fam;
}

// Consecutive family members must differ by one T_{k+1}+c <-> T_bar_{k+1}+c
// block swap; returns the shift c when they do.
inline std::optional<Int> block_swap_shift(const WFamilyMember& a, const WFamilyMember& b, int k) {
  PtePair next = pte_split(k + 1);
  std::vector<Int> pa = a.comp.parts, pb = b.comp.parts;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  std::vector<Int> removed, added;
  std::set_difference(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(removed));
  std::set_difference(pb.begin(), pb.end(), pa.begin(), pa.end(), std::back_inserter(added));
  if (removed.size() != next.t_set.size() || added.size() != next.t_bar.size())
    return std::nullopt;
  Int c = removed.empty() ? Int(0) : removed[0] - next.t_set[0];
  if (c < 0) return std::nullopt;
  for (std::size_t i = 0; i < removed.size(); ++i)
    if (removed[i] != Int(next.t_set[i]) + c) return std::nullopt;
  for (std::size_t i = 0; i < added.size(); ++i)
    if (added[i] != Int(next.t_bar[i]) + c) return std::nullopt;
  return c;
}

inline nlohmann::ordered_json w_family_to_json(int k, int sigma,
                                               const std::vector<WFamilyMember>& fam) {
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (const auto& m : fam) {
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const auto& p : m.comp.parts) parts.push_back(p.str());
    members.push_back({{"r", m.r}, {"s", m.s}, {"t", m.t}, {"parts", parts}});
  }
  return {{"k", k}, {"sigma", sigma}, {"members", members}};
}

}  // namespace grahamlab
