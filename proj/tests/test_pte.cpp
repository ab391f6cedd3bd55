// Digit-parity splits of {0..2^k-1}, their matching power sums and first
// defect, the W(k; r, s, t) concatenated sequences, and the family chain
// where consecutive members trade one shifted block for its complement.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <vector>

#include "grahamlab/pte.hpp"

using namespace grahamlab;

namespace {

std::vector<Int> to_ints(const std::vector<std::uint32_t>& xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("digit-parity splits for small k", "[pte]") {
  REQUIRE(pte_split(1).t_set == std::vector<std::uint32_t>{1});
  REQUIRE(pte_split(1).t_bar == std::vector<std::uint32_t>{0});
  REQUIRE(pte_split(2).t_set == std::vector<std::uint32_t>{1, 2});
  REQUIRE(pte_split(2).t_bar == std::vector<std::uint32_t>{0, 3});
  REQUIRE(pte_split(3).t_set == std::vector<std::uint32_t>{1, 2, 4, 7});
  REQUIRE(pte_split(3).t_bar == std::vector<std::uint32_t>{0, 3, 5, 6});
  REQUIRE_THROWS_AS(pte_split(0), std::invalid_argument);
  REQUIRE_THROWS_AS(pte_split(21), std::invalid_argument);
}

TEST_CASE("power sums agree below k and first defect is exact", "[pte]") {
  for (int k = 1; k <= 10; ++k) {
    PtePair p = pte_split(k);
    REQUIRE(p.t_set.size() == p.t_bar.size());
    for (int m = 0; m < k; ++m) REQUIRE(power_sum(p.t_set, m) == power_sum(p.t_bar, m));
    REQUIRE(pte_defect(k, 0) == pte_defect_formula(k));
    REQUIRE(pte_defect(k, 0) != 0);
  }
  REQUIRE(pte_defect_formula(1) == 1);
  REQUIRE(pte_defect_formula(2) == -4);
  REQUIRE(pte_defect_formula(3) == 48);
  REQUIRE(pte_defect_formula(4) == -1536);
}

TEST_CASE("higher defects respect the factorial bound", "[pte]") {
  for (int k = 1; k <= 8; ++k)
    for (int j = 0; j <= 5; ++j) {
      Int bound = factorial(k + j) * pow2((k + j + 1) * (k + j) / 2);
      REQUIRE(abs(pte_defect(k, j)) <= bound);
    }
}

TEST_CASE("hand-checked w sequences", "[pte]") {
  Composition w221 = w_sequence(2, 2, 2, 1);
  REQUIRE(w221.parts == to_ints({0, 3, 0, 3, 1, 2, 1, 2, 4, 7, 9, 10, 12, 15, 17, 18, 21, 22}));

  Composition w311 = w_sequence(3, 3, 1, 1);
  REQUIRE(w311.parts == to_ints({0,  3,  5,  6,  0,  3,  5,  6,  0,  3,  5,  6,
                                 1,  2,  4,  7,  8,  11, 13, 14, 17, 18, 20, 23,
                                 25, 26, 28, 31, 33, 34, 36, 39, 41, 42, 44, 47}));
  REQUIRE(w311.parts[21] == 18);

  REQUIRE_THROWS_AS(w_sequence(1, 0, 0, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(w_sequence(2, 1, 1, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(w_sequence(2, -1, 0, 0), std::invalid_argument);
}

TEST_CASE("w sums and lengths depend only on r+s", "[pte]") {
  for (int k = 2; k <= 4; ++k)
    for (int sigma = 0; sigma <= 4; ++sigma) {
      Int want_sum = w_sum_closed_form(k, sigma);
      std::size_t want_len = (std::size_t{1} << (k - 1)) * (2 * sigma + 1);
      for (int r = 0; r <= sigma; ++r)
        for (int t = 0; t <= sigma - r; ++t) {
          Composition w = w_sequence(k, r, sigma - r, t);
          REQUIRE(w.length() == want_len);
          REQUIRE(w.sum() == want_sum);
        }
    }
  REQUIRE(w_sum_closed_form(2, 2) == 63);
  REQUIRE(w_sum_closed_form(2, 4) == 147);
  REQUIRE_THROWS_AS(w_sum_closed_form(1, 2), std::invalid_argument);
}

TEST_CASE("family chain walks by single block swaps", "[pte]") {
  auto fam = w_family(2, 2);
  REQUIRE(fam.size() == 6);
  std::vector<std::array<int, 3>> order;
  for (const auto& m : fam) order.push_back({m.r, m.s, m.t});
  REQUIRE(order == std::vector<std::array<int, 3>>{
                       {0, 2, 0}, {0, 2, 1}, {0, 2, 2}, {1, 1, 0}, {1, 1, 1}, {2, 0, 0}});
  std::vector<Int> shifts;
  for (std::size_t i = 0; i + 1 < fam.size(); ++i) {
    auto c = block_swap_shift(fam[i], fam[i + 1], 2);
    REQUIRE(c.has_value());
    shifts.push_back(*c);
  }
  REQUIRE(shifts == std::vector<Int>{4, 8, 0, 4, 0});
  REQUIRE_FALSE(block_swap_shift(fam[0], fam[2], 2).has_value());
  REQUIRE_FALSE(block_swap_shift(fam[0], fam[0], 2).has_value());

  auto fam31 = w_family(3, 1);
  REQUIRE(fam31.size() == 3);
  for (const auto& m : fam31) REQUIRE(m.comp.length() == 12);
  for (std::size_t i = 0; i + 1 < fam31.size(); ++i)
    REQUIRE(block_swap_shift(fam31[i], fam31[i + 1], 3).has_value());

  REQUIRE(w_family(2, 0).size() == 1);
  REQUIRE_THROWS_AS(w_family(2, -1), std::invalid_argument);
}

TEST_CASE("family power sums: equal through k, arithmetic at k+1", "[pte]") {
  for (int k = 2; k <= 3; ++k)
    for (int sigma = 1; sigma <= 3; ++sigma) {
      auto fam = w_family(k, sigma);
      REQUIRE(fam.size() == static_cast<std::size_t>((sigma + 1) * (sigma + 2) / 2));
      for (int m = 0; m <= k; ++m)
        for (std::size_t i = 1; i < fam.size(); ++i)
          REQUIRE(power_sum(fam[i].comp.parts, m) == power_sum(fam[0].comp.parts, m));
      Int step = -pte_defect_formula(k + 1);
      for (std::size_t i = 0; i + 1 < fam.size(); ++i)
        REQUIRE(power_sum(fam[i + 1].comp.parts, k + 1) -
                    power_sum(fam[i].comp.parts, k + 1) ==
                step);
    }

  auto fam = w_family(2, 2);
  std::vector<Int> s3;
  for (const auto& m : fam) {
    REQUIRE(power_sum(m.comp.parts, 2) == 625);
    s3.push_back(power_sum(m.comp.parts, 3));
  }
  REQUIRE(s3 == std::vector<Int>{7305, 7257, 7209, 7161, 7113, 7065});
}

TEST_CASE("family json layout", "[pte]") {
  auto fam = w_family(2, 1);
  auto j = w_family_to_json(2, 1, fam);
  REQUIRE(j["k"] == 2);
  REQUIRE(j["sigma"] == 1);
  REQUIRE(j["members"].size() == 3);
  REQUIRE(j["members"][0]["r"] == 0);
  REQUIRE(j["members"][0]["s"] == 1);
  REQUIRE(j["members"][0]["t"] == 0);
  REQUIRE(j["members"][0]["parts"].size() == 6);
  REQUIRE(j["members"][0]["parts"][0].get<std::string>() == "1");
}