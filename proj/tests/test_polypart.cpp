// Exact rational polynomials, partition enumeration, distinct values of
// summed polynomials over partitions, the difference polynomial g, the
// separation thresholds R_k, and the nested block families built from them.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grahamlab/partitions.hpp"

using namespace grahamlab;

namespace {

Polynomial random_int_poly(int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<Rat> c(degree + 1);
  for (auto& x : c) x = coeff(rng);
  while (c.back() == 0) c.back() = coeff(rng);
  return Polynomial::from_coeffs(std::move(c));
}

std::vector<std::vector<int>> collect_partitions(int n) {
  std::vector<std::vector<int>> out;
  enumerate_partitions(n, [&](const std::vector<int>& p) { out.push_back(p); });
  return out;
}

}  // namespace

TEST_CASE("polynomial basics", "[polypart]") {
  Polynomial cube = Polynomial::parse("1,0,0,0");
  REQUIRE(cube == Polynomial::monomial(3));
  REQUIRE(cube.degree() == 3);
  REQUIRE(cube.format() == "1,0,0,0");

  Polynomial halves = Polynomial::parse("1/2,3/2,5/2");
  REQUIRE(halves.coeff(2) == Rat(1, 2));
  REQUIRE(halves.coeff(0) == Rat(5, 2));
  REQUIRE(Polynomial::parse(halves.format()) == halves);

  REQUIRE(Polynomial::parse("1,0,1")(10) == 101);
  REQUIRE(cube.shift(1) == Polynomial::parse("1,3,3,1"));
  REQUIRE(cube.shift(Rat(-1)).coeff(0) == -1);
  REQUIRE(Polynomial().degree() == -1);
  REQUIRE(Polynomial::from_coeffs({Rat(3), Rat(0), Rat(0)}).degree() == 0);
  REQUIRE(cube.max_abs_coeff() == 1);
  REQUIRE(Polynomial::parse("2,-7,3").max_abs_non_leading() == 7);

  for (const char* bad : {"", "1,,2", "x", "1/0"})
    REQUIRE_THROWS_AS(Polynomial::parse(bad), std::invalid_argument);
}

TEST_CASE("interpolation recovers exact polynomials", "[polypart]") {
  std::vector<std::pair<Rat, Rat>> pts{{Rat(0), Rat(5, 2)}, {Rat(1), Rat(9, 2)}, {Rat(2), Rat(15, 2)}};
  REQUIRE(Polynomial::interpolate(pts) == Polynomial::parse("1/2,3/2,5/2"));
  pts.push_back({Rat(0), Rat(1)});
  REQUIRE_THROWS_AS(Polynomial::interpolate(pts), std::invalid_argument);

  std::mt19937 rng(424242);
  for (int d = 0; d <= 5; ++d) {
    Polynomial f = random_int_poly(d, rng);
    std::vector<std::pair<Rat, Rat>> sample;
    for (int x = -1; x <= d + 1; ++x) sample.emplace_back(Rat(x), f(Rat(x)));
    REQUIRE(Polynomial::interpolate(sample) == f);
  }
}

TEST_CASE("partition enumeration order and counts", "[polypart]") {
  std::vector<std::size_t> want{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) REQUIRE(collect_partitions(n).size() == want[n]);

  auto p5 = collect_partitions(5);
  REQUIRE(p5.front() == std::vector<int>{5});
  REQUIRE(p5[1] == std::vector<int>{4, 1});
  REQUIRE(p5[2] == std::vector<int>{3, 2});
  REQUIRE(p5.back() == std::vector<int>{1, 1, 1, 1, 1});

  int seen = 0;
  enumerate_partitions(8, [&](const std::vector<int>&) { return ++seen < 3; });
  REQUIRE(seen == 3);

  REQUIRE_THROWS_AS(enumerate_partitions(-1, [](const std::vector<int>&) {}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(enumerate_partitions(121, [](const std::vector<int>&) {}),
                    std::invalid_argument);
}

TEST_CASE("distinct summed values over partitions", "[polypart]") {
  Polynomial sq = Polynomial::parse("1,0,0");
  REQUIRE(f_hat(sq, std::vector<int>{2, 1, 1}) == 6);
  REQUIRE(f_hat(sq, Partition{{Int(3), Int(1)}}) == 10);

  REQUIRE(distinct_fhat_count(sq, 4) == 5);
  REQUIRE(distinct_fhat_count(sq, 5) == 7);
  REQUIRE(distinct_fhat_count(sq, 6) == 9);

  Polynomial cube = Polynomial::parse("1,0,0,0");
  for (const Polynomial& f : {sq, cube})
    for (int n = 1; n <= 12; ++n)
      REQUIRE(distinct_fhat_count(f, n) == distinct_fhat_count(f, n, 3));

  for (int n = 2; n <= 16; ++n)
    REQUIRE(distinct_fhat_count(sq, n) < distinct_fhat_count(sq, n + 1));
  REQUIRE(distinct_fhat_count(cube, 10) > distinct_fhat_count(cube, 6));

  REQUIRE_THROWS_AS(distinct_fhat_count(sq, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(distinct_fhat_count(sq, 121), std::invalid_argument);
}

TEST_CASE("difference polynomial g on hand-checked cases", "[polypart]") {
  REQUIRE(g_poly(Polynomial::parse("1,0,0,0"), 2) == Polynomial::parse("-12,-18"));
  REQUIRE(g_poly(Polynomial::parse("1,0,0,0"), 3) == Polynomial::from_coeffs({Rat(48)}));
  REQUIRE(g_poly(Polynomial::parse("1,0,0"), 2) == Polynomial::from_coeffs({Rat(-4)}));
  REQUIRE_THROWS_AS(g_poly(Polynomial::parse("1,0,0"), 3), std::invalid_argument);
  REQUIRE_THROWS_AS(g_poly(Polynomial::parse("1,0,0"), 0), std::invalid_argument);
}

TEST_CASE("difference polynomial law across degrees", "[polypart]") {
  std::mt19937 rng(31337);
  for (int d = 1; d <= 6; ++d) {
    std::vector<Polynomial> fs{Polynomial::monomial(d)};
    fs.push_back(random_int_poly(d, rng));
    fs.push_back(random_int_poly(d, rng));
    for (const Polynomial& f : fs)
      for (int k = 1; k <= d; ++k) {
        Polynomial g = g_poly(f, k);  // degree, leading term, t=0..5 checked inside
        PtePair split = pte_split(k);
        for (int t = 6; t <= 8; ++t) {
          Rat direct = 0;
          for (std::uint32_t x : split.t_set) direct += f(Rat(x + t));
          for (std::uint32_t x : split.t_bar) direct -= f(Rat(x + t));
          REQUIRE(g(Rat(t)) == direct);
        }
        Rat nonleading_sum = 0;
        for (int q = 0; q < g.degree(); ++q) nonleading_sum += rat_abs(g.coeff(q));
        Rat bound = f.max_abs_coeff() * e_upper() * d * d *
                    Rat(factorial(d) * pow2(static_cast<long long>(d) * (d + 1) / 2));
        REQUIRE(nonleading_sum <= bound);
      }
  }
}

TEST_CASE("separation thresholds", "[polypart]") {
  Polynomial cube = Polynomial::parse("1,0,0,0");
  REQUIRE(r_threshold(cube, 0) == 6263);
  REQUIRE(r_threshold(cube, 1) == 783);
  REQUIRE(r_threshold(cube, 2) == 98);

  Polynomial quartic = Polynomial::parse("1,0,0,0,0");
  Int prev = 0;
  for (int k = 0; k <= 3; ++k) {
    Int r = r_threshold(quartic, k);
    if (k > 0) {
      REQUIRE(r <= prev);
      REQUIRE(prev >= pow2(k) * (4 - k) * r);
    }
    prev = r;
  }

  REQUIRE_THROWS_AS(r_threshold(cube, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(r_threshold(cube, -1), std::invalid_argument);
  REQUIRE_THROWS_AS(r_threshold(Polynomial::parse("5"), 0), std::invalid_argument);

  REQUIRE(e_upper() > Rat(Int("271828182845904523"), Int("100000000000000000")));
  REQUIRE(e_upper() < Rat(272, 100));
}

TEST_CASE("nested families with explicit levels", "[polypart]") {
  Polynomial cube = Polynomial::parse("1,0,0,0");
  auto rep = lambda_family(cube, std::vector<LambdaLevelSpec>{{2, 2, 6, Int(0)}});
  REQUIRE(rep.members.size() == 6);
  REQUIRE(rep.fhat_values ==
          std::vector<Rat>{7305, 7257, 7209, 7161, 7113, 7065});
  REQUIRE(rep.all_distinct);
  REQUIRE(rep.partitioned_n == 63);
  REQUIRE(rep.nesting.empty());
  for (const auto& m : rep.members) REQUIRE(m.parts.size() == 10);

  REQUIRE_THROWS_AS(lambda_family(cube, std::vector<LambdaLevelSpec>{{2, 2, 7, Int(0)}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lambda_family(cube, std::vector<LambdaLevelSpec>{{2, 2, 0, Int(0)}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lambda_family(cube, std::vector<LambdaLevelSpec>{{2, 2, 6, Int(-1)}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lambda_family(cube, std::vector<LambdaLevelSpec>{}), std::invalid_argument);
}

TEST_CASE("nested families with the construction's own parameters", "[polypart]") {
  Polynomial cube = Polynomial::parse("1,0,0,0");
  auto rep = lambda_family(cube);
  REQUIRE(rep.levels.size() == 1);
  REQUIRE(rep.levels[0].k == 2);
  REQUIRE(rep.levels[0].sigma == 13);
  REQUIRE(rep.levels[0].shift == 392);
  REQUIRE(rep.members.size() == 91);
  REQUIRE(rep.all_distinct);
  REQUIRE(rep.partitioned_n == 22089);
  for (std::size_t i = 0; i + 1 < rep.fhat_values.size(); ++i)
    REQUIRE(rep.fhat_values[i] - rep.fhat_values[i + 1] == 48);

  auto single = lambda_family(cube, std::optional<std::vector<int>>{{1}});
  REQUIRE(single.members.size() == 1);
  REQUIRE(single.all_distinct);

  Polynomial quartic = Polynomial::parse("1,0,0,0,0");
  REQUIRE_THROWS_AS(lambda_family(quartic), desk_budget_error);
  auto two = lambda_family(quartic, std::optional<std::vector<int>>{{2, 2}});
  REQUIRE(two.members.size() == 9);
  REQUIRE(two.all_distinct);
  REQUIRE(two.nesting.size() == 1);
  REQUIRE(two.nesting[0].upper_k == 3);
  REQUIRE(two.nesting[0].lower_k == 2);
  REQUIRE(two.nesting[0].ok);
  REQUIRE(two.nesting_ok);

  REQUIRE_THROWS_AS(lambda_family(quartic, std::optional<std::vector<int>>{{1}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lambda_family(cube, std::optional<std::vector<int>>{{0}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lambda_family(Polynomial::parse("1,0,0")), std::invalid_argument);
}