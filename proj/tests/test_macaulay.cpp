#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "mghilb/macaulay.hpp"

using namespace mghilb;

TEST_CASE("binomial representation of small values") {
  MacaulayRep r = macaulay_rep(4, 2);
  REQUIRE(r.kappas == std::vector<Int>{3, 1});
  REQUIRE(r.value() == 4);

  r = macaulay_rep(5, 2);
  REQUIRE(r.kappas == std::vector<Int>{3, 2});
  REQUIRE(r.value() == 5);

  r = macaulay_rep(0, 3);
  REQUIRE(r.kappas == std::vector<Int>{2, 1, 0});
  REQUIRE(r.value() == 0);
}

TEST_CASE("binomial representation rejects bad arguments") {
  REQUIRE_THROWS_AS(macaulay_rep(3, 0), input_error);
  REQUIRE_THROWS_AS(macaulay_rep(-1, 2), input_error);
}

TEST_CASE("binomial representation round-trips") {
  for (int d = 1; d <= 6; ++d)
    for (Int alpha = 0; alpha <= 10000; ++alpha)
      REQUIRE(macaulay_rep(alpha, d).value() == alpha);
}

TEST_CASE("growth operator values") {
  for (int d = 1; d <= 4; ++d) REQUIRE(macaulay_growth(0, d) == 0);
  REQUIRE(macaulay_growth(5, 2) == 7);
  REQUIRE(macaulay_growth(3, 1) == 6);
}

TEST_CASE("growth operator is monotone") {
  // adjacent pairs suffice by transitivity
  for (int d = 1; d <= 4; ++d)
    for (Int alpha = 0; alpha < 500; ++alpha)
      REQUIRE(macaulay_growth(alpha, d) <= macaulay_growth(alpha + 1, d));
}

TEST_CASE("polynomial representations and their lengths") {
  UPoly two{Rat(2)};
  GotzmannRep r = gotzmann_rep(two);
  REQUIRE(r.a == std::vector<Int>{0, 0});
  REQUIRE(r.number() == 2);
  REQUIRE(r.value() == two);

  UPoly one{Rat(1)};
  REQUIRE(gotzmann_rep(one).a == std::vector<Int>{0});

  UPoly p = UPoly::var() + one;  // t + 1
  r = gotzmann_rep(p);
  REQUIRE(r.a == std::vector<Int>{1});
  REQUIRE(gotzmann_number(p) == 1);
  REQUIRE(r.value() == p);

  UPoly q = UPoly::var() * Rat(2) + UPoly(Rat(4));  // 2t + 4
  r = gotzmann_rep(q);
  REQUIRE(r.number() == 5);
  REQUIRE(r.a == std::vector<Int>{1, 1, 0, 0, 0});
  REQUIRE(r.value() == q);

  UPoly w = UPoly::var() * Rat(3) + UPoly(Rat(7));  // 3t + 7
  REQUIRE(gotzmann_number(w) == 10);
  REQUIRE(gotzmann_rep(w).value() == w);

  REQUIRE(gotzmann_number(UPoly()) == 0);
}

TEST_CASE("polynomials without a representation are rejected") {
  REQUIRE_FALSE(try_gotzmann_rep(UPoly(Rat(-1))).has_value());
  REQUIRE_FALSE(try_gotzmann_rep(UPoly::var() - UPoly(Rat(3))).has_value());
  REQUIRE_FALSE(try_gotzmann_rep(UPoly::var() * Rat(1, 2)).has_value());
  REQUIRE_THROWS_AS(gotzmann_rep(UPoly(Rat(-1))), input_error);
}

TEST_CASE("representation length cap is enforced") {
  REQUIRE_THROWS_AS(gotzmann_rep(UPoly(Rat(2000000))), scan_error);
  REQUIRE_THROWS_AS(gotzmann_rep(UPoly::var() + UPoly(Rat(1)), Int(0)), scan_error);
}

TEST_CASE("growth identity holds from the representation length on") {
  auto growth_matches = [](const UPoly& P, const Int& t) {
    auto pt = rat_to_int(P(t));
    auto pn = rat_to_int(P(Int(t + 1)));
    REQUIRE(pt.has_value());
    REQUIRE(pn.has_value());
    return macaulay_growth(*pt, int_to_machine(t, "degree")) == *pn;
  };

  UPoly q = UPoly::var() * Rat(2) + UPoly(Rat(4));  // 2t + 4, length 5
  REQUIRE_FALSE(growth_matches(q, 4));  // one step below the length it can fail
  for (Int t = 5; t <= 15; ++t) REQUIRE(growth_matches(q, t));

  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 10; ++trial) {
    UPoly P = mghilb::testing::random_admissible_upoly(rng);
    Int D = gotzmann_number(P);
    for (Int t = D; t <= D + 10; ++t) {
      if (t < 1) continue;
      REQUIRE(growth_matches(P, t));
    }
  }
}

TEST_CASE("directional division") {
  CronaDivision d = crona_division(16, 2, 3);
  REQUIRE(d.divisor == 10);
  REQUIRE(d.q == 1);
  REQUIRE(d.r == 6);

  d = crona_division(0, 3, 2);
  REQUIRE(d.q == 0);
  REQUIRE(d.r == 0);

  d = crona_division(9, 1, 2);
  REQUIRE(d.divisor == 3);
  REQUIRE(d.q == 3);
  REQUIRE(d.r == 0);

  REQUIRE_THROWS_AS(crona_division(-1, 2, 3), input_error);
}

TEST_CASE("directional growth") {
  REQUIRE(crona_growth(16, 2, 3) == 22);
  REQUIRE(crona_growth(9, 1, 2) == 12);  // zero remainder: q * binom(n+b+1, n)
  REQUIRE(crona_growth(1, 0, 1) == 1);
  REQUIRE_THROWS_AS(crona_growth(5, 2, 0), input_error);
}

TEST_CASE("directional growth bounds Hilbert growth on random ideals") {
  std::mt19937_64 rng(991);
  ProductRing ring({1, 1});
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 15; ++trial) {
    MonomialIdeal I =
        mghilb::testing::random_multistable_ideal(ring, rng, 3, 3);
    DegreeVector bound{Int(4), Int(4)};
    if (!leq_componentwise(generation_bound(I), bound)) continue;
    Multilexification ml = multilex_ideal(I, bound);
    if (!ml.complete) continue;
    DegreeVector gb = generation_bound(ml.ideal);
    DegreeVector lo{std::max(gb[0], Int(1)), std::max(gb[1], Int(1))};
    if (lo[0] > 3 || lo[1] > 3) continue;
    ++tested;
    for (Int b1 = lo[0]; b1 <= 3; ++b1)
      for (Int b2 = lo[1]; b2 <= 3; ++b2) {
        Int h = hilbert_function(I, {b1, b2});
        REQUIRE(hilbert_function(I, {b1 + 1, b2}) <=
                crona_growth(h, ring.blocks[0], b1));
        REQUIRE(hilbert_function(I, {b1, b2 + 1}) <=
                crona_growth(h, ring.blocks[1], b2));
      }
  }
  REQUIRE(tested >= 10);
}
