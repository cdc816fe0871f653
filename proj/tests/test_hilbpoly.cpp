#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mghilb/hilbpoly.hpp"

using namespace mghilb;

namespace {

MPoly three_factor_poly() {
  // t3 + 1 on axes (t1, t2, t3)
  return MPoly::var(3, 2) + MPoly(3, Rat(1));
}

FTable three_factor_table() {
  return standard_decomposition(three_factor_poly(), {Int(2), Int(2), Int(2)},
                                ProductRing({1, 2, 1}));
}

}  // namespace

TEST_CASE("decomposition tables store binomial-basis coefficients") {
  FTable F = three_factor_table();
  REQUIRE(F.p == std::vector<int>{0, 0, 1});
  REQUIRE(F.entries.size() == 2);
  REQUIRE(F.entries.at({0, 0}) == UPoly(Rat(2)));
  REQUIRE(F.entries.at({0, 1}) == UPoly(Rat(1)));
  REQUIRE(F.recompose() == three_factor_poly());
}

TEST_CASE("two-factor tables") {
  ProductRing ring({1, 2});
  MPoly P = MPoly::var(2, 1) + MPoly(2, Rat(1));
  FTable F = standard_decomposition(P, {Int(2), Int(2)}, ring);
  REQUIRE(F.entries.size() == 2);
  REQUIRE(F.entries.at({0}) == UPoly(Rat(2)));
  REQUIRE(F.entries.at({1}) == UPoly(Rat(1)));
  REQUIRE(F.recompose() == P);

  MPoly t1 = MPoly::var(2, 0), t2 = MPoly::var(2, 1);
  MPoly Q = t1 * t1 * Rat(1, 2) + t1 * Rat(3, 2) + t2 * Rat(2) + MPoly(2, Rat(2));
  FTable G = standard_decomposition(Q, {Int(2), Int(3)}, ProductRing({2, 3}));
  REQUIRE(G.p == std::vector<int>{2, 1});
  REQUIRE(G.entries.at({1}) == UPoly(Rat(2)));
  UPoly f0 = G.entries.at({0});
  REQUIRE(f0 == UPoly(std::vector<Rat>{Rat(6), Rat(3, 2), Rat(1, 2)}));
  REQUIRE(G.recompose() == Q);
}

TEST_CASE("decomposition rejects dimension mismatches") {
  MPoly P = three_factor_poly();
  REQUIRE_THROWS_AS(standard_decomposition(P, {Int(2), Int(2)}, ProductRing({1, 2, 1})),
                    input_error);
  REQUIRE_THROWS_AS(standard_decomposition(P, {Int(2), Int(2), Int(2)}, ProductRing({1, 1})),
                    input_error);
}

TEST_CASE("random polynomials round-trip through the table") {
  std::mt19937_64 rng(31337);
  for (int s : {2, 3}) {
    ProductRing ring(std::vector<int>(s, 1));
    DegreeVector a(s, Int(3));
    for (int trial = 0; trial < 20; ++trial) {
      MPoly P(s);
      for (int nterms = 0; nterms < 6; ++nterms) {
        std::vector<int> exp(s);
        for (int& e : exp) e = static_cast<int>(rng() % 4);
        Rat c(static_cast<long>(rng() % 9) - 4, 2);
        MPoly mono(s, c);
        for (int ax = 0; ax < s; ++ax)
          for (int k = 0; k < exp[ax]; ++k) mono = mono * MPoly::var(s, ax);
        P = P + mono;
      }
      FTable F = standard_decomposition(P, a, ring);
      REQUIRE(F.recompose() == P);
    }
  }
}

TEST_CASE("partial polynomials freeze all axes but one") {
  FTable F = three_factor_table();

  PartialPoly top = partial_poly(F, 1, {Int(0), Int(0), Int(1)});
  REQUIRE(top.r == 1);
  REQUIRE(top.poly == UPoly(Rat(1)));
  REQUIRE(partial_poly(F, 1, {Int(0), Int(0), Int(5)}).poly.is_zero());

  REQUIRE(partial_poly(F, 2, {Int(2), Int(0), Int(0)}).poly == UPoly(Rat(2)));
  REQUIRE(partial_poly(F, 2, {Int(2), Int(0), Int(1)}).poly == UPoly(Rat(1)));
  REQUIRE(partial_poly(F, 2, {Int(2), Int(0), Int(5)}).poly.is_zero());

  UPoly last = partial_poly(F, 3, {Int(2), Int(2), Int(0)}).poly;
  REQUIRE(last == UPoly::var() + UPoly(Rat(1)));

  REQUIRE_THROWS_AS(partial_poly(F, 0, {Int(0), Int(0), Int(0)}), input_error);
  REQUIRE_THROWS_AS(partial_poly(F, 4, {Int(0), Int(0), Int(0)}), input_error);
  REQUIRE_THROWS_AS(partial_poly(F, 2, {Int(0), Int(0)}), input_error);
}

TEST_CASE("partial polynomials evaluate consistently with the full polynomial") {
  MPoly t1 = MPoly::var(2, 0), t2 = MPoly::var(2, 1);
  MPoly Q = t1 * t1 * Rat(1, 2) + t1 * Rat(3, 2) + t2 * Rat(2) + MPoly(2, Rat(2));
  FTable G = standard_decomposition(Q, {Int(2), Int(3)}, ProductRing({2, 3}));
  for (Int u = 2; u <= 5; ++u)
    for (Int v = 3; v <= 6; ++v) {
      UPoly along2 = partial_poly(G, 2, {u, Int(0)}).poly;
      REQUIRE(along2(v) == Q.evaluate({u, v}));
    }
}

TEST_CASE("admissibility of one-variable polynomials") {
  REQUIRE(is_admissible(UPoly(Rat(2))));
  REQUIRE(is_admissible(UPoly()));
  REQUIRE(is_admissible(UPoly::var() * Rat(2) + UPoly(Rat(4))));
  REQUIRE_FALSE(is_admissible(UPoly::var() - UPoly(Rat(3))));
  REQUIRE_FALSE(is_admissible(UPoly::var() * Rat(1, 2)));
  REQUIRE_FALSE(is_admissible(UPoly(Rat(-1))));
}

TEST_CASE("admissibility of tables") {
  REQUIRE(is_admissible(three_factor_table()));

  FTable bad{ProductRing({1, 1}), {Int(2), Int(2)}, {1, 0}, {}};
  bad.entries.emplace(std::vector<int>{0},
                      UPoly::var() - UPoly(Rat(3)));
  REQUIRE_FALSE(is_admissible(bad));
}
