// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "mghilb/persistence.hpp"
#include "mghilb/toric.hpp"

using namespace mghilb;

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& label) {
    if (!cond && ok) {
      ok = false;
      detail = label;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& what, double limit_sec,
               const std::function<void(Checker&)>& body) {
  Checker c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double sec = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_sec > 0 && sec >= limit_sec)
    c.expect(false, "time limit exceeded");
  char stamp[32];
  std::snprintf(stamp, sizeof stamp, " (%.2fs)", sec);
  if (c.ok) {
    std::cout << "PASS criterion " << n << ": " << what << stamp << "\n";
  } else {
    std::cout << "FAIL criterion " << n << ": " << what << " [" << c.detail
              << "]" << stamp << "\n";
    ++failures;
  }
}

Monomial dense(const std::vector<int>& row) {
  std::vector<std::pair<int, int>> e;
  for (size_t v = 0; v < row.size(); ++v)
    if (row[v]) e.emplace_back(static_cast<int>(v), row[v]);
  return Monomial(std::move(e));
}

DegreeVector deg(std::vector<long> xs) {
  DegreeVector out;
  for (long x : xs) out.push_back(Int(x));
  return out;
}

const ProductRing r23({2, 3});
const ProductRing r121({1, 2, 1});

MonomialIdeal grid_agree_I() {
  return MonomialIdeal(r23, {dense({1, 0, 0, 0, 0, 0, 0}),
                             dense({0, 0, 0, 1, 0, 0, 0}),
                             dense({0, 0, 0, 0, 2, 0, 0}),
                             dense({0, 1, 0, 0, 1, 0, 0}),
                             dense({0, 1, 0, 0, 0, 3, 0})});
}

MonomialIdeal grid_agree_J() {
  return MonomialIdeal(r23, {dense({0, 0, 0, 1, 0, 0, 0}),
                             dense({1, 0, 0, 0, 1, 0, 0}),
                             dense({1, 0, 0, 0, 0, 1, 0}),
                             dense({0, 1, 0, 0, 1, 0, 0}),
                             dense({0, 1, 0, 0, 0, 1, 0}),
                             dense({0, 0, 0, 0, 3, 0, 0}),
                             dense({0, 0, 0, 0, 2, 1, 0})});
}

MonomialIdeal box_ideal() {
  return MonomialIdeal(r121, {dense({0, 0, 1, 0, 0, 0, 0}),
                              dense({1, 0, 0, 1, 0, 0, 0}),
                              dense({1, 0, 0, 0, 1, 0, 0}),
                              dense({0, 1, 0, 1, 0, 0, 0})});
}

MPoly linear_pair() {
  return MPoly::var(2, 0) * Rat(3) + MPoly::var(2, 1) * Rat(2) +
         MPoly(2, Rat(1));
}

MPoly quadratic_pair() {
  MPoly t1 = MPoly::var(2, 0), t2 = MPoly::var(2, 1);
  return t1 * t1 * Rat(1, 2) + t1 * Rat(3, 2) + t2 * Rat(2) + MPoly(2, Rat(2));
}

MPoly last_axis_plus_one() { return MPoly::var(3, 2) + MPoly(3, Rat(1)); }

CoxRing surface_ring() {
  return CoxRing({deg({1, 0}), deg({-1, 1}), deg({1, 0}), deg({0, 1})}, 2);
}

const std::vector<DegreeVector> surface_nef = {deg({1, 0}), deg({0, 1})};

CoxRing rank3_ring() {
  return CoxRing({deg({-1, 1, 0}), deg({1, 0, 0}), deg({-1, 1, 0}),
                  deg({0, 1, 0}), deg({0, 0, 1}), deg({0, 0, 1})},
                 3);
}

const std::vector<DegreeVector> rank3_nef = {deg({-1, 1, 0}), deg({0, 1, 0}),
                                             deg({0, 0, 1})};

ToricIdeal rank3_ideal() {
  return ToricIdeal(rank3_ring(), {dense({0, 0, 0, 1, 0, 0}),
                                   dense({2, 1, 0, 0, 0, 0}),
                                   dense({1, 1, 1, 0, 0, 0})});
}

std::vector<MonomialIdeal> standard_corpus() {
  std::vector<MonomialIdeal> corpus;
  std::mt19937_64 rng(4242);
  for (const std::vector<int>& blocks :
       {std::vector<int>{1, 1}, std::vector<int>{1, 2}}) {
    ProductRing ring(blocks);
    for (int i = 0; i < 60; ++i)
      corpus.push_back(
          mghilb::testing::random_multistable_ideal(ring, rng, 2, 2));
  }
  return corpus;
}

}  // namespace

int main() {
  criterion(1, "paired ideals: values, low-grid agreement, interpolants", 1.0,
            [](Checker& c) {
              MonomialIdeal I = grid_agree_I();
              MonomialIdeal J = grid_agree_J();
              c.expect(hilbert_function(I, {Int(3), Int(3)}) == 16,
                       "first value at (3,3)");
              c.expect(hilbert_function(J, {Int(3), Int(3)}) == 17,
                       "second value at (3,3)");
              for (Int b1 = 1; b1 <= 2; ++b1)
                for (Int b2 = 3; b2 <= 4; ++b2)
                  c.expect(hilbert_function(I, {b1, b2}) ==
                               hilbert_function(J, {b1, b2}),
                           "agreement on the low grid");
              c.expect(interpolate_hilbert_polynomial(I, {Int(2), Int(3)}) ==
                           linear_pair(),
                       "first interpolant");
              c.expect(interpolate_hilbert_polynomial(J, {Int(2), Int(3)}) ==
                           quadratic_pair(),
                       "second interpolant");
            });

  criterion(2, "decomposition table entries and partial polynomials", 0,
            [](Checker& c) {
              FTable F = standard_decomposition(
                  last_axis_plus_one(), {Int(2), Int(2), Int(2)}, r121);
              c.expect(F.entries.size() == 2, "exactly two nonzero entries");
              c.expect(F.entries.count({0, 0}) &&
                           F.entries.at({0, 0}) == UPoly(Rat(2)),
                       "entry at (0,0)");
              c.expect(F.entries.count({0, 1}) &&
                           F.entries.at({0, 1}) == UPoly(Rat(1)),
                       "entry at (0,1)");
              c.expect(F.recompose() == last_axis_plus_one(), "recomposition");
              c.expect(partial_poly(F, 2, {Int(2), Int(0), Int(0)}).poly ==
                           UPoly(Rat(2)),
                       "partial slice at suffix 0");
              c.expect(partial_poly(F, 2, {Int(2), Int(0), Int(1)}).poly ==
                           UPoly(Rat(1)),
                       "partial slice at suffix 1");
            });

  criterion(3, "persistence point, box confirmation, perturbed rejection", 1.0,
            [](Checker& c) {
              PersistencePoint pt = find_persistence_point(
                  last_axis_plus_one(), {Int(2), Int(2), Int(2)}, r121);
              c.expect(pt.d == DegreeVector{Int(2), Int(2), Int(2)},
                       "check point");
              Verdict v = check_box(box_ideal(), last_axis_plus_one(), pt);
              c.expect(v.confirmed && v.matched == 8, "box confirmation");
              MPoly off = last_axis_plus_one() + MPoly(3, Rat(1));
              Verdict w =
                  verify_polynomial(box_ideal(), off, {Int(2), Int(2), Int(2)});
              c.expect(!w.confirmed && w.failing_point.has_value(),
                       "perturbation rejected with a failing point");
            });

  criterion(4, "rank-2 surface transport with unit stabilization", 0,
            [](Checker& c) {
              CoxRing R = surface_ring();
              CompanionRing comp = companion_ring(R, surface_nef);
              c.expect(comp.ring.blocks == std::vector<int>{1, 2},
                       "companion blocks");
              ToricIdeal Z(R, {dense({1, 0, 0, 0})});
              MPoly P = MPoly::var(2, 1) + MPoly(2, Rat(1));
              Verdict v = verify_toric(R, Z, P, surface_nef, {Int(2), Int(2)});
              c.expect(v.confirmed && v.matched == 4, "transport confirmed");
              c.expect(v.point.has_value() &&
                           v.point->d == DegreeVector{Int(2), Int(2)},
                       "check point");
              c.expect(v.point.has_value() &&
                           v.point->box() ==
                               std::vector<DegreeVector>{{Int(2), Int(2)},
                                                         {Int(2), Int(3)},
                                                         {Int(3), Int(2)},
                                                         {Int(3), Int(3)}},
                       "four check points");
              PersistencePoint cp = find_persistence_point(
                  P, {Int(2), Int(2)}, comp.ring);
              c.expect(cp.axes[1].c_unrestricted == 1,
                       "unit stabilization on the moving axis");
              c.expect(c_value(UPoly::var() + UPoly(Rat(1)), 1, Int(1)).c == 1,
                       "unit stabilization of the line");
            });

  criterion(5, "rank-3 transport, zonotope vertices, surjective lifts", 0,
            [](Checker& c) {
              c.expect(f_map(rank3_nef, deg({2, 2, 2})) == deg({-2, 4, 2}),
                       "degree transport");
              c.expect(zonotope(rank3_nef, deg({2, 2, 2})) ==
                           std::vector<DegreeVector>{
                               deg({-2, 4, 2}), deg({-2, 4, 3}),
                               deg({-2, 5, 2}), deg({-2, 5, 3}),
                               deg({-3, 5, 2}), deg({-3, 5, 3}),
                               deg({-3, 6, 2}), deg({-3, 6, 3})},
                       "zonotope vertices");
              Verdict v =
                  verify_toric(rank3_ring(), rank3_ideal(), last_axis_plus_one(),
                               rank3_nef, {Int(2), Int(2), Int(2)});
              c.expect(v.confirmed && v.matched == 8, "transport confirmed");
              for (const DegreeVector& b :
                   degree_box({Int(2), Int(2), Int(2)}))
                c.expect(tau_slice(rank3_ring(), rank3_ideal(), rank3_nef, b)
                             .surjective,
                         "surjective lift at a hypercube vertex");
            });

  criterion(6, "no joint growth point, yet verification succeeds", 0,
            [](Checker& c) {
              ProductRing r12({1, 2});
              MonomialIdeal I(r12, {dense({0, 0, 2, 0, 0}),
                                    dense({1, 0, 1, 0, 0}),
                                    dense({1, 0, 0, 3, 0})});
              MPoly P = interpolate_hilbert_polynomial(I, {Int(2), Int(3)});
              c.expect(P == linear_pair(), "interpolant");
              for (int d2 : {3, 4, 5}) {
                UPoly rest = UPoly::var() * Rat(3) + UPoly(Rat(2 * d2 + 1));
                c.expect(gotzmann_number(rest) == 2 * d2 + 4,
                         "representation length along the first axis");
              }
              for (int d1 : {1, 2, 3}) {
                UPoly rest = UPoly::var() * Rat(2) + UPoly(Rat(3 * d1 + 1));
                c.expect(gotzmann_number(rest) == 3 * d1 + 2,
                         "representation length along the second axis");
              }
              c.expect(!joint_growth_point(P, {Int(1), Int(1)},
                                           {Int(25), Int(25)})
                            .has_value(),
                       "no jointly feasible point");
              Verdict v = verify_polynomial(I, P, {Int(2), Int(3)});
              c.expect(v.confirmed, "verification confirms");
            });

  criterion(7, "property suites over random corpora", 0, [](Checker& c) {
    // (a) exhaustive round-trip and monotonicity of the growth operator
    for (int d = 1; d <= 4; ++d)
      for (long alpha = 0; alpha <= 500; ++alpha) {
        c.expect(macaulay_rep(Int(alpha), d).value() == alpha,
                 "representation round-trip");
        if (alpha < 500)
          c.expect(macaulay_growth(Int(alpha), d) <=
                       macaulay_growth(Int(alpha + 1), d),
                   "growth monotonicity");
      }

    // (b) one-variable persistence identity past the representation length
    {
      std::mt19937_64 rng(9001);
      for (int trial = 0; trial < 50; ++trial) {
        UPoly P = mghilb::testing::random_admissible_upoly(rng);
        Int D = gotzmann_number(P);
        for (Int t = D; t <= D + 10; ++t) {
          if (t < 1) continue;
          auto pt = rat_to_int(P(t));
          auto pn = rat_to_int(P(Int(t + 1)));
          c.expect(pt.has_value() && pn.has_value() &&
                       macaulay_growth(*pt, int_to_machine(t, "degree")) == *pn,
                   "one-variable persistence identity");
        }
      }
    }

    std::vector<MonomialIdeal> corpus = standard_corpus();

    // (c) Hilbert function preservation under multilexification
    {
      int done = 0;
      for (const MonomialIdeal& I : corpus) {
        DegreeVector bound = {Int(4), Int(4)};
        if (!leq_componentwise(generation_bound(I), bound)) continue;
        Multilexification ml = multilex_ideal(I, bound);
        for (Int b1 = 0; b1 <= 4; ++b1)
          for (Int b2 = 0; b2 <= 4; ++b2)
            c.expect(hilbert_function(I, {b1, b2}) ==
                         hilbert_function(ml.ideal, {b1, b2}),
                     "multilexification preserves the Hilbert function");
        ++done;
      }
      c.expect(done >= 100, "at least 100 multilexifications exercised");
    }

    // (d) decomposition values match direct counts near the anchor
    for (const MonomialIdeal& I : corpus) {
      DegreeVector a = generation_bound(I);
      PartialDecomposition D = partial_decomposition(I, a);
      for (Int u = 0; u <= 2; ++u)
        for (Int v = 0; v <= 2; ++v) {
          DegreeVector b = {a[0] + u, a[1] + v};
          c.expect(decomposition_hilbert(D, b) == hilbert_function(I, b),
                   "decomposition matches the Hilbert function");
        }
    }

    // (e) interpolants verify on the full corpus
    PersistenceOptions opts;
    opts.scan_cap = Int(10000);
    std::vector<MPoly> interpolants;
    for (const MonomialIdeal& I : corpus) {
      DegreeVector a = generation_bound(I);
      for (Int& x : a) x = std::max(x, Int(2));
      MPoly P = interpolate_hilbert_polynomial(I, a);
      interpolants.push_back(P);
      Verdict v = verify_polynomial(I, P, a, opts);
      c.expect(v.confirmed, "interpolant confirmed");
    }

    // (f) perturbed candidates are rejected
    {
      int rejected = 0;
      for (size_t i = 0; i < corpus.size() && i < 100; ++i) {
        const MonomialIdeal& I = corpus[i];
        DegreeVector a = generation_bound(I);
        for (Int& x : a) x = std::max(x, Int(2));
        MPoly off = interpolants[i];
        if (i % 2 == 0)
          off = off + MPoly(2, Rat(1 + static_cast<long>(i % 3)));
        else
          off = off + MPoly::var(2, static_cast<int>((i / 2) % 2));
        // default scan cap: a perturbed candidate whose slices never obey
        // the growth step should be rejected quickly, not scanned forever
        Verdict v = verify_polynomial(I, off, a);
        if (!v.confirmed) ++rejected;
      }
      c.expect(rejected == 100, "all 100 perturbed candidates rejected");
    }
  });

  if (failures == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures;
}
