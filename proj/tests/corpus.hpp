// Seeded random corpora shared by the test binaries: strongly multistable
// monomial ideals (built by closing random seeds under variable exchanges)
// and admissible one-variable Hilbert polynomials (built directly from
// weakly decreasing binomial-representation sequences).
#pragma once

#include <random>
#include <vector>

#include "mghilb/macaulay.hpp"
#include "mghilb/ring.hpp"
#include "mghilb/stable.hpp"

namespace mghilb::testing {

inline Monomial random_monomial(const ProductRing& ring, std::mt19937_64& rng,
                                int max_block_degree) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < ring.s(); ++i) {
    std::uniform_int_distribution<int> degdist(0, max_block_degree);
    int deg = degdist(rng);
    std::uniform_int_distribution<int> vardist(0, ring.blocks[i]);
    for (int k = 0; k < deg; ++k) e.emplace_back(ring.block_start(i) + vardist(rng), 1);
  }
  return Monomial(std::move(e));
}

// Close random seed monomials under one-step exchanges towards smaller
// variable indices.  Exchanges preserve multidegree, so the closure stays
// within the seeds' degrees and terminates; the result is strongly
// multistable by construction.
inline MonomialIdeal random_multistable_ideal(const ProductRing& ring,
                                              std::mt19937_64& rng, int nseeds,
                                              int max_block_degree) {
  std::vector<Monomial> gens;
  for (int g = 0; g < nseeds; ++g) {
    Monomial m = random_monomial(ring, rng, max_block_degree);
    if (!m.is_one()) gens.push_back(m);
  }
  auto divisible = [&gens](const Monomial& m) {
    for (const Monomial& g : gens)
      if (g.divides(m)) return true;
    return false;
  };
  std::vector<Monomial> work = gens;
  while (!work.empty()) {
    Monomial m = work.back();
    work.pop_back();
    for (auto& [v, exp] : m.e) {
      int i = ring.var_block(v);
      int j = ring.var_index_in_block(v);
      Monomial quotient = Monomial::variable(v).divide_into(m);
      for (int k = 0; k < j; ++k) {
        Monomial swapped = quotient * Monomial::variable(ring.block_start(i) + k);
        if (!divisible(swapped)) {
          gens.push_back(swapped);
          work.push_back(swapped);
        }
      }
    }
  }
  return MonomialIdeal(ring, std::move(gens));
}

// A random one-variable Hilbert polynomial, produced as the binomial sum of
// a weakly decreasing sequence; every output admits a representation by
// construction.
inline UPoly random_admissible_upoly(std::mt19937_64& rng, int max_terms = 30,
                                     int max_a = 4) {
  std::uniform_int_distribution<int> ddist(1, max_terms);
  int D = ddist(rng);
  GotzmannRep rep;
  std::uniform_int_distribution<int> adist(0, max_a);
  Int cur = adist(rng);
  for (int i = 0; i < D; ++i) {
    std::uniform_int_distribution<long long> step(0, static_cast<long long>(cur));
    cur = Int(step(rng));
    rep.a.push_back(cur);
  }
  return rep.value();
}

}  // namespace mghilb::testing
