// Stanley-style decomposition of S/I above a degree anchor: one pair per
// standard monomial of the anchor slice, carrying the largest used variable
// index per block.  Summing the resulting shifted-box counts reproduces the
// Hilbert function everywhere above the anchor, and expanding the binomial
// factors symbolically yields the Hilbert polynomial.
#pragma once

#include "mghilb/poly.hpp"
#include "mghilb/ring.hpp"
#include "mghilb/stable.hpp"

namespace mghilb {

struct StanleyPair {
  Monomial base;
  std::vector<int> sigma;  // per block: largest variable index dividing base
};

struct PartialDecomposition {
  ProductRing ring;
  DegreeVector anchor;
  std::vector<StanleyPair> pairs;
};

// Requires a strongly multistable ideal and an anchor dominating its
// generating degrees; only then do the shifted boxes partition the standard
// monomials above the anchor.
inline PartialDecomposition partial_decomposition(const MonomialIdeal& I,
                                                  const DegreeVector& a) {
  if (static_cast<int>(a.size()) != I.ring.s())
    throw input_error("anchor has wrong length");
  if (!is_strongly_multistable(I))
    throw input_error("decomposition needs a strongly multistable ideal");
  if (!leq_componentwise(generation_bound(I), a))
    throw input_error("anchor must dominate the generating degrees");
  PartialDecomposition D{I.ring, a, {}};
  for (const Monomial& m : enumerate_degree_slice(I.ring, a)) {
    if (ideal_contains(I, m)) continue;
    MonomialStats st = monomial_stats(I.ring, m);
    std::vector<int> sigma(I.ring.s(), 0);
    for (int i = 0; i < I.ring.s(); ++i)
      sigma[i] = st.defined[i] ? st.m_sup[i] : 0;
    D.pairs.push_back({m, std::move(sigma)});
  }
  return D;
}

// Count of standard monomials at degree b >= anchor, by summing the free
// boxes: each pair contributes prod_i binom(b_i - a_i + n_i - sigma_i,
// n_i - sigma_i).
inline Int decomposition_hilbert(const PartialDecomposition& D,
                                 const DegreeVector& b) {
  if (static_cast<int>(b.size()) != D.ring.s())
    throw input_error("degree vector has wrong length");
  if (!leq_componentwise(D.anchor, b))
    throw input_error("decomposition only counts degrees above its anchor");
  Int total = 0;
  for (const StanleyPair& p : D.pairs) {
    Int term = 1;
    for (int i = 0; i < D.ring.s(); ++i) {
      int free_vars = D.ring.blocks[i] - p.sigma[i];
      term *= binomial(b[i] - D.anchor[i] + free_vars, Int(free_vars));
    }
    total += term;
  }
  return total;
}

// The same sum with t_i left symbolic: the Hilbert polynomial of S/I,
// valid wherever the decomposition counts.
inline MPoly decomposition_polynomial(const PartialDecomposition& D) {
  int s = D.ring.s();
  MPoly total(s);
  for (const StanleyPair& p : D.pairs) {
    MPoly term(s, Rat(1));
    for (int i = 0; i < s; ++i) {
      int free_vars = D.ring.blocks[i] - p.sigma[i];
      UPoly factor = binom_poly(Int(free_vars) - D.anchor[i], free_vars);
      term = term * MPoly::from_upoly(factor, s, i);
    }
    total = total + term;
  }
  return total;
}

}  // namespace mghilb
