// Binomial-basis decomposition of multivariate Hilbert polynomial
// candidates: rewrite P(t_1,...,t_s) over the tensor basis
// binom(t_j - a_j + i_j, i_j) for j >= 2 with univariate coefficients in
// t_1, extract the one-variable partial polynomials obtained by freezing
// all but one axis, and test admissibility entrywise.
#pragma once

#include <map>

#include "mghilb/macaulay.hpp"
#include "mghilb/poly.hpp"
#include "mghilb/ring.hpp"

namespace mghilb {

// P = sum over keys (i_2,...,i_s) of entry(t_1) * prod_j binom(t_j-a_j+i_j, i_j).
// Keys store only nonzero entries; p[r-1] is the degree of P in t_r.
struct FTable {
  ProductRing ring;
  DegreeVector anchor;
  std::vector<int> p;
  std::map<std::vector<int>, UPoly> entries;

  MPoly recompose() const {
    int s = ring.s();
    MPoly total(s);
    for (const auto& [key, f] : entries) {
      MPoly term = MPoly::from_upoly(f, s, 0);
      for (int j = 1; j < s; ++j)
        term = term * MPoly::from_upoly(
                          binom_poly(Int(key[j - 1]) - anchor[j], key[j - 1]), s, j);
      total = total + term;
    }
    return total;
  }
};

inline Rat factorial_rat(int k) {
  Rat f = 1;
  for (int i = 2; i <= k; ++i) f *= Rat(i);
  return f;
}

// Exact synthetic division along each axis j >= 2, highest degree first:
// the coefficient of binom(t_j - a_j + i, i) is (layer at t_j^i) * i!.
inline FTable standard_decomposition(const MPoly& P, const DegreeVector& a,
                                     const ProductRing& ring) {
  int s = ring.s();
  if (P.nvars() != s) throw input_error("polynomial has wrong dimension");
  if (static_cast<int>(a.size()) != s) throw input_error("anchor has wrong length");
  FTable F{ring, a, maxdeg(P), {}};

  std::map<std::vector<int>, MPoly> work;
  work.emplace(std::vector<int>{}, P);
  for (int axis = 1; axis < s; ++axis) {
    std::map<std::vector<int>, MPoly> next;
    for (auto& [key, Q] : work) {
      MPoly rem = Q;
      for (int i = rem.degree_in(axis); i >= 0; --i) {
        MPoly G = rem.layer(axis, i) * factorial_rat(i);
        if (!G.is_zero()) {
          std::vector<int> k2 = key;
          k2.push_back(i);
          auto it = next.find(k2);
          if (it == next.end())
            next.emplace(std::move(k2), G);
          else
            it->second = it->second + G;
          rem = rem - G * MPoly::from_upoly(binom_poly(Int(i) - a[axis], i), s, axis);
        }
        if (rem.is_zero()) break;
      }
    }
    work = std::move(next);
  }
  for (auto& [key, Q] : work) {
    UPoly f = Q.to_upoly(0);
    if (!f.is_zero()) F.entries.emplace(key, std::move(f));
  }
  return F;
}

// Freeze every axis except t_r (1-based).  For r = 1 the result is the
// stored entry at (b_2,...,b_s); for r >= 2 the axes below r are evaluated
// at the given values and the axes above r are pinned to table indices.
struct PartialPoly {
  int r;
  std::vector<Int> fixed;  // length s; entry r-1 unused
  UPoly poly;
};

inline PartialPoly partial_poly(const FTable& F, int r,
                                const std::vector<Int>& fixed) {
  int s = F.ring.s();
  if (r < 1 || r > s) throw input_error("axis index out of range");
  if (static_cast<int>(fixed.size()) != s)
    throw input_error("fixed vector has wrong length");

  if (r == 1) {
    std::vector<int> key;
    for (int j = 1; j < s; ++j)
      key.push_back(int_to_machine(fixed[j], "table index"));
    auto it = F.entries.find(key);
    return {r, fixed, it == F.entries.end() ? UPoly() : it->second};
  }

  UPoly total;
  for (const auto& [key, f] : F.entries) {
    bool match = true;
    for (int j = r + 1; j <= s; ++j)
      if (Int(key[j - 2]) != fixed[j - 1]) {
        match = false;
        break;
      }
    if (!match) continue;
    Rat coeff = f(fixed[0]);
    for (int j = 2; j < r; ++j)
      coeff *= Rat(binomial(fixed[j - 1] - F.anchor[j - 1] + key[j - 2],
                            Int(key[j - 2])));
    int ir = key[r - 2];
    total = total + binom_poly(Int(ir) - F.anchor[r - 1], ir) * coeff;
  }
  return {r, fixed, total};
}

inline bool is_admissible(const UPoly& P) {
  return try_gotzmann_rep(P).has_value();
}

// Every table entry must itself be a valid one-variable Hilbert polynomial.
inline bool is_admissible(const FTable& F) {
  for (const auto& [key, f] : F.entries)
    if (!try_gotzmann_rep(f).has_value()) return false;
  return true;
}

}  // namespace mghilb
