// Standard-graded binomial combinatorics: the unique strictly-decreasing
// binomial representation of an integer in a fixed degree, the growth
// operator alpha^<d>, binomial representations of univariate Hilbert
// polynomials (whose length is the Gotzmann number), and the directional
// growth operator obtained by Euclidean division against a block binomial.
#pragma once

#include <optional>

#include "mghilb/common.hpp"
#include "mghilb/poly.hpp"

namespace mghilb {

struct MacaulayRep {
  int d = 1;
  // kappas[0] = kappa(d), ..., kappas[d-1] = kappa(1); strictly decreasing.
  std::vector<Int> kappas;

  Int value() const {
    Int v = 0;
    for (int i = 0; i < d; ++i) v += binomial(kappas[i], d - i);
    return v;
  }
};

inline MacaulayRep macaulay_rep(const Int& alpha, int d) {
  if (d < 1) throw input_error("binomial representation needs degree >= 1");
  if (alpha < 0) throw input_error("binomial representation needs value >= 0");
  MacaulayRep rep;
  rep.d = d;
  Int rem = alpha;
  Int upper_bound;  // kappa(i) must stay below the previous kappa
  bool have_bound = false;
  for (int i = d; i >= 1; --i) {
    Int k = i - 1;  // binom(i-1, i) = 0, the minimal (empty) choice
    while (binomial(k + 1, i) <= rem && (!have_bound || k + 1 < upper_bound))
      ++k;
    rep.kappas.push_back(k);
    rem -= binomial(k, i);
    upper_bound = k;
    have_bound = true;
  }
  if (rem != 0) throw input_error("binomial representation failed");
  return rep;
}

// alpha^<d>: shift every binomial of the representation up by one.
inline Int macaulay_growth(const Int& alpha, int d) {
  MacaulayRep rep = macaulay_rep(alpha, d);
  Int v = 0;
  for (int i = 0; i < d; ++i) v += binomial(rep.kappas[i] + 1, d - i + 1);
  return v;
}

struct GotzmannRep {
  // weakly decreasing a_1 >= ... >= a_D >= 0; D = a.size()
  std::vector<Int> a;

  size_t number() const { return a.size(); }

  UPoly value() const {
    UPoly p;
    for (size_t i = 0; i < a.size(); ++i)
      p = p + binom_poly(a[i] - Int(i), int_to_machine(a[i], "rep entry"));
    return p;
  }
};

// Peel the representation off P term by term: the i-th term is
// binom(t + a_i - i + 1, a_i), a polynomial of degree a_i whose leading
// coefficient is 1/a_i!.  Returns nullopt when P admits no representation
// (not the Hilbert polynomial of any standard-graded ideal).
inline std::optional<GotzmannRep> try_gotzmann_rep(const UPoly& P,
                                                   const Int& term_cap = Int(1000000)) {
  GotzmannRep rep;
  UPoly R = P;
  Int i = 1;
  Int prev_a = -1;
  while (!R.is_zero()) {
    int deg = R.degree();
    if (deg == 0) {
      // all remaining terms are the constant binom(t - i + 1, 0) = 1
      auto c = rat_to_int(R.coeff(0));
      if (!c || *c <= 0) return std::nullopt;
      if (i - 1 + *c > term_cap)
        throw scan_error("binomial representation exceeds the term cap");
      for (Int k = 0; k < *c; ++k) rep.a.push_back(0);
      return rep;
    }
    // leading coefficient must be m/deg! for a positive integer m
    Rat lead = R.lead();
    Rat fact = 1;
    for (int m = 2; m <= deg; ++m) fact *= m;
    auto m = rat_to_int(lead * fact);
    if (!m || *m <= 0) return std::nullopt;
    Int a = deg;
    if (prev_a >= 0 && a > prev_a) return std::nullopt;
    if (i > term_cap) throw scan_error("binomial representation exceeds the term cap");
    R = R - binom_poly(a - i + 1, deg);
    if (R.degree() > deg) return std::nullopt;
    rep.a.push_back(a);
    prev_a = a;
    ++i;
  }
  return rep;
}

inline GotzmannRep gotzmann_rep(const UPoly& P, const Int& term_cap = Int(1000000)) {
  auto rep = try_gotzmann_rep(P, term_cap);
  if (!rep)
    throw input_error("not the Hilbert polynomial of a standard-graded ideal");
  return *rep;
}

// The length D of the representation; 0 for the zero polynomial.
inline Int gotzmann_number(const UPoly& P, const Int& term_cap = Int(1000000)) {
  return Int(gotzmann_rep(P, term_cap).number());
}

struct CronaDivision {
  Int q;
  Int r;
  Int divisor;
};

// Euclidean division of a Hilbert value by the full block slice size
// binom(n + b, n).
inline CronaDivision crona_division(const Int& value, int n, const Int& b) {
  if (value < 0) throw input_error("directional division needs value >= 0");
  CronaDivision d;
  d.divisor = binomial(Int(n) + b, n);
  if (d.divisor <= 0) throw input_error("directional division needs n, b >= 0");
  d.q = value / d.divisor;
  d.r = value % d.divisor;
  return d;
}

// Directional growth: binom(n+b+1, n) * q + r^<b>.
inline Int crona_growth(const Int& value, int n, const Int& b) {
  if (b < 1) throw input_error("directional growth needs b >= 1");
  CronaDivision d = crona_division(value, n, b);
  Int grown = d.r == 0 ? Int(0)
                       : macaulay_growth(d.r, int_to_machine(b, "growth degree"));
  return binomial(Int(n) + b + 1, n) * d.q + grown;
}

}  // namespace mghilb
