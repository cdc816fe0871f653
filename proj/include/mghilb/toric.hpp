// Hilbert function transport for smooth toric gradings: a Cox ring graded
// by an arbitrary integer degree matrix, finite-slice certification by a
// positive rational functional, the companion product ring built from a
// nef basis, the monomial lifting tau between their slices, and the
// zonotope of check points.
#pragma once

#include <optional>
#include <sstream>

#include "mghilb/persistence.hpp"
#include "mghilb/ring.hpp"

namespace mghilb {

// Variables z_0..z_{N-1}; column j is the degree of z_j in Z^s.
struct CoxRing {
  std::vector<DegreeVector> cols;
  int rank = 0;  // s, the grading rank

  CoxRing() = default;
  CoxRing(std::vector<DegreeVector> columns, int s)
      : cols(std::move(columns)), rank(s) {
    if (rank < 1) throw input_error("grading rank must be positive");
    if (cols.empty()) throw input_error("degree matrix needs at least one column");
    for (const DegreeVector& c : cols) {
      if (static_cast<int>(c.size()) != rank)
        throw input_error("degree matrix columns have inconsistent length");
      bool zero = true;
      for (const Int& x : c)
        if (x != 0) zero = false;
      if (zero) throw input_error("degree matrix has a zero column");
    }
  }

  int s() const { return rank; }
  int nvars() const { return static_cast<int>(cols.size()); }
};

// Rank-2 smooth projective toric varieties: projectivized split bundles
// over projective space.  d+2 variables; the twisting integers a_i sit in
// the first group of columns.
inline CoxRing kleinschmidt_cox(int d, const std::vector<Int>& a) {
  int r = static_cast<int>(a.size());
  if (d < 1) throw input_error("dimension must be positive");
  if (r > d) throw input_error("too many twisting integers for the dimension");
  for (const Int& x : a)
    if (x < 0) throw input_error("twisting integers must be nonnegative");
  std::vector<DegreeVector> cols;
  for (const Int& x : a) cols.push_back({-x, Int(1)});
  cols.push_back({Int(0), Int(1)});
  for (int k = 0; k < d - r + 1; ++k) cols.push_back({Int(1), Int(0)});
  return CoxRing(std::move(cols), 2);
}

// A rational functional with lambda . col_j >= 1 for every column: its
// existence certifies that every graded slice is finite.  Found by
// Fourier-Motzkin elimination; infeasibility means some slice is infinite.
inline std::vector<Rat> positivity_certificate(const CoxRing& R) {
  int s = R.s();
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> rhs;
  for (const DegreeVector& c : R.cols) {
    std::vector<Rat> row(s);
    for (int i = 0; i < s; ++i) row[i] = Rat(c[i]);
    A.push_back(std::move(row));
    rhs.push_back(Rat(1));
  }

  // eliminate the last variable first, remembering each pre-elimination
  // system for back-substitution
  std::vector<std::pair<std::vector<std::vector<Rat>>, std::vector<Rat>>> trail;
  for (int v = s - 1; v >= 0; --v) {
    trail.emplace_back(A, rhs);
    std::vector<std::vector<Rat>> A2;
    std::vector<Rat> rhs2;
    std::vector<int> pos, neg;
    for (int k = 0; k < static_cast<int>(A.size()); ++k) {
      if (A[k][v] > 0)
        pos.push_back(k);
      else if (A[k][v] < 0)
        neg.push_back(k);
      else {
        A2.push_back(A[k]);
        rhs2.push_back(rhs[k]);
      }
    }
    for (int p : pos)
      for (int n : neg) {
        Rat cp = A[p][v], cn = -A[n][v];
        std::vector<Rat> row(s, Rat(0));
        for (int i = 0; i < s; ++i) row[i] = A[p][i] * cn + A[n][i] * cp;
        A2.push_back(std::move(row));
        rhs2.push_back(rhs[p] * cn + rhs[n] * cp);
      }
    A = std::move(A2);
    rhs = std::move(rhs2);
  }
  for (const Rat& r : rhs)
    if (r > 0)
      throw input_error(
          "grading admits no positive functional; slices may be infinite");

  std::vector<Rat> lambda(s, Rat(0));
  for (int v = 0; v < s; ++v) {
    const auto& [Av, rv] = trail[s - 1 - v];
    std::optional<Rat> lo, hi;
    for (int k = 0; k < static_cast<int>(Av.size()); ++k) {
      if (Av[k][v] == 0) continue;
      Rat rest = rv[k];
      for (int i = 0; i < v; ++i) rest -= Av[k][i] * lambda[i];
      Rat bound = rest / Av[k][v];
      if (Av[k][v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    lambda[v] = lo ? *lo : (hi ? *hi : Rat(0));
  }
  return lambda;
}

// All monomials of degree b, found by depth-first search with the
// certificate bounding each exponent; sorted degree-then-lex descending.
inline std::vector<Monomial> toric_degree_slice(const CoxRing& R,
                                                const DegreeVector& b,
                                                const std::vector<Rat>& cert) {
  if (static_cast<int>(b.size()) != R.s())
    throw input_error("degree vector has wrong length");
  int N = R.nvars();
  std::vector<Rat> col_weight(N);
  for (int j = 0; j < N; ++j) {
    Rat w = 0;
    for (int i = 0; i < R.s(); ++i) w += cert[i] * Rat(R.cols[j][i]);
    if (w < 1) throw input_error("certificate does not bound the columns");
    col_weight[j] = w;
  }
  std::vector<Monomial> out;
  std::vector<std::pair<int, int>> expo;
  DegreeVector rem = b;
  std::function<void(int, Rat)> rec = [&](int j, Rat weight) {
    if (weight < 0) return;
    if (j == N) {
      for (const Int& x : rem)
        if (x != 0) return;
      out.push_back(Monomial(expo));
      return;
    }
    Rat ratio = weight / col_weight[j];
    Int cap = numerator(ratio) / denominator(ratio);
    for (Int u = cap; u >= 0; --u) {
      if (u > 0) {
        int uu = int_to_machine(u, "exponent");
        expo.emplace_back(j, uu);
        for (int i = 0; i < R.s(); ++i) rem[i] -= u * R.cols[j][i];
        rec(j + 1, weight - Rat(u) * col_weight[j]);
        for (int i = 0; i < R.s(); ++i) rem[i] += u * R.cols[j][i];
        expo.pop_back();
      } else {
        rec(j + 1, weight);
      }
    }
  };
  Rat total = 0;
  for (int i = 0; i < R.s(); ++i) total += cert[i] * Rat(b[i]);
  rec(0, total);
  std::sort(out.begin(), out.end(), [N](const Monomial& x, const Monomial& y) {
    return deglex_greater(x, y, N);
  });
  return out;
}

inline std::vector<Monomial> toric_degree_slice(const CoxRing& R,
                                                const DegreeVector& b) {
  return toric_degree_slice(R, b, positivity_certificate(R));
}

// Monomial ideal in a Cox ring, minimalized on construction.
struct ToricIdeal {
  CoxRing ring;
  std::vector<Monomial> gens;

  ToricIdeal() = default;
  ToricIdeal(CoxRing r, std::vector<Monomial> generators) : ring(std::move(r)) {
    for (const Monomial& g : generators)
      if (!g.e.empty() && g.e.back().first >= ring.nvars())
        throw input_error("generator uses a variable outside the ring");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    for (const Monomial& g : generators) {
      bool dominated = false;
      for (const Monomial& h : generators)
        if (!(h == g) && h.divides(g)) {
          dominated = true;
          break;
        }
      if (!dominated) gens.push_back(g);
    }
  }

  bool contains(const Monomial& m) const {
    for (const Monomial& g : gens)
      if (g.divides(m)) return true;
    return false;
  }
};

inline Int toric_hilbert_function(const ToricIdeal& J, const DegreeVector& b,
                                  const std::vector<Rat>& cert) {
  Int count = 0;
  for (const Monomial& m : toric_degree_slice(J.ring, b, cert))
    if (!J.contains(m)) ++count;
  return count;
}

inline Int toric_hilbert_function(const ToricIdeal& J, const DegreeVector& b) {
  return toric_hilbert_function(J, b, positivity_certificate(J.ring));
}

// The product ring whose block i has one variable per monomial of the
// slice at the i-th nef degree, plus those slices themselves (the images
// of the block variables under tau), in matching order.
struct CompanionRing {
  CoxRing cox;
  std::vector<DegreeVector> nef;  // rows c_1..c_s
  ProductRing ring;
  std::vector<std::vector<Monomial>> bases;
};

inline CompanionRing companion_ring(const CoxRing& R,
                                    const std::vector<DegreeVector>& C,
                                    const std::vector<Rat>& cert) {
  if (static_cast<int>(C.size()) != R.s())
    throw input_error("nef basis must have one row per grading axis");
  CompanionRing comp;
  comp.cox = R;
  comp.nef = C;
  std::vector<int> blocks;
  for (const DegreeVector& c : C) {
    std::vector<Monomial> slice = toric_degree_slice(R, c, cert);
    if (slice.empty())
      throw input_error("a nef degree has an empty slice; basis unusable");
    blocks.push_back(static_cast<int>(slice.size()) - 1);
    comp.bases.push_back(std::move(slice));
  }
  comp.ring = ProductRing(blocks);
  return comp;
}

inline CompanionRing companion_ring(const CoxRing& R,
                                    const std::vector<DegreeVector>& C) {
  return companion_ring(R, C, positivity_certificate(R));
}

// f(b) = sum_i b_i c_i in the Cox grading.
inline DegreeVector f_map(const std::vector<DegreeVector>& C,
                          const DegreeVector& b) {
  int s = static_cast<int>(C.size());
  if (static_cast<int>(b.size()) != s)
    throw input_error("degree vector has wrong length");
  DegreeVector out(C[0].size(), Int(0));
  for (int i = 0; i < s; ++i)
    for (size_t j = 0; j < out.size(); ++j) out[j] += b[i] * C[i][j];
  return out;
}

// Substitution t_j := sum_i u_i C[i][j]; requires the rows independent so
// that distinct polynomials stay distinct.
inline MPoly f_sharp(const std::vector<DegreeVector>& C, const MPoly& P) {
  int s = static_cast<int>(C.size());
  if (P.nvars() != s) throw input_error("polynomial has wrong dimension");
  // rank check by rational elimination
  std::vector<std::vector<Rat>> M(s, std::vector<Rat>(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) M[i][j] = Rat(C[i][j]);
  for (int col = 0, row = 0; col < s; ++col, ++row) {
    int pivot = -1;
    for (int k = row; k < s; ++k)
      if (M[k][col] != 0) {
        pivot = k;
        break;
      }
    if (pivot < 0) throw input_error("nef degrees are linearly dependent");
    std::swap(M[row], M[pivot]);
    for (int k = row + 1; k < s; ++k) {
      if (M[k][col] == 0) continue;
      Rat f = M[k][col] / M[row][col];
      for (int j = col; j < s; ++j) M[k][j] -= f * M[row][j];
    }
  }

  std::vector<MPoly> images;  // t_j as a polynomial in u
  for (int j = 0; j < s; ++j) {
    MPoly img(s);
    for (int i = 0; i < s; ++i)
      img = img + MPoly::var(s, i) * Rat(C[i][j]);
    images.push_back(img);
  }
  MPoly out(s);
  for (const auto& [e, c] : P.terms()) {
    MPoly term(s, c);
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < e[j]; ++k) term = term * images[j];
    out = out + term;
  }
  return out;
}

// tau on monomials: substitute each companion variable by its slice
// monomial.
inline Monomial tau_image(const CompanionRing& comp, const Monomial& m) {
  Monomial out;
  for (auto& [v, k] : m.e) {
    int i = comp.ring.var_block(v);
    int j = comp.ring.var_index_in_block(v);
    for (int rep = 0; rep < k; ++rep) out = out * comp.bases[i][j];
  }
  return out;
}

struct TauSlice {
  Int survivors = 0;    // distinct images avoiding the ideal
  Int image_count = 0;  // distinct images overall
  Int slice_size = 0;   // size of the target Cox slice
  bool surjective = false;
};

// Map the companion slice at b through tau and count distinct images and
// those surviving modulo J.  The first coordinate must be positive: the
// count only transports the Hilbert function above the first nef twist.
inline TauSlice tau_slice(const CompanionRing& comp, const ToricIdeal& J,
                          const DegreeVector& b, const std::vector<Rat>& cert) {
  if (static_cast<int>(b.size()) != comp.ring.s())
    throw input_error("degree vector has wrong length");
  if (b[0] < 1) throw input_error("first coordinate must be at least 1");
  std::set<Monomial> images;
  for (const Monomial& m : enumerate_degree_slice(comp.ring, b))
    images.insert(tau_image(comp, m));
  TauSlice out;
  out.image_count = Int(images.size());
  out.slice_size =
      Int(toric_degree_slice(comp.cox, f_map(comp.nef, b), cert).size());
  out.surjective = out.image_count == out.slice_size;
  for (const Monomial& m : images)
    if (!J.contains(m)) ++out.survivors;
  return out;
}

inline TauSlice tau_slice(const CoxRing& R, const ToricIdeal& J,
                          const std::vector<DegreeVector>& C,
                          const DegreeVector& b) {
  std::vector<Rat> cert = positivity_certificate(R);
  return tau_slice(companion_ring(R, C, cert), J, b, cert);
}

// Images under f of the 2^s corners over d, in box order.
inline std::vector<DegreeVector> zonotope(const std::vector<DegreeVector>& C,
                                          const DegreeVector& d) {
  std::vector<DegreeVector> out;
  for (const DegreeVector& b : degree_box(d)) out.push_back(f_map(C, b));
  return out;
}

// Full toric pipeline: pull P back to the companion ring, find the
// persistence point there, and compare surviving-image counts with the
// pulled-back polynomial on the box.  Non-surjective tau at any corner
// voids the transport assumption.
inline Verdict verify_toric(const CoxRing& R, const ToricIdeal& J,
                            const MPoly& P, const std::vector<DegreeVector>& C,
                            const DegreeVector& a,
                            const PersistenceOptions& opts = {}) {
  std::vector<Rat> cert = positivity_certificate(R);
  CompanionRing comp = companion_ring(R, C, cert);
  int s = comp.ring.s();
  if (static_cast<int>(a.size()) != s) throw input_error("anchor has wrong length");
  for (const Int& x : a)
    if (x < 2) throw input_error("anchor entries must be at least 2");
  MPoly Q = f_sharp(C, P);

  PersistencePoint point;
  try {
    point = find_persistence_point(Q, a, comp.ring, opts);
  } catch (const input_error& e) {
    Verdict v;
    v.confirmed = false;
    v.reason = e.what();
    return v;
  } catch (const scan_error& e) {
    Verdict v;
    v.confirmed = false;
    v.reason = e.what();
    return v;
  }

  Verdict v;
  v.point = point;
  for (const DegreeVector& b : point.box()) {
    TauSlice ts = tau_slice(comp, J, b, cert);
    if (!ts.surjective) {
      std::ostringstream msg;
      msg << "lifting is not surjective at (";
      for (size_t i = 0; i < b.size(); ++i)
        msg << (i ? "," : "") << b[i];
      msg << "); the first nef class may not be regular";
      throw assumption_error(msg.str());
    }
    Rat expect = Q.evaluate(b);
    if (Rat(ts.survivors) != expect) {
      v.confirmed = false;
      v.reason = "value mismatch on the verification box";
      v.failing_point = b;
      v.expected = expect;
      v.actual = ts.survivors;
      return v;
    }
    ++v.matched;
  }
  v.confirmed = true;
  return v;
}

}  // namespace mghilb
