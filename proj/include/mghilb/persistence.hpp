// Constructive verification of a multigraded Hilbert polynomial candidate:
// locate a degree d such that agreement between H_I and P on the 2^s box
// {d_i, d_i+1} forces agreement everywhere above.  The coordinates of d are
// chosen axis by axis from stabilization points of the blockwise growth
// identity, seeded by the Gotzmann numbers of the decomposition table.
#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "mghilb/hilbpoly.hpp"
#include "mghilb/stanley.hpp"

namespace mghilb {

struct CValue {
  Int c;               // minimal u >= max(a_floor, 1) with the identity
  Int c_unrestricted;  // minimal u >= 1 (may undercut the floor)
};

inline Int default_scan_cap(const UPoly& Q, int n, const Int& a_floor) {
  return 10 * (a_floor + Int(std::max(Q.degree(), 0)) + Int(n) + 10);
}

// Does the one-step growth identity Q(u+1) = growth of Q(u) hold at u?
// `enforce` demands a nonnegative integer value Q(u), as any genuine
// Hilbert function restriction must satisfy.
inline bool growth_identity_holds(const UPoly& Q, int n, const Int& u,
                                  bool enforce) {
  std::optional<Int> qu = rat_to_int(Q(u));
  if (!qu || *qu < 0) {
    if (enforce)
      throw input_error(
          "polynomial takes a negative or fractional value on the scan range");
    return false;
  }
  std::optional<Int> qn = rat_to_int(Q(Int(u + 1)));
  if (!qn) return false;
  return crona_growth(*qu, n, u) == *qn;
}

// Smallest u at which one growth step of Q's value reproduces Q(u+1).
// Scans from max(a_floor, 1); also records the unrestricted minimum over
// u >= 1, which can be smaller.  Failing to find u within the cap signals
// an inadmissible polynomial or a wrong block size.
inline CValue c_value(const UPoly& Q, int n, const Int& a_floor,
                      std::optional<Int> cap = std::nullopt) {
  Int start = std::max(a_floor, Int(1));
  Int limit = cap ? *cap : default_scan_cap(Q, n, a_floor);
  std::optional<Int> unrestricted;
  for (Int u = 1; u <= limit; ++u) {
    bool ok = growth_identity_holds(Q, n, u, /*enforce=*/u >= start);
    if (ok && !unrestricted) unrestricted = u;
    if (ok && u >= start) return {u, *unrestricted};
  }
  std::ostringstream msg;
  msg << "growth identity not reached within the scan cap " << limit;
  throw scan_error(msg.str());
}

struct AxisReport {
  Int a;               // anchor floor for this axis
  Int c;               // floor-restricted stabilization value
  Int c_unrestricted;  // unrestricted stabilization value
  Int candidates;      // number of frozen-coordinate polynomials examined
  Int d;               // chosen coordinate: max(a, c)
};

// 2^s box corners on top of d: last axis fastest, each coordinate in
// {d_i, d_i+1}.
inline std::vector<DegreeVector> degree_box(const DegreeVector& d) {
  int s = static_cast<int>(d.size());
  std::vector<DegreeVector> box;
  for (int mask = 0; mask < (1 << s); ++mask) {
    DegreeVector b = d;
    for (int i = 0; i < s; ++i)
      if (mask & (1 << (s - 1 - i))) b[i] += 1;
    box.push_back(std::move(b));
  }
  return box;
}

struct PersistencePoint {
  DegreeVector d;
  DegreeVector anchor;
  Int max_gotzmann = 0;  // over decomposition table entries
  bool strict = false;
  std::vector<AxisReport> axes;

  std::vector<DegreeVector> box() const { return degree_box(d); }
};

struct PersistenceOptions {
  bool strict_gotzmann = false;      // require d_1 to exceed the table maximum
  std::optional<Int> scan_cap = {};  // overrides the per-call default
};

// Choose d coordinate by coordinate.  The first coordinate dominates the
// Gotzmann numbers of all table entries; each later coordinate dominates
// the stabilization values of every frozen-coordinate polynomial with the
// earlier coordinates ranging over their two box values and the later ones
// over the table's index range.
inline PersistencePoint find_persistence_point(
    const MPoly& P, const DegreeVector& a, const ProductRing& ring,
    const PersistenceOptions& opts = {}) {
  int s = ring.s();
  FTable F = standard_decomposition(P, a, ring);

  PersistencePoint out;
  out.anchor = a;
  out.strict = opts.strict_gotzmann;
  out.d.assign(s, Int(0));

  Int max_gotz = 0;
  for (const auto& [key, f] : F.entries) {
    auto rep = try_gotzmann_rep(f);
    if (!rep)
      throw input_error(
          "a decomposition table entry is not a valid one-variable Hilbert "
          "polynomial");
    max_gotz = std::max(max_gotz, Int(rep->a.size()));
  }
  out.max_gotzmann = max_gotz;
  Int d1 = std::max(a[0], opts.strict_gotzmann ? max_gotz + 1 : max_gotz);
  out.d[0] = d1;
  out.axes.push_back({a[0], max_gotz, max_gotz, Int(F.entries.size()), d1});

  for (int r = 2; r <= s; ++r) {
    Int cr = 0, cr_un = 0, count = 0;
    std::vector<Int> b(s, Int(0));
    // odometer over the candidate set: {d_i, d_i+1} before axis r,
    // 0..p_i after it
    std::function<void(int)> walk = [&](int axis) {
      if (axis == s) {
        UPoly Q = partial_poly(F, r, b).poly;
        CValue cv = c_value(Q, ring.blocks[r - 1], a[r - 1], opts.scan_cap);
        cr = std::max(cr, cv.c);
        cr_un = std::max(cr_un, cv.c_unrestricted);
        ++count;
        return;
      }
      if (axis == r - 1) {  // the free axis
        walk(axis + 1);
        return;
      }
      if (axis < r - 1) {
        for (int step = 0; step <= 1; ++step) {
          b[axis] = out.d[axis] + step;
          walk(axis + 1);
        }
      } else {
        for (Int v = 0; v <= F.p[axis]; ++v) {
          b[axis] = v;
          walk(axis + 1);
        }
      }
      b[axis] = 0;
    };
    walk(0);
    Int dr = std::max(a[r - 1], cr);
    out.d[r - 1] = dr;
    out.axes.push_back({a[r - 1], cr, cr_un, count, dr});
  }
  return out;
}

struct Verdict {
  bool confirmed = false;
  std::string reason;
  std::optional<DegreeVector> failing_point;
  Rat expected = 0;  // polynomial value at the failing point
  Int actual = 0;    // Hilbert function value there
  Int matched = 0;
  std::optional<PersistencePoint> point;
};

// Compare H_I and P on the 2^s corners above point.d; agreement at all of
// them is the certificate.
inline Verdict check_box(const MonomialIdeal& I, const MPoly& P,
                         const PersistencePoint& point) {
  if (P.nvars() != I.ring.s())
    throw input_error("polynomial and ideal have different axis counts");
  Verdict v;
  v.point = point;
  for (const DegreeVector& b : point.box()) {
    Int h = hilbert_function(I, b);
    Rat p = P.evaluate(b);
    if (Rat(h) != p) {
      v.confirmed = false;
      v.reason = "value mismatch on the verification box";
      v.failing_point = b;
      v.expected = p;
      v.actual = h;
      return v;
    }
    ++v.matched;
  }
  v.confirmed = true;
  return v;
}

// Full pipeline: decompose P, find the persistence point, compare on the
// box.  Inadmissible candidates and failed stabilization scans reject with
// a reason instead of escaping as exceptions; malformed inputs still throw.
inline Verdict verify_polynomial(const MonomialIdeal& I, const MPoly& P,
                                 const DegreeVector& a,
                                 const PersistenceOptions& opts = {}) {
  int s = I.ring.s();
  if (P.nvars() != s) throw input_error("polynomial has wrong dimension");
  if (static_cast<int>(a.size()) != s) throw input_error("anchor has wrong length");
  for (const Int& x : a)
    if (x < 2) throw input_error("anchor entries must be at least 2");
  if (!leq_componentwise(generation_bound(I), a))
    throw input_error("anchor must dominate the ideal's generating degrees");

  PersistencePoint point;
  try {
    point = find_persistence_point(P, a, I.ring, opts);
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
  return check_box(I, P, point);
}

// Exact tensor-product Lagrange interpolation of the Hilbert function on
// the grid a + {0..n_1} x ... x {0..n_s}, with a stability check on the
// shifted grid; above the generating degrees of a strongly multistable
// ideal this recovers the Hilbert polynomial.
inline MPoly interpolate_hilbert_polynomial(const MonomialIdeal& I,
                                            const DegreeVector& a) {
  int s = I.ring.s();
  if (static_cast<int>(a.size()) != s) throw input_error("anchor has wrong length");
  if (!is_strongly_multistable(I))
    throw input_error("interpolation needs a strongly multistable ideal");
  if (!leq_componentwise(generation_bound(I), a))
    throw input_error("anchor must dominate the generating degrees");
  for (const Int& x : a)
    if (x < 2) throw input_error("anchor entries must be at least 2");

  // per-axis Lagrange basis over nodes a_i + 0..n_i
  std::vector<std::vector<UPoly>> basis(s);
  for (int i = 0; i < s; ++i) {
    int n = I.ring.blocks[i];
    for (int k = 0; k <= n; ++k) {
      UPoly L{Rat(1)};
      for (int m = 0; m <= n; ++m) {
        if (m == k) continue;
        // (t - (a_i + m)) / (k - m)
        UPoly factor = UPoly::var() - UPoly(Rat(a[i] + m));
        L = L * factor * (Rat(1) / Rat(k - m));
      }
      basis[i].push_back(L);
    }
  }

  MPoly P(s);
  std::vector<int> delta(s, 0);
  std::function<void(int)> walk = [&](int axis) {
    if (axis == s) {
      DegreeVector b = a;
      for (int i = 0; i < s; ++i) b[i] += delta[i];
      MPoly term(s, Rat(hilbert_function(I, b)));
      for (int i = 0; i < s; ++i)
        term = term * MPoly::from_upoly(basis[i][delta[i]], s, i);
      P = P + term;
      return;
    }
    for (int k = 0; k <= I.ring.blocks[axis]; ++k) {
      delta[axis] = k;
      walk(axis + 1);
    }
    delta[axis] = 0;
  };
  walk(0);

  // stability: the polynomial must keep matching one step further out
  std::function<void(int)> verify_shifted = [&](int axis) {
    if (axis == s) {
      DegreeVector b = a;
      for (int i = 0; i < s; ++i) b[i] += delta[i] + 1;
      if (Rat(hilbert_function(I, b)) != P.evaluate(b))
        throw assumption_error(
            "interpolated polynomial is not yet stable; raise the anchor");
      return;
    }
    for (int k = 0; k <= I.ring.blocks[axis]; ++k) {
      delta[axis] = k;
      verify_shifted(axis + 1);
    }
    delta[axis] = 0;
  };
  verify_shifted(0);
  return P;
}

// Classical one-axis-at-a-time bootstrap feasibility: a point is feasible
// when every coordinate dominates the Gotzmann number of P restricted to
// its axis (all other coordinates frozen at the point).  Scans the given
// box lexicographically and returns the first feasible point, if any.
inline std::optional<DegreeVector> joint_growth_point(const MPoly& P,
                                                      const DegreeVector& lo,
                                                      const DegreeVector& hi) {
  int s = P.nvars();
  if (static_cast<int>(lo.size()) != s || static_cast<int>(hi.size()) != s)
    throw input_error("box bounds have wrong length");
  std::vector<Int> d = lo;
  std::optional<DegreeVector> found;
  std::function<bool(int)> walk = [&](int axis) -> bool {
    if (axis == s) {
      for (int r = 0; r < s; ++r) {
        MPoly rest = P;
        for (int j = 0; j < s; ++j)
          if (j != r) rest = rest.substitute(j, d[j]);
        auto rep = try_gotzmann_rep(rest.to_upoly(r));
        if (!rep || Int(rep->a.size()) > d[r]) return false;
      }
      found = d;
      return true;
    }
    for (Int v = lo[axis]; v <= hi[axis]; ++v) {
      d[axis] = v;
      if (walk(axis + 1)) return true;
    }
    d[axis] = lo[axis];
    return false;
  };
  walk(0);
  return found;
}

}  // namespace mghilb
