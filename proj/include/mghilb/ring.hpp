// Products of projective spaces: the multigraded polynomial ring with
// variable blocks x_{i,0},...,x_{i,n_i}, sparse monomials over a fixed
// dense variable order (x_{1,0} largest), degree-slice enumeration, monomial
// ideals, and direct Hilbert function evaluation by slice counting.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "mghilb/common.hpp"

namespace mghilb {

struct ProductRing {
  std::vector<int> blocks;  // block i has n_i + 1 variables

  ProductRing() = default;
  explicit ProductRing(std::vector<int> b) : blocks(std::move(b)) {
    if (blocks.empty()) throw input_error("ring needs at least one block");
    for (int n : blocks)
      if (n < 0) throw input_error("block sizes must be >= 0");
  }

  int s() const { return static_cast<int>(blocks.size()); }
  int nvars() const {
    int v = 0;
    for (int n : blocks) v += n + 1;
    return v;
  }
  int block_start(int i) const {
    int v = 0;
    for (int k = 0; k < i; ++k) v += blocks[k] + 1;
    return v;
  }
  // 0-based block of a 0-based variable index
  int var_block(int v) const {
    for (int i = 0, start = 0; i < s(); ++i) {
      start += blocks[i] + 1;
      if (v < start) return i;
    }
    throw input_error("variable index out of range");
  }
  int var_index_in_block(int v) const { return v - block_start(var_block(v)); }

  bool operator==(const ProductRing& o) const { return blocks == o.blocks; }
  bool operator!=(const ProductRing& o) const { return !(*this == o); }
};

// Sparse monomial: (variable, exponent) pairs sorted by variable, all
// exponents positive.  The empty monomial is 1.
struct Monomial {
  std::vector<std::pair<int, int>> e;

  Monomial() = default;
  explicit Monomial(std::vector<std::pair<int, int>> exps) : e(std::move(exps)) {
    std::sort(e.begin(), e.end());
    std::vector<std::pair<int, int>> out;
    for (auto& [v, k] : e) {
      if (k < 0) throw input_error("negative exponent");
      if (k == 0) continue;
      if (!out.empty() && out.back().first == v)
        out.back().second += k;
      else
        out.emplace_back(v, k);
    }
    e = std::move(out);
  }

  static Monomial one() { return Monomial(); }
  static Monomial variable(int v) { return Monomial({{v, 1}}); }

  int exponent(int v) const {
    for (auto& [w, k] : e)
      if (w == v) return k;
    return 0;
  }
  bool is_one() const { return e.empty(); }
  int total_degree() const {
    int d = 0;
    for (auto& [v, k] : e) d += k;
    return d;
  }
  int max_var() const { return e.empty() ? -1 : e.back().first; }

  Monomial operator*(const Monomial& o) const {
    std::vector<std::pair<int, int>> r = e;
    r.insert(r.end(), o.e.begin(), o.e.end());
    return Monomial(std::move(r));
  }
  bool divides(const Monomial& m) const {
    for (auto& [v, k] : e)
      if (m.exponent(v) < k) return false;
    return true;
  }
  // quotient m / this, valid only when this divides m
  Monomial divide_into(const Monomial& m) const {
    std::vector<std::pair<int, int>> r;
    for (auto& [v, k] : m.e) {
      int q = k - exponent(v);
      if (q < 0) throw input_error("monomial division is not exact");
      if (q > 0) r.emplace_back(v, q);
    }
    return Monomial(std::move(r));
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const { return e < o.e; }  // container order only
};

// Lexicographic comparison over the dense exponent vector, variable 0 most
// significant.  Returns true when a is lex-greater than b.
inline bool lex_greater(const Monomial& a, const Monomial& b, int nvars) {
  for (int v = 0; v < nvars; ++v) {
    int ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea > eb;
  }
  return false;
}

// Degree-lexicographic: total degree first, then lex.
inline bool deglex_greater(const Monomial& a, const Monomial& b, int nvars) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return lex_greater(a, b, nvars);
}

inline DegreeVector multidegree(const ProductRing& ring, const Monomial& m) {
  DegreeVector d(ring.s(), Int(0));
  for (auto& [v, k] : m.e) {
    if (v < 0 || v >= ring.nvars())
      throw input_error("monomial uses a variable outside the ring");
    d[ring.var_block(v)] += k;
  }
  return d;
}

struct MonomialStats {
  // per block: defined iff the block degree is positive
  std::vector<bool> defined;
  std::vector<int> m_sup;  // largest variable index in the block dividing m
  std::vector<int> m_inf;  // smallest such index
};

inline MonomialStats monomial_stats(const ProductRing& ring, const Monomial& m) {
  MonomialStats st;
  st.defined.assign(ring.s(), false);
  st.m_sup.assign(ring.s(), 0);
  st.m_inf.assign(ring.s(), 0);
  for (auto& [v, k] : m.e) {
    if (v < 0 || v >= ring.nvars())
      throw input_error("monomial uses a variable outside the ring");
    int i = ring.var_block(v);
    int j = ring.var_index_in_block(v);
    if (!st.defined[i]) {
      st.defined[i] = true;
      st.m_sup[i] = st.m_inf[i] = j;
    } else {
      st.m_sup[i] = std::max(st.m_sup[i], j);
      st.m_inf[i] = std::min(st.m_inf[i], j);
    }
  }
  return st;
}

// All monomials of one block with given degree, lex-descending (exponent on
// the smallest-index variable as large as possible first).
inline void block_slice(int nvars_in_block, int degree, int var_offset,
                        std::vector<Monomial>& out) {
  std::vector<std::pair<int, int>> current;
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == nvars_in_block - 1) {
      auto m = current;
      if (remaining > 0) m.emplace_back(var_offset + pos, remaining);
      out.push_back(Monomial(std::move(m)));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      if (k > 0) current.emplace_back(var_offset + pos, k);
      rec(pos + 1, remaining - k);
      if (k > 0) current.pop_back();
    }
  };
  rec(0, degree);
}

// All monomials of multidegree b, sorted lex-descending (equivalently
// deglex-descending, as the slice has constant total degree per block).
// Any negative entry gives the empty slice.
inline std::vector<Monomial> enumerate_degree_slice(const ProductRing& ring,
                                                    const DegreeVector& b) {
  if (static_cast<int>(b.size()) != ring.s())
    throw input_error("degree vector has wrong length");
  for (const Int& x : b)
    if (x < 0) return {};
  std::vector<std::vector<Monomial>> per_block(ring.s());
  for (int i = 0; i < ring.s(); ++i)
    block_slice(ring.blocks[i] + 1, int_to_machine(b[i], "slice degree"),
                ring.block_start(i), per_block[i]);
  std::vector<Monomial> out;
  std::function<void(int, const Monomial&)> rec = [&](int i, const Monomial& acc) {
    if (i == ring.s()) {
      out.push_back(acc);
      return;
    }
    for (const Monomial& m : per_block[i]) rec(i + 1, acc * m);
  };
  rec(0, Monomial::one());
  return out;
}

inline Int degree_slice_size(const ProductRing& ring, const DegreeVector& b) {
  Int size = 1;
  for (int i = 0; i < ring.s(); ++i) {
    if (b[i] < 0) return 0;
    size *= binomial(Int(ring.blocks[i]) + b[i], ring.blocks[i]);
  }
  return size;
}

struct MonomialIdeal {
  ProductRing ring;
  std::vector<Monomial> gens;  // minimal: no generator divides another

  MonomialIdeal() = default;
  MonomialIdeal(ProductRing r, std::vector<Monomial> generators)
      : ring(std::move(r)) {
    for (const Monomial& g : generators)
      if (!g.e.empty() && g.e.back().first >= ring.nvars())
        throw input_error("generator uses a variable outside the ring");
    // drop duplicates and non-minimal generators
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

  bool is_zero_ideal() const { return gens.empty(); }
};

inline bool ideal_contains(const MonomialIdeal& I, const Monomial& m) {
  if (!m.e.empty() && m.e.back().first >= I.ring.nvars())
    throw input_error("monomial uses a variable outside the ideal's ring");
  for (const Monomial& g : I.gens)
    if (g.divides(m)) return true;
  return false;
}

// dim of (S/I)_b: monomials of degree b avoiding I.
inline Int hilbert_function(const MonomialIdeal& I, const DegreeVector& b) {
  Int count = 0;
  for (const Monomial& m : enumerate_degree_slice(I.ring, b))
    if (!ideal_contains(I, m)) ++count;
  return count;
}

// componentwise max of generator degrees; all zero for the zero ideal
inline DegreeVector generation_bound(const MonomialIdeal& I) {
  DegreeVector bound(I.ring.s(), Int(0));
  for (const Monomial& g : I.gens) {
    DegreeVector d = multidegree(I.ring, g);
    for (int i = 0; i < I.ring.s(); ++i) bound[i] = std::max(bound[i], d[i]);
  }
  return bound;
}

// Combine ideals over a common ring into one ideal over the ring whose
// i-th block holds one copy of block i per summand (group-major layout:
// all of group 0's variables first).  Cross products between variables of
// distinct groups force surviving monomials to live in a single group, so
// the Hilbert function is the sum of the summands' whenever every b_i >= 1.
inline MonomialIdeal combine_ideals(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw input_error("cannot combine an empty family");
  const ProductRing& base = ideals[0].ring;
  for (const MonomialIdeal& I : ideals)
    if (I.ring != base) throw input_error("combined ideals must share a ring");
  int l = static_cast<int>(ideals.size());
  std::vector<int> blocks;
  for (int n : base.blocks) blocks.push_back(l * (n + 1) - 1);
  ProductRing big(blocks);

  auto relabel = [&](int group, int v) {
    int i = base.var_block(v);
    int j = base.var_index_in_block(v);
    return big.block_start(i) + group * (base.blocks[i] + 1) + j;
  };

  std::vector<Monomial> gens;
  for (int k = 0; k < l; ++k)
    for (const Monomial& g : ideals[k].gens) {
      std::vector<std::pair<int, int>> e;
      for (auto& [v, exp] : g.e) e.emplace_back(relabel(k, v), exp);
      gens.push_back(Monomial(std::move(e)));
    }
  for (int k = 0; k < l; ++k)
    for (int k2 = k + 1; k2 < l; ++k2)
      for (int v = 0; v < base.nvars(); ++v)
        for (int w = 0; w < base.nvars(); ++w)
          gens.push_back(Monomial::variable(relabel(k, v)) *
                         Monomial::variable(relabel(k2, w)));
  return MonomialIdeal(big, std::move(gens));
}

}  // namespace mghilb
