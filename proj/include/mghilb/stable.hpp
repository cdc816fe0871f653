// Exchange-closure tests and lexification for monomial ideals in products
// of projective spaces: strong multistability, per-block lex segments,
// slice-wise multilexification, and whole-ideal multilexification driven
// by slice differences over a degree box.
#pragma once

#include <map>

#include "mghilb/ring.hpp"

namespace mghilb {

// A monomial x^u is one-step exchangeable towards smaller variable indices:
// trade one factor x_{i,j} for x_{i,k} with k < j.  The ideal is strongly
// multistable when every such exchange of every generator stays inside.
// Closure of the generators implies closure of the whole ideal, since any
// member is a generator times a monomial and exchanges on either factor
// stay inside.
inline bool is_strongly_multistable(const MonomialIdeal& I) {
  for (const Monomial& g : I.gens)
    for (auto& [v, exp] : g.e) {
      int i = I.ring.var_block(v);
      int j = I.ring.var_index_in_block(v);
      for (int k = 0; k < j; ++k) {
        Monomial swapped =
            Monomial::variable(I.ring.block_start(i) + k) *
            Monomial::variable(v).divide_into(g) /* g / x_v */;
        if (!ideal_contains(I, swapped)) return false;
      }
    }
  return true;
}

// A finite set of monomials of one fixed multidegree, kept lex-descending.
struct MonomialSet {
  ProductRing ring;
  DegreeVector degree;
  std::vector<Monomial> members;

  MonomialSet() = default;
  MonomialSet(ProductRing r, DegreeVector d, std::vector<Monomial> ms)
      : ring(std::move(r)), degree(std::move(d)), members(std::move(ms)) {
    for (const Monomial& m : members)
      if (multidegree(ring, m) != degree)
        throw input_error("set member has the wrong multidegree");
    int nv = ring.nvars();
    std::sort(members.begin(), members.end(),
              [nv](const Monomial& a, const Monomial& b) {
                return lex_greater(a, b, nv);
              });
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  bool contains(const Monomial& m) const {
    for (const Monomial& x : members)
      if (x == m) return true;
    return false;
  }
};

inline MonomialSet ideal_slice(const MonomialIdeal& I, const DegreeVector& b) {
  std::vector<Monomial> ms;
  for (const Monomial& m : enumerate_degree_slice(I.ring, b))
    if (ideal_contains(I, m)) ms.push_back(m);
  return MonomialSet(I.ring, b, std::move(ms));
}

// Split m into its block-i part and the rest.
inline std::pair<Monomial, Monomial> split_block(const ProductRing& ring,
                                                 const Monomial& m, int i) {
  std::vector<std::pair<int, int>> inside, outside;
  for (auto& [v, k] : m.e)
    (ring.var_block(v) == i ? inside : outside).emplace_back(v, k);
  return {Monomial(std::move(inside)), Monomial(std::move(outside))};
}

// xi_lex in direction i: group the set by the part outside block i; each
// fiber of block-i monomials is replaced by the lex segment of equal size
// inside the block-i slice of the same degree.
inline MonomialSet xi_lex(const MonomialSet& M, int i) {
  if (i < 0 || i >= M.ring.s()) throw input_error("block index out of range");
  std::map<Monomial, std::vector<Monomial>> fibers;
  for (const Monomial& m : M.members) {
    auto [in, out] = split_block(M.ring, m, i);
    fibers[out].push_back(in);
  }
  int deg_i = int_to_machine(M.degree[i], "block degree");
  std::vector<Monomial> block_monos;
  block_slice(M.ring.blocks[i] + 1, deg_i, M.ring.block_start(i), block_monos);
  std::vector<Monomial> out_members;
  for (auto& [out, fiber] : fibers) {
    size_t cnt = fiber.size();
    if (cnt > block_monos.size())
      throw input_error("fiber larger than the block slice");
    for (size_t k = 0; k < cnt; ++k) out_members.push_back(out * block_monos[k]);
  }
  return MonomialSet(M.ring, M.degree, std::move(out_members));
}

// Every fiber in every direction is a lex segment of the block slice.
inline bool is_xi_lex(const MonomialSet& M, int i) {
  if (i < 0 || i >= M.ring.s()) throw input_error("block index out of range");
  std::map<Monomial, std::vector<Monomial>> fibers;
  for (const Monomial& m : M.members) {
    auto [in, out] = split_block(M.ring, m, i);
    fibers[out].push_back(in);
  }
  int deg_i = int_to_machine(M.degree[i], "block degree");
  std::vector<Monomial> block_monos;
  block_slice(M.ring.blocks[i] + 1, deg_i, M.ring.block_start(i), block_monos);
  for (auto& [out, fiber] : fibers) {
    std::set<Monomial> have(fiber.begin(), fiber.end());
    for (size_t k = 0; k < fiber.size(); ++k)
      if (!have.count(block_monos[k])) return false;
  }
  return true;
}

inline bool is_multilex_set(const MonomialSet& M) {
  for (int i = 0; i < M.ring.s(); ++i)
    if (!is_xi_lex(M, i)) return false;
  return true;
}

// One pass of xi_lex in every direction.  The result has the same size as
// the input.  `sound` records whether the input was closed under exchanges
// towards smaller indices; only then is the output a faithful multilex
// replacement (multilex, exchange-closed, same size everywhere).
struct SliceLexification {
  MonomialSet set;
  bool sound;
};

inline bool is_exchange_closed(const MonomialSet& M) {
  std::set<Monomial> have(M.members.begin(), M.members.end());
  for (const Monomial& m : M.members)
    for (auto& [v, exp] : m.e) {
      int i = M.ring.var_block(v);
      int j = M.ring.var_index_in_block(v);
      for (int k = 0; k < j; ++k) {
        Monomial swapped = Monomial::variable(M.ring.block_start(i) + k) *
                           Monomial::variable(v).divide_into(m);
        if (!have.count(swapped)) return false;
      }
    }
  return true;
}

inline SliceLexification multilex_slice(const MonomialSet& M) {
  bool sound = is_exchange_closed(M);
  MonomialSet cur = M;
  for (int i = 0; i < cur.ring.s(); ++i) cur = xi_lex(cur, i);
  return {std::move(cur), sound};
}

// Whole-ideal multilex test: every slice of the box [0, bound'] is multilex,
// where bound' exceeds the generating degrees by one (or three when deep).
inline bool is_multilex_ideal(const MonomialIdeal& I, bool deep = false) {
  DegreeVector bound = generation_bound(I);
  int pad = deep ? 3 : 1;
  std::vector<Int> limit;
  for (const Int& x : bound) limit.push_back(x + pad);
  DegreeVector b(I.ring.s(), Int(0));
  std::function<bool(int)> walk = [&](int axis) -> bool {
    if (axis == I.ring.s()) return is_multilex_set(ideal_slice(I, b));
    for (Int v = 0; v <= limit[axis]; ++v) {
      b[axis] = v;
      if (!walk(axis + 1)) return false;
    }
    b[axis] = 0;
    return true;
  };
  return walk(0);
}

// Multilexification of a strongly multistable ideal.  Slices of the box
// [0, bound+1] are lexified one by one; generators are the lexified
// monomials with no lexified divisor one degree down.  `complete` is false
// when the frontier shell (some coordinate at bound_i + 1) still produces
// new generators, i.e. the requested bound was too small to see the whole
// minimal generating set.
struct Multilexification {
  MonomialIdeal ideal;
  bool complete;
};

inline Multilexification multilex_ideal(const MonomialIdeal& I,
                                        const DegreeVector& bound) {
  if (!is_strongly_multistable(I))
    throw input_error("multilexification needs a strongly multistable ideal");
  if (static_cast<int>(bound.size()) != I.ring.s())
    throw input_error("bound has wrong length");
  DegreeVector gb = generation_bound(I);
  if (!leq_componentwise(gb, bound))
    throw input_error("bound must dominate the generating degrees");

  std::map<DegreeVector, std::set<Monomial>> lexed;
  DegreeVector b(I.ring.s(), Int(0));
  std::function<void(int)> walk = [&](int axis) {
    if (axis == I.ring.s()) {
      SliceLexification sl = multilex_slice(ideal_slice(I, b));
      lexed[b] = std::set<Monomial>(sl.set.members.begin(), sl.set.members.end());
      return;
    }
    for (Int v = 0; v <= bound[axis] + 1; ++v) {
      b[axis] = v;
      walk(axis + 1);
    }
    b[axis] = 0;
  };
  walk(0);

  std::vector<Monomial> gens;
  bool complete = true;
  for (auto& [deg, slice] : lexed) {
    bool frontier = false;
    for (int i = 0; i < I.ring.s(); ++i)
      if (deg[i] == bound[i] + 1) frontier = true;
    for (const Monomial& m : slice) {
      bool generated_below = false;
      for (auto& [v, exp] : m.e) {
        DegreeVector down = deg;
        down[I.ring.var_block(v)] -= 1;
        auto it = lexed.find(down);
        if (it != lexed.end() &&
            it->second.count(Monomial::variable(v).divide_into(m))) {
          generated_below = true;
          break;
        }
      }
      if (!generated_below) {
        if (frontier)
          complete = false;
        else
          gens.push_back(m);
      }
    }
  }
  return {MonomialIdeal(I.ring, std::move(gens)), complete};
}

}  // namespace mghilb
