// Exact-rational polynomials: dense univariate (UPoly) and sparse
// multivariate (MPoly) in t_1,...,t_s.  Both are immutable value types with
// coefficient-map equality.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "mghilb/common.hpp"

namespace mghilb {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Rat& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly var() { return UPoly(std::vector<Rat>{0, 1}); }

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
  }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat operator()(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
  }
  Rat operator()(const Int& x) const { return (*this)(Rat(x)); }

  UPoly operator+(const UPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator-(const UPoly& o) const { return *this + o * Rat(-1); }
  UPoly operator*(const Rat& k) const {
    if (k == 0) return UPoly();
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= k;
    return UPoly(std::move(r));
  }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
  }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;  // c_[i] multiplies t^i
};

// binom(t + shift, k) expanded as a polynomial in t of degree k (k >= 0).
inline UPoly binom_poly(const Int& shift, int k) {
  if (k < 0) return UPoly();
  UPoly p{Rat(1)};
  Rat fact = 1;
  for (int m = 0; m < k; ++m) {
    p = p * UPoly(std::vector<Rat>{Rat(shift - m), 1});
    fact *= m + 1;
  }
  return p * (Rat(1) / fact);
}

class MPoly {
 public:
  explicit MPoly(int nvars = 1) : n_(nvars) {}
  MPoly(int nvars, const Rat& c) : n_(nvars) {
    if (c != 0) t_[std::vector<int>(nvars, 0)] = c;
  }

  static MPoly var(int nvars, int axis) {
    MPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[axis] = 1;
    p.t_[e] = 1;
    return p;
  }
  static MPoly from_upoly(const UPoly& u, int nvars, int axis) {
    MPoly p(nvars);
    for (int i = 0; i <= u.degree(); ++i) {
      if (u.coeff(i) == 0) continue;
      std::vector<int> e(nvars, 0);
      e[axis] = i;
      p.t_[e] = u.coeff(i);
    }
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return t_; }

  void add_term(const std::vector<int>& e, const Rat& c) {
    auto it = t_.find(e);
    Rat v = (it == t_.end() ? Rat(0) : it->second) + c;
    if (v == 0) {
      if (it != t_.end()) t_.erase(it);
    } else {
      t_[e] = v;
    }
  }

  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
  }
  MPoly operator-(const MPoly& o) const { return *this + o * Rat(-1); }
  MPoly operator*(const Rat& k) const {
    MPoly r(n_);
    if (k == 0) return r;
    for (const auto& [e, c] : t_) r.t_[e] = c * k;
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r(n_);
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_) {
        std::vector<int> e(n_);
        for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  bool operator==(const MPoly& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  Rat evaluate(const std::vector<Int>& point) const {
    if (static_cast<int>(point.size()) != n_)
      throw input_error("evaluation point has wrong dimension");
    Rat total = 0;
    for (const auto& [e, c] : t_) {
      Rat m = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) m *= Rat(point[i]);
      total += m;
    }
    return total;
  }

  // Substitute an integer for one variable, keeping dimension n_ (the axis
  // becomes inert with exponent 0 everywhere).
  MPoly substitute(int axis, const Int& value) const {
    MPoly r(n_);
    for (const auto& [e, c] : t_) {
      Rat m = c;
      for (int k = 0; k < e[axis]; ++k) m *= Rat(value);
      std::vector<int> e2 = e;
      e2[axis] = 0;
      r.add_term(e2, m);
    }
    return r;
  }

  int degree_in(int axis) const {
    int d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e[axis]);
    return d;
  }

  // Keep only terms whose exponent in `axis` equals k, dividing that power
  // out; the coefficient "layer" used by basis-change peeling.
  MPoly layer(int axis, int k) const {
    MPoly r(n_);
    for (const auto& [e, c] : t_) {
      if (e[axis] != k) continue;
      std::vector<int> e2 = e;
      e2[axis] = 0;
      r.t_[e2] = c;
    }
    return r;
  }

  // Collapse to a univariate polynomial; requires all other axes inert.
  UPoly to_upoly(int axis) const {
    std::vector<Rat> c(degree_in(axis) + 1, Rat(0));
    for (const auto& [e, cf] : t_) {
      for (int i = 0; i < n_; ++i)
        if (i != axis && e[i] != 0)
          throw input_error("polynomial is not univariate in the given axis");
      c[e[axis]] = cf;
    }
    return UPoly(std::move(c));
  }

 private:
  int n_;
  std::map<std::vector<int>, Rat> t_;
};

inline std::vector<int> maxdeg(const MPoly& p) {
  std::vector<int> v(p.nvars(), 0);
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < p.nvars(); ++i) v[i] = std::max(v[i], e[i]);
  return v;
}

}  // namespace mghilb
