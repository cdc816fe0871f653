// Input and output formats: JSON schemas for rings, ideals, and
// polynomials; a small expression grammar for polynomials on the command
// line; deterministic rendering helpers shared by the CLI and the tests.
#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "mghilb/poly.hpp"
#include "mghilb/ring.hpp"
#include "mghilb/toric.hpp"

namespace mghilb {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw input_error(path + ": " + e.what());
  }
  return j;
}

inline Int int_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty()) throw input_error(std::string(what) + ": empty number");
    size_t k = (s[0] == '-') ? 1 : 0;
    if (k == s.size()) throw input_error(std::string(what) + ": bad number");
    for (; k < s.size(); ++k)
      if (!isdigit(static_cast<unsigned char>(s[k])))
        throw input_error(std::string(what) + ": bad number '" + s + "'");
    return Int(s);
  }
  throw input_error(std::string(what) + ": expected an integer");
}

// "p" or "p/q" with q > 0
inline Rat rat_from_string(const std::string& s, const char* what) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw input_error(std::string(what) + ": zero denominator");
    return Rat(num) / Rat(den);
  } catch (const std::runtime_error& e) {
    throw input_error(std::string(what) + ": bad rational '" + s + "'");
  }
}

inline std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

// ---------------------------------------------------------------------------
// rings

struct LoadedRing {
  std::optional<ProductRing> product;
  std::optional<CoxRing> cox;
  std::vector<DegreeVector> nef;  // rows; only for cox rings, may be empty

  int axis_count() const {
    if (product) return product->s();
    if (cox) return cox->s();
    throw input_error("no ring loaded");
  }
  int nvars() const {
    if (product) return product->nvars();
    if (cox) return cox->nvars();
    throw input_error("no ring loaded");
  }
};

// {"type":"product","blocks":[1,2]}
// {"type":"cox","degree_matrix":[[1,0],[-1,1],...],"nef_basis":[[1,0],[0,1]],
//  "regular_index":1}
// degree_matrix lists one column per variable; nef_basis lists row vectors,
// the regular class first (regular_index, when present, must equal 1).
inline LoadedRing parse_ring_json(const json& j) {
  LoadedRing out;
  if (!j.is_object() || !j.contains("type"))
    throw input_error("ring: expected an object with a 'type' field");
  std::string type = j.at("type").get<std::string>();
  if (type == "product") {
    if (!j.contains("blocks") || !j.at("blocks").is_array())
      throw input_error("ring: product rings need a 'blocks' array");
    std::vector<int> blocks;
    for (const json& b : j.at("blocks"))
      blocks.push_back(int_to_machine(int_from_json(b, "ring block"), "ring block"));
    out.product = ProductRing(std::move(blocks));
    return out;
  }
  if (type == "cox") {
    if (!j.contains("degree_matrix") || !j.at("degree_matrix").is_array() ||
        j.at("degree_matrix").empty())
      throw input_error("ring: cox rings need a nonempty 'degree_matrix'");
    std::vector<DegreeVector> cols;
    for (const json& c : j.at("degree_matrix")) {
      DegreeVector col;
      for (const json& x : c) col.push_back(int_from_json(x, "degree entry"));
      cols.push_back(std::move(col));
    }
    int s = static_cast<int>(cols[0].size());
    out.cox = CoxRing(std::move(cols), s);
    if (j.contains("nef_basis")) {
      for (const json& r : j.at("nef_basis")) {
        DegreeVector row;
        for (const json& x : r) row.push_back(int_from_json(x, "nef entry"));
        if (static_cast<int>(row.size()) != s)
          throw input_error("ring: nef rows must match the grading rank");
        out.nef.push_back(std::move(row));
      }
    }
    if (j.contains("regular_index") &&
        int_from_json(j.at("regular_index"), "regular_index") != 1)
      throw input_error(
          "ring: list the regular class first (regular_index must be 1)");
    return out;
  }
  throw input_error("ring: unknown type '" + type + "'");
}

// ---------------------------------------------------------------------------
// ideals

struct LoadedIdeal {
  std::vector<std::vector<Int>> gens;  // dense exponent rows
  std::optional<LoadedRing> ring;     // embedded ring, if any
};

// {"generators":[[1,0,0,0],[0,1,1,0]], "ring":{...}?}
inline LoadedIdeal parse_ideal_json(const json& j) {
  LoadedIdeal out;
  if (!j.is_object() || !j.contains("generators") ||
      !j.at("generators").is_array())
    throw input_error("ideal: expected an object with a 'generators' array");
  for (const json& g : j.at("generators")) {
    if (!g.is_array()) throw input_error("ideal: generators must be arrays");
    std::vector<Int> row;
    for (const json& x : g) row.push_back(int_from_json(x, "exponent"));
    out.gens.push_back(std::move(row));
  }
  if (j.contains("ring")) out.ring = parse_ring_json(j.at("ring"));
  return out;
}

inline Monomial monomial_from_dense(const std::vector<Int>& row) {
  std::vector<std::pair<int, int>> e;
  for (size_t v = 0; v < row.size(); ++v) {
    if (row[v] < 0) throw input_error("negative exponent in generator");
    if (row[v] != 0)
      e.emplace_back(static_cast<int>(v), int_to_machine(row[v], "exponent"));
  }
  return Monomial(std::move(e));
}

inline std::vector<int> monomial_to_dense(const Monomial& m, int nvars) {
  std::vector<int> row(nvars, 0);
  for (auto& [v, k] : m.e) row[v] = k;
  return row;
}

inline std::vector<Monomial> monomials_from_rows(
    const std::vector<std::vector<Int>>& rows, int nvars) {
  std::vector<Monomial> ms;
  for (const std::vector<Int>& row : rows) {
    if (static_cast<int>(row.size()) != nvars)
      throw input_error("generator exponent row has wrong length");
    ms.push_back(monomial_from_dense(row));
  }
  return ms;
}

// ---------------------------------------------------------------------------
// degree vectors

// "2,2,2" with optional signs
inline DegreeVector parse_degree_csv(const std::string& s) {
  DegreeVector out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw input_error("degree list: empty entry");
    size_t k = (token[0] == '-') ? 1 : 0;
    if (k == token.size()) throw input_error("degree list: bad entry");
    for (size_t i = k; i < token.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(token[i])))
        throw input_error("degree list: bad entry '" + token + "'");
    out.push_back(Int(token));
  }
  if (out.empty()) throw input_error("degree list: no entries");
  return out;
}

// ---------------------------------------------------------------------------
// polynomials

// {"terms":[{"coeff":"1/2","powers":[2,0]}, ...]}
inline MPoly poly_from_json(const json& j, int s) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw input_error("polynomial: expected an object with a 'terms' array");
  MPoly p(s);
  for (const json& t : j.at("terms")) {
    if (!t.contains("coeff") || !t.contains("powers"))
      throw input_error("polynomial: each term needs 'coeff' and 'powers'");
    Rat c = t.at("coeff").is_string()
                ? rat_from_string(t.at("coeff").get<std::string>(), "coeff")
                : Rat(int_from_json(t.at("coeff"), "coeff"));
    std::vector<int> e;
    for (const json& x : t.at("powers")) {
      Int v = int_from_json(x, "power");
      if (v < 0) throw input_error("polynomial: negative power");
      e.push_back(int_to_machine(v, "power"));
    }
    if (static_cast<int>(e.size()) != s)
      throw input_error("polynomial: a powers row has wrong length");
    p.add_term(e, c);
  }
  return p;
}

// Expression grammar: terms joined by + and -, each term a '*'-separated
// product of factors; a factor is an integer, a rational p/q, tK, or tK^E.
// Example: "1/2*t1^2+3/2*t1+2*t2+2".
inline MPoly parse_poly_expr(const std::string& src, int s) {
  std::string txt;
  for (char ch : src)
    if (!isspace(static_cast<unsigned char>(ch))) txt.push_back(ch);
  if (txt.empty()) throw input_error("polynomial: empty expression");

  MPoly out(s);
  size_t pos = 0;
  while (pos < txt.size()) {
    Rat sign = 1;
    while (pos < txt.size() && (txt[pos] == '+' || txt[pos] == '-')) {
      if (txt[pos] == '-') sign = -sign;
      ++pos;
    }
    size_t end = pos;
    while (end < txt.size() && txt[end] != '+' && txt[end] != '-') ++end;
    if (end == pos) throw input_error("polynomial: empty term in expression");
    std::string term = txt.substr(pos, end - pos);
    pos = end;

    MPoly acc(s, sign);
    size_t fstart = 0;
    while (fstart <= term.size()) {
      size_t fend = term.find('*', fstart);
      std::string f =
          term.substr(fstart, fend == std::string::npos ? fend : fend - fstart);
      if (f.empty()) throw input_error("polynomial: empty factor in '" + term + "'");
      if (f[0] == 't') {
        size_t caret = f.find('^');
        std::string idx = f.substr(1, caret == std::string::npos
                                          ? std::string::npos
                                          : caret - 1);
        for (char ch : idx)
          if (!isdigit(static_cast<unsigned char>(ch)))
            throw input_error("polynomial: bad variable '" + f + "'");
        if (idx.empty()) throw input_error("polynomial: bad variable '" + f + "'");
        int axis = std::stoi(idx);
        if (axis < 1 || axis > s)
          throw input_error("polynomial: variable t" + idx + " out of range");
        int e = 1;
        if (caret != std::string::npos) {
          std::string es = f.substr(caret + 1);
          if (es.empty()) throw input_error("polynomial: bad exponent in '" + f + "'");
          for (char ch : es)
            if (!isdigit(static_cast<unsigned char>(ch)))
              throw input_error("polynomial: bad exponent in '" + f + "'");
          e = std::stoi(es);
        }
        MPoly v = MPoly::var(s, axis - 1);
        for (int k = 0; k < e; ++k) acc = acc * v;
      } else {
        acc = acc * rat_from_string(f, "coefficient");
      }
      if (fend == std::string::npos) break;
      fstart = fend + 1;
    }
    out = out + acc;
  }
  return out;
}

// Accepts an inline expression, an inline JSON object, or a path to a JSON
// file.
inline MPoly load_poly_arg(const std::string& arg, int s) {
  if (!arg.empty() && arg[0] == '{') {
    json j = json::parse(arg, nullptr, false);
    if (j.is_discarded()) throw input_error("polynomial: bad inline JSON");
    return poly_from_json(j, s);
  }
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json")
    return poly_from_json(read_json_file(arg), s);
  return parse_poly_expr(arg, s);
}

// Deterministic term order: total degree descending, then exponent vector
// lex descending.
inline std::vector<std::pair<std::vector<int>, Rat>> sorted_terms(
    const MPoly& p) {
  std::vector<std::pair<std::vector<int>, Rat>> ts(p.terms().begin(),
                                                   p.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (int e : x.first) dx += e;
    for (int e : y.first) dy += e;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  return ts;
}

inline std::string poly_to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(p)) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool constant = true;
    for (int k : e)
      if (k) constant = false;
    if (constant) {
      os << rat_to_string(a);
    } else {
      bool printed = false;
      if (a != 1) {
        os << rat_to_string(a);
        printed = true;
      }
      for (size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (printed) os << "*";
        os << "t" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        printed = true;
      }
    }
  }
  return os.str();
}

inline json poly_to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : sorted_terms(p)) {
    json t;
    t["coeff"] = rat_to_string(c);
    t["powers"] = e;
    terms.push_back(std::move(t));
  }
  json out;
  out["terms"] = std::move(terms);
  return out;
}

inline std::string upoly_to_string(const UPoly& u, const std::string& var) {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = u.degree(); i >= 0; --i) {
    Rat a = u.coeff(i);
    if (a == 0) continue;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0) {
      os << rat_to_string(a);
    } else {
      if (a != 1) os << rat_to_string(a) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// monomial rendering

inline std::string monomial_to_string(const ProductRing& ring,
                                      const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  for (auto& [v, k] : m.e) {
    os << "x_{" << (ring.var_block(v) + 1) << ","
       << ring.var_index_in_block(v) << "}";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

inline std::string toric_monomial_to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [v, k] : m.e) {
    if (!first) os << "*";
    first = false;
    os << "z" << v;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

inline std::string degree_to_string(const DegreeVector& b) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ")";
  return os.str();
}

inline json degree_to_json(const DegreeVector& b) {
  json out = json::array();
  for (const Int& x : b) {
    if (x >= -1000000000 && x <= 1000000000)
      out.push_back(int_to_machine(x, "degree"));
    else
      out.push_back(x.str());
  }
  return out;
}

}  // namespace mghilb
