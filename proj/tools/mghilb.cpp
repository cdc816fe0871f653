// mghilb: exact multigraded Hilbert functions and polynomials for monomial
// ideals in products of projective spaces and in toric Cox rings.
//
// Exit codes: 0 success/confirmed, 1 rejected/mismatch, 2 bad input or
// usage, 3 a soundness assumption failed to hold.
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mghilb/io.hpp"
#include "mghilb/persistence.hpp"
#include "mghilb/stable.hpp"
#include "mghilb/stanley.hpp"
#include "mghilb/toric.hpp"

namespace {

using namespace mghilb;

constexpr int kExitConfirmed = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitAssumption = 3;

json int_json(const Int& x) {
  if (x >= -1000000000 && x <= 1000000000)
    return int_to_machine(x, "value");
  return x.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// --ring wins over a ring embedded in the ideal file.
std::pair<LoadedRing, std::optional<LoadedIdeal>> resolve_inputs(
    const std::string& ring_path, const std::string& ideal_path) {
  std::optional<LoadedIdeal> ideal;
  if (!ideal_path.empty())
    ideal = parse_ideal_json(read_json_file(ideal_path));
  if (!ring_path.empty())
    return {parse_ring_json(read_json_file(ring_path)), std::move(ideal)};
  if (ideal && ideal->ring) return {*ideal->ring, std::move(ideal)};
  throw input_error("no ring given: pass --ring or embed one in the ideal file");
}

MonomialIdeal product_ideal(const LoadedRing& ring, const LoadedIdeal& li) {
  if (!ring.product)
    throw input_error("this command needs a product ring, not a cox ring");
  return MonomialIdeal(*ring.product,
                       monomials_from_rows(li.gens, ring.product->nvars()));
}

ToricIdeal build_toric_ideal(const LoadedRing& ring, const LoadedIdeal& li) {
  if (!ring.cox)
    throw input_error("this command needs a cox ring, not a product ring");
  return ToricIdeal(*ring.cox,
                    monomials_from_rows(li.gens, ring.cox->nvars()));
}

// Componentwise max of the generating degrees and (2,...,2): the smallest
// anchor the verification pipeline accepts.
DegreeVector anchor_or_default(const std::string& csv, const MonomialIdeal& I) {
  if (!csv.empty()) return parse_degree_csv(csv);
  DegreeVector a = generation_bound(I);
  for (Int& x : a) x = std::max(x, Int(2));
  return a;
}

json point_to_json(const PersistencePoint& pt) {
  json out;
  out["d"] = degree_to_json(pt.d);
  out["anchor"] = degree_to_json(pt.anchor);
  out["max_gotzmann"] = int_json(pt.max_gotzmann);
  out["strict"] = pt.strict;
  json axes = json::array();
  for (const AxisReport& ax : pt.axes) {
    json a;
    a["a"] = int_json(ax.a);
    a["c"] = int_json(ax.c);
    a["c_unrestricted"] = int_json(ax.c_unrestricted);
    a["candidates"] = int_json(ax.candidates);
    a["d"] = int_json(ax.d);
    axes.push_back(std::move(a));
  }
  out["axes"] = std::move(axes);
  json box = json::array();
  for (const DegreeVector& b : pt.box()) box.push_back(degree_to_json(b));
  out["box"] = std::move(box);
  return out;
}

json verdict_to_json(const Verdict& v) {
  json out;
  out["confirmed"] = v.confirmed;
  out["matched"] = int_json(v.matched);
  if (!v.reason.empty()) out["reason"] = v.reason;
  if (v.failing_point) {
    out["failing_point"] = degree_to_json(*v.failing_point);
    out["expected"] = rat_to_string(v.expected);
    out["actual"] = int_json(v.actual);
  }
  if (v.point) out["point"] = point_to_json(*v.point);
  return out;
}

int finish_verdict(const Verdict& v, bool json_out) {
  if (json_out) {
    emit(verdict_to_json(v));
  } else if (v.confirmed) {
    std::cout << "confirmed";
    if (v.point) std::cout << " at d=" << degree_to_string(v.point->d);
    std::cout << "; " << v.matched << " box points matched\n";
  } else {
    std::cout << "rejected: " << (v.reason.empty() ? "mismatch" : v.reason);
    if (v.failing_point)
      std::cout << " at " << degree_to_string(*v.failing_point) << " (expected "
                << rat_to_string(v.expected) << ", found " << v.actual << ")";
    std::cout << "\n";
  }
  return v.confirmed ? kExitConfirmed : kExitRejected;
}

PersistenceOptions make_options(bool strict, long long scan_cap) {
  PersistenceOptions opts;
  opts.strict_gotzmann = strict;
  if (scan_cap >= 0) opts.scan_cap = Int(scan_cap);
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact multigraded Hilbert functions, Hilbert polynomials, and "
      "finite-point verification certificates for monomial ideals"};
  app.require_subcommand(1);

  std::string ring_path, ideal_path, poly_arg, degree_csv, anchor_csv;
  std::string nef_path, d_csv, value_str;
  int growth_n = -1, growth_b = -1, growth_d = -1;
  long long scan_cap = -1;
  bool strict = false, deep = false, json_out = false;

  auto add_common = [&](CLI::App* sub, bool ring, bool ideal, bool poly,
                        bool degree, bool anchor) {
    if (ring) sub->add_option("--ring", ring_path, "ring description (JSON file)");
    if (ideal)
      sub->add_option("--ideal", ideal_path, "monomial ideal (JSON file)");
    if (poly)
      sub->add_option("--poly", poly_arg,
                      "polynomial: expression like '3*t1+2*t2+1', inline "
                      "JSON, or a .json file");
    if (degree)
      sub->add_option("--degree", degree_csv, "degree vector, e.g. 3,3");
    if (anchor)
      sub->add_option("--anchor", anchor_csv,
                      "anchor degree vector (default: generating degrees "
                      "raised to at least 2 in each coordinate)");
    sub->add_flag("--json", json_out, "machine-readable output");
  };

  CLI::App* hilb = app.add_subcommand(
      "hilb", "Hilbert function value of a product-ring monomial ideal");
  add_common(hilb, true, true, false, true, false);

  CLI::App* hpoly = app.add_subcommand(
      "hpoly",
      "Hilbert polynomial via the monomial decomposition (strongly "
      "multistable ideals)");
  add_common(hpoly, true, true, false, false, true);

  CLI::App* gotz = app.add_subcommand(
      "gotzmann",
      "Gotzmann number and binomial representation of a one-variable "
      "Hilbert polynomial");
  add_common(gotz, false, false, true, false, false);
  gotz->add_option("--scan-cap", scan_cap, "cap on the representation length");

  CLI::App* growth = app.add_subcommand(
      "growth",
      "one-step growth bound: --value V --d D for the plain operator, "
      "--value V --n N --b B for the blockwise one");
  growth->add_option("--value", value_str, "nonnegative integer")->required();
  growth->add_option("--d", growth_d, "growth direction (plain operator)");
  growth->add_option("--n", growth_n, "block size (blockwise operator)");
  growth->add_option("--b", growth_b, "degree step (blockwise operator)");
  growth->add_flag("--json", json_out, "machine-readable output");

  CLI::App* mlex = app.add_subcommand(
      "multilex",
      "multilexification of a strongly multistable ideal up to a degree "
      "bound");
  add_common(mlex, true, true, false, true, false);
  mlex->add_flag("--deep-check", deep,
                 "verify the output over a wider degree box");

  CLI::App* stan = app.add_subcommand(
      "stanley", "monomial decomposition pairs above an anchor degree");
  add_common(stan, true, true, false, false, true);

  CLI::App* dec = app.add_subcommand(
      "decompose",
      "binomial-basis coefficient table of a multivariate polynomial");
  add_common(dec, true, false, true, false, true);

  CLI::App* pp = app.add_subcommand(
      "persist-point",
      "degree from whose 2^s box agreement persists everywhere above");
  add_common(pp, true, false, true, false, true);
  pp->add_flag("--strict-gotzmann", strict,
               "force the first coordinate strictly past the table maximum");
  pp->add_option("--scan-cap", scan_cap, "stabilization scan cap");

  CLI::App* ver = app.add_subcommand(
      "verify",
      "confirm or reject a Hilbert polynomial candidate with a finite "
      "certificate");
  add_common(ver, true, true, true, false, true);
  ver->add_flag("--strict-gotzmann", strict,
                "force the first coordinate strictly past the table maximum");
  ver->add_option("--scan-cap", scan_cap, "stabilization scan cap");

  CLI::App* interp = app.add_subcommand(
      "interpolate",
      "Hilbert polynomial by exact interpolation above an anchor");
  add_common(interp, true, true, false, false, true);

  CLI::App* thilb = app.add_subcommand(
      "toric-hilb", "Hilbert function value in a graded cox ring");
  add_common(thilb, true, true, false, true, false);

  CLI::App* zono = app.add_subcommand(
      "zonotope", "images of the 2^s box corners under the nef degrees");
  zono->add_option("--nef", nef_path,
                   "JSON file with a nef_basis (a ring file works)")
      ->required();
  zono->add_option("--d", d_csv, "base corner, e.g. 2,2,2")->required();
  zono->add_flag("--json", json_out, "machine-readable output");

  CLI::App* tver = app.add_subcommand(
      "toric-verify",
      "confirm or reject a Hilbert polynomial candidate over a cox ring");
  add_common(tver, true, true, true, false, true);
  tver->add_flag("--strict-gotzmann", strict,
                 "force the first coordinate strictly past the table maximum");
  tver->add_option("--scan-cap", scan_cap, "stabilization scan cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (hilb->parsed()) {
      auto [ring, ideal] = resolve_inputs(ring_path, ideal_path);
      if (!ideal) throw input_error("pass --ideal");
      if (degree_csv.empty()) throw input_error("pass --degree");
      MonomialIdeal I = product_ideal(ring, *ideal);
      DegreeVector b = parse_degree_csv(degree_csv);
      if (static_cast<int>(b.size()) != I.ring.s())
        throw input_error("degree vector has wrong length");
      Int h = hilbert_function(I, b);
      if (json_out) {
        json out;
        out["degree"] = degree_to_json(b);
        out["value"] = int_json(h);
        emit(out);
      } else {
        std::cout << h << "\n";
      }
      return kExitConfirmed;
    }

    if (hpoly->parsed()) {
      auto [ring, ideal] = resolve_inputs(ring_path, ideal_path);
      if (!ideal) throw input_error("pass --ideal");
      MonomialIdeal I = product_ideal(ring, *ideal);
      if (!is_strongly_multistable(I))
        throw input_error(
            "ideal is not strongly multistable; use `interpolate` instead");
      DegreeVector a = anchor_or_default(anchor_csv, I);
      PartialDecomposition D = partial_decomposition(I, a);
      MPoly P = decomposition_polynomial(D);
      if (json_out) {
        json out;
        out["anchor"] = degree_to_json(a);
        out["poly"] = poly_to_json(P);
        out["rendered"] = poly_to_string(P);
        emit(out);
      } else {
        std::cout << poly_to_string(P) << "\n";
      }
      return kExitConfirmed;
    }

    if (gotz->parsed()) {
      if (poly_arg.empty()) throw input_error("pass --poly");
      UPoly P = load_poly_arg(poly_arg, 1).to_upoly(0);
      Int cap = scan_cap >= 0 ? Int(scan_cap) : Int(1000000);
      auto rep = try_gotzmann_rep(P, cap);
      if (!rep) {
        std::cout << "not a one-variable Hilbert polynomial\n";
        return kExitRejected;
      }
      if (json_out) {
        json out;
        out["gotzmann_number"] = int_json(Int(rep->a.size()));
        json seq = json::array();
        for (const Int& x : rep->a) seq.push_back(int_json(x));
        out["rep"] = std::move(seq);
        emit(out);
      } else {
        std::cout << "gotzmann_number: " << rep->a.size() << "\n";
        std::cout << "rep:";
        for (const Int& x : rep->a) std::cout << " " << x;
        std::cout << "\n";
      }
      return kExitConfirmed;
    }

    if (growth->parsed()) {
      Int value(value_str);
      if (value < 0) throw input_error("--value must be nonnegative");
      Int result;
      if (growth_n >= 0 || growth_b >= 0) {
        if (growth_n < 0 || growth_b < 1)
          throw input_error("blockwise growth needs --n >= 0 and --b >= 1");
        result = crona_growth(value, growth_n, Int(growth_b));
      } else {
        if (growth_d < 1) throw input_error("plain growth needs --d >= 1");
        result = macaulay_growth(value, growth_d);
      }
      if (json_out) {
        json out;
        out["value"] = int_json(result);
        emit(out);
      } else {
        std::cout << result << "\n";
      }
      return kExitConfirmed;
    }

    if (mlex->parsed()) {
      auto [ring, ideal] = resolve_inputs(ring_path, ideal_path);
      if (!ideal) throw input_error("pass --ideal");
      MonomialIdeal I = product_ideal(ring, *ideal);
      DegreeVector bound =
          degree_csv.empty() ? generation_bound(I) : parse_degree_csv(degree_csv);
      Multilexification ml = multilex_ideal(I, bound);
      if (!ml.complete)
        throw assumption_error(
            "new generators appear beyond the bound; raise --degree");
      if (deep && !is_multilex_ideal(ml.ideal, true))
        throw assumption_error("deep check failed on the multilexified ideal");
      if (json_out) {
        json out;
        out["bound"] = degree_to_json(bound);
        out["complete"] = ml.complete;
        if (deep) out["deep_checked"] = true;
        json gens = json::array();
        for (const Monomial& g : ml.ideal.gens)
          gens.push_back(monomial_to_dense(g, I.ring.nvars()));
        out["generators"] = std::move(gens);
        emit(out);
      } else {
        for (const Monomial& g : ml.ideal.gens)
          std::cout << monomial_to_string(I.ring, g) << "\n";
      }
      return kExitConfirmed;
    }

    if (stan->parsed()) {
      auto [ring, ideal] = resolve_inputs(ring_path, ideal_path);
      if (!ideal) throw input_error("pass --ideal");
      MonomialIdeal I = product_ideal(ring, *ideal);
      DegreeVector a = anchor_or_default(anchor_csv, I);
      PartialDecomposition D = partial_decomposition(I, a);
      if (json_out) {
        json out;
        out["anchor"] = degree_to_json(a);
        json pairs = json::array();
        for (const StanleyPair& p : D.pairs) {
          json e;
          e["monomial"] = monomial_to_dense(p.base, I.ring.nvars());
          e["sigma"] = p.sigma;
          pairs.push_back(std::move(e));
        }
        out["pairs"] = std::move(pairs);
        emit(out);
      } else {
        for (const StanleyPair& p : D.pairs) {
          std::cout << monomial_to_string(I.ring, p.base) << " sigma=(";
          for (size_t i = 0; i < p.sigma.size(); ++i)
            std::cout << (i ? "," : "") << p.sigma[i];
          std::cout << ")\n";
        }
      }
      return kExitConfirmed;
    }

    if (dec->parsed()) {
      if (ring_path.empty()) throw input_error("pass --ring");
      if (poly_arg.empty()) throw input_error("pass --poly");
      if (anchor_csv.empty()) throw input_error("pass --anchor");
      LoadedRing ring = parse_ring_json(read_json_file(ring_path));
      if (!ring.product) throw input_error("this command needs a product ring");
      DegreeVector a = parse_degree_csv(anchor_csv);
      MPoly P = load_poly_arg(poly_arg, ring.product->s());
      FTable F = standard_decomposition(P, a, *ring.product);
      if (json_out) {
        json out;
        out["anchor"] = degree_to_json(a);
        out["p"] = F.p;
        json entries = json::array();
        for (const auto& [key, f] : F.entries) {
          json e;
          e["index"] = key;
          json coeffs = json::array();
          for (const Rat& c : f.coeffs()) coeffs.push_back(rat_to_string(c));
          e["coeffs"] = std::move(coeffs);
          e["rendered"] = upoly_to_string(f, "t1");
          entries.push_back(std::move(e));
        }
        out["entries"] = std::move(entries);
        emit(out);
      } else {
        for (const auto& [key, f] : F.entries) {
          std::cout << "F[";
          for (size_t i = 0; i < key.size(); ++i)
            std::cout << (i ? "," : "") << key[i];
          std::cout << "] = " << upoly_to_string(f, "t1") << "\n";
        }
      }
      return kExitConfirmed;
    }

    if (pp->parsed()) {
      if (ring_path.empty()) throw input_error("pass --ring");
      if (poly_arg.empty()) throw input_error("pass --poly");
      if (anchor_csv.empty()) throw input_error("pass --anchor");
      LoadedRing ring = parse_ring_json(read_json_file(ring_path));
      if (!ring.product) throw input_error("this command needs a product ring");
      DegreeVector a = parse_degree_csv(anchor_csv);
      if (static_cast<int>(a.size()) != ring.product->s())
        throw input_error("anchor has wrong length");
      MPoly P = load_poly_arg(poly_arg, ring.product->s());
      PersistencePoint pt;
      try {
        pt = find_persistence_point(P, a, *ring.product,
                                    make_options(strict, scan_cap));
      } catch (const input_error& e) {
        std::cout << "rejected: " << e.what() << "\n";
        return kExitRejected;
      }
      if (json_out) {
        emit(point_to_json(pt));
      } else {
        std::cout << "d: " << degree_to_string(pt.d) << "\n";
        std::cout << "box:";
        for (const DegreeVector& b : pt.box())
          std::cout << " " << degree_to_string(b);
        std::cout << "\n";
      }
      return kExitConfirmed;
    }

    if (ver->parsed()) {
      auto [ring, ideal] = resolve_inputs(ring_path, ideal_path);
      if (!ideal) throw input_error("pass --ideal");
      if (poly_arg.empty()) throw input_error("pass --poly");
      MonomialIdeal I = product_ideal(ring, *ideal);
      DegreeVector a = anchor_or_default(anchor_csv, I);
      MPoly P = load_poly_arg(poly_arg, I.ring.s());
      Verdict v = verify_polynomial(I, P, a, make_options(strict, scan_cap));
      return finish_verdict(v, json_out);
    }

    if (interp->parsed()) {
      auto [ring, ideal] = resolve_inputs(ring_path, ideal_path);
      if (!ideal) throw input_error("pass --ideal");
      MonomialIdeal I = product_ideal(ring, *ideal);
      DegreeVector a = anchor_or_default(anchor_csv, I);
      MPoly P = interpolate_hilbert_polynomial(I, a);
      if (json_out) {
        json out;
        out["anchor"] = degree_to_json(a);
        out["poly"] = poly_to_json(P);
        out["rendered"] = poly_to_string(P);
        emit(out);
      } else {
        std::cout << poly_to_string(P) << "\n";
      }
      return kExitConfirmed;
    }

    if (thilb->parsed()) {
      auto [ring, ideal] = resolve_inputs(ring_path, ideal_path);
      if (!ideal) throw input_error("pass --ideal");
      if (degree_csv.empty()) throw input_error("pass --degree");
      ToricIdeal J = build_toric_ideal(ring, *ideal);
      DegreeVector b = parse_degree_csv(degree_csv);
      if (static_cast<int>(b.size()) != J.ring.s())
        throw input_error("degree vector has wrong length");
      Int h = toric_hilbert_function(J, b);
      if (json_out) {
        json out;
        out["degree"] = degree_to_json(b);
        out["value"] = int_json(h);
        emit(out);
      } else {
        std::cout << h << "\n";
      }
      return kExitConfirmed;
    }

    if (zono->parsed()) {
      json j = read_json_file(nef_path);
      std::vector<DegreeVector> C;
      if (j.contains("nef_basis")) {
        for (const json& r : j.at("nef_basis")) {
          DegreeVector row;
          for (const json& x : r) row.push_back(int_from_json(x, "nef entry"));
          C.push_back(std::move(row));
        }
      } else {
        throw input_error("the --nef file needs a 'nef_basis' array");
      }
      DegreeVector d = parse_degree_csv(d_csv);
      if (d.size() != C.size())
        throw input_error("--d must have one entry per nef row");
      std::vector<DegreeVector> pts = zonotope(C, d);
      if (json_out) {
        json out = json::array();
        for (const DegreeVector& p : pts) out.push_back(degree_to_json(p));
        emit(out);
      } else {
        for (const DegreeVector& p : pts)
          std::cout << degree_to_string(p) << "\n";
      }
      return kExitConfirmed;
    }

    if (tver->parsed()) {
      auto [ring, ideal] = resolve_inputs(ring_path, ideal_path);
      if (!ideal) throw input_error("pass --ideal");
      if (poly_arg.empty()) throw input_error("pass --poly");
      if (!ring.cox) throw input_error("this command needs a cox ring");
      if (ring.nef.empty())
        throw input_error("the ring file needs a 'nef_basis' array");
      ToricIdeal J = build_toric_ideal(ring, *ideal);
      int s = ring.cox->s();
      MPoly P = load_poly_arg(poly_arg, s);
      if (anchor_csv.empty()) throw input_error("pass --anchor");
      DegreeVector a = parse_degree_csv(anchor_csv);
      Verdict v = verify_toric(*ring.cox, J, P, ring.nef, a,
                               make_options(strict, scan_cap));
      return finish_verdict(v, json_out);
    }

    throw input_error("no subcommand selected");
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const scan_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const assumption_error& e) {
    std::cerr << "assumption violated: " << e.what() << "\n";
    return kExitAssumption;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
