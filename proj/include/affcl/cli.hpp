#pragma once

// Command-line front end. `run` is the whole program minus process plumbing;
// tools/affcl.cpp only forwards argv to it.

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "affcl/abelian_group.hpp"
#include "affcl/catalog.hpp"
#include "affcl/errors.hpp"
#include "affcl/hyperbola.hpp"
#include "affcl/monoid.hpp"
#include "affcl/oracle.hpp"
#include "affcl/ring_io.hpp"

namespace affcl::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_disagreement = 2;

inline constexpr long long monoid_strong_kmax = 5;
inline constexpr long long hyperbola_strong_kmax = 6;

struct Report {
  nlohmann::json json = nlohmann::json::object();
  std::vector<std::string> lines;
  int status = exit_ok;
};

inline nlohmann::json group_json(const FGAbelianGroup &g) {
  nlohmann::json t = nlohmann::json::array();
  for (const auto &x : g.torsion_invariants()) t.push_back(integer_json(x));
  return {{"free_rank", g.free_rank()}, {"torsion", t}, {"text", to_string(g)}};
}

inline nlohmann::json support_json(const SupportSet &s) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t f : s.facets()) out.push_back(f + 1);
  return out;
}

inline nlohmann::json supports_json(const std::set<SupportSet> &ss) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &s : ss) out.push_back(support_json(s));
  return out;
}

inline const char *yes_no(bool b) { return b ? "true" : "false"; }

/// "1,-2,3" -> (1, -2, 3)
inline IntegerVector parse_divisor(const std::string &text) {
  IntegerVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    std::size_t start = (!item.empty() && (item[0] == '-' || item[0] == '+')) ? 1 : 0;
    if (item.size() <= start || item.find_first_not_of("0123456789", start) != std::string::npos)
      throw InputError("--divisor", "'" + text + "' is not a comma-separated integer list");
    out.emplace_back(item);
  }
  if (out.empty()) throw InputError("--divisor", "empty divisor");
  return out;
}

inline void check_length(const IntegerVector &n, std::size_t expected) {
  if (n.size() != expected)
    throw InputError("--divisor", "has " + std::to_string(n.size()) +
                                      " coefficients, the ring has " +
                                      std::to_string(expected) + " prime divisors");
}

inline Report class_group_report(const RingDescription &ring, bool verbose) {
  Report rep;
  switch (ring.kind) {
  case RingKind::Monoid: {
    const MonoidRing m = ring.monoid();
    const FGAbelianGroup g = class_group(m);
    rep.lines.push_back("Cl = " + to_string(g));
    rep.json["class_group"] = group_json(g);
    nlohmann::json normals = nlohmann::json::array(), rays = nlohmann::json::array();
    for (const auto &n : m.cone().facet_normals()) normals.push_back(vector_json(n));
    for (const auto &r : m.cone().generators()) rays.push_back(vector_json(r));
    rep.json["facet_normals"] = normals;
    rep.json["rays"] = rays;
    if (verbose) {
      rep.lines.push_back("lattice rank " + std::to_string(m.lattice_rank()) + ", " +
                          std::to_string(m.facet_count()) + " facets (divisor order):");
      for (std::size_t i = 0; i < m.facet_count(); ++i)
        rep.lines.push_back("  F" + std::to_string(i + 1) + ": normal " +
                            to_string(m.cone().facet_normals()[i]));
      std::string r = "rays:";
      for (const auto &ray : m.cone().generators()) r += " " + to_string(ray);
      rep.lines.push_back(r);
    }
    break;
  }
  case RingKind::Hyperbola: {
    const HyperbolaDatum h = ring.hyperbola();
    const FGAbelianGroup g = class_group(h);
    rep.lines.push_back("Cl = " + to_string(g));
    rep.json["class_group"] = group_json(g);
    if (verbose)
      rep.lines.push_back("generated by p_1..p_" + std::to_string(h.size()) +
                          " (p_i = (U_i, X)) with relation " + to_string(h.exponents()));
    break;
  }
  case RingKind::Determinantal: {
    const CatalogReport c = determinantal_report(ring.determinantal());
    rep.lines.push_back("Cl = " + to_string(c.class_group));
    rep.json["class_group"] = group_json(c.class_group);
    break;
  }
  }
  return rep;
}

inline Report affine_class_group_report(const RingDescription &ring) {
  Report rep;
  std::optional<FGAbelianGroup> acl;
  switch (ring.kind) {
  case RingKind::Monoid: acl = affine_class_group(ring.monoid()); break;
  case RingKind::Hyperbola: {
    const HyperbolaDatum h = ring.hyperbola();
    if (h.base_is_local()) {
      acl = affine_class_group_local(h);
    } else {
      const bool vanishes = acl_vanishes_nonlocal(h);
      rep.json["acl_vanishes"] = vanishes;
      rep.json["affine_class_group"] = nullptr;
      if (vanishes) {
        rep.lines.push_back("ACl = 0");
        rep.json["affine_class_group"] = group_json(FGAbelianGroup());
      } else {
        rep.lines.push_back("ACl != 0 (some U_i, U_j are not comaximal)");
      }
      return rep;
    }
    break;
  }
  case RingKind::Determinantal:
    acl = determinantal_report(ring.determinantal()).affine_class_group;
    break;
  }
  rep.lines.push_back("ACl = " + to_string(*acl));
  rep.json["affine_class_group"] = group_json(*acl);
  rep.json["acl_vanishes"] = acl->is_trivial();
  return rep;
}

inline Report coaffine_report(const RingDescription &ring, const IntegerVector &divisor) {
  Report rep;
  bool coaffine = false, strong = false, trivial = false;
  nlohmann::json witness = nlohmann::json::object();
  std::vector<std::string> notes;
  if (ring.kind == RingKind::Monoid) {
    const MonoidRing m = ring.monoid();
    check_length(divisor, m.facet_count());
    const ToricDivisor n(divisor);
    const CoaffineVerdict v = coaffine_verdict(m, n);
    coaffine = v.coaffine;
    const auto order = class_order(m, n);
    trivial = order.has_value();
    strong = is_strongly_coaffine(m, n);
    if (!v.coaffine) {
      const IntegerVector e = add(divisor, m.principal_divisor(*v.obstruction));
      witness["gamma"] = vector_json(*v.obstruction);
      witness["effective_representative"] = vector_json(e);
      witness["unrealizable_support"] = support_json(*v.obstruction_support);
      notes.push_back("witness: gamma = " + to_string(*v.obstruction) +
                      " gives the effective divisor " + to_string(e) + " with support " +
                      to_string(*v.obstruction_support) +
                      ", which is not the support of a monomial");
    }
    if (order) {
      const IntegerVector kn = scale(*order, divisor);
      const AffineLattice sol = solve_integer_system(m.valuations(), kn);
      witness["k"] = integer_json(*order);
      witness["principal_gamma"] = vector_json(*sol.base_point);
      notes.push_back("witness: k = " + order->str() + ", k*n = div of T^" +
                      to_string(*sol.base_point));
    }
  } else if (ring.kind == RingKind::Hyperbola) {
    const HyperbolaDatum h = ring.hyperbola();
    check_length(divisor, h.size());
    const HyperbolaDivisor n(divisor);
    const HyperbolaCoaffineVerdict v = coaffine_verdict(h, n);
    coaffine = v.coaffine;
    trivial = is_affine_trivial(h, n);
    strong = is_strongly_coaffine(h, n);
    if (v.principal) {
      witness["principal_multiple"] = integer_json(*principal_multiple(h, n));
      notes.push_back("witness: n = " + principal_multiple(h, n)->str() + "*d is principal");
    } else if (v.shift) {
      const IntegerVector rep_vec = subtract(divisor, scale(*v.shift, h.exponents()));
      witness["shift"] = integer_json(*v.shift);
      witness["representative"] = vector_json(rep_vec);
      notes.push_back("witness: n - " + v.shift->str() + "*d = " + to_string(rep_vec) +
                      " lies strictly between 0 and d");
    }
    if (auto k = class_order(h, n)) {
      witness["k"] = integer_json(*k);
      notes.push_back("witness: k = " + k->str() + ", k*n is a multiple of d");
    }
  } else {
    throw InputError("kind", "coaffine queries need a monoid or hyperbola ring");
  }
  rep.lines.push_back(std::string("coaffine: ") + yes_no(coaffine) +
                      ", strongly coaffine: " + yes_no(strong) +
                      ", affine trivial: " + yes_no(trivial));
  rep.lines.insert(rep.lines.end(), notes.begin(), notes.end());
  rep.json["divisor"] = vector_json(divisor);
  rep.json["coaffine"] = coaffine;
  rep.json["strongly_coaffine"] = strong;
  rep.json["affine_trivial"] = trivial;
  rep.json["witness"] = witness;
  return rep;
}

inline Report simplicial_report(const RingDescription &ring) {
  if (ring.kind != RingKind::Monoid)
    throw InputError("kind", "simpliciality is defined for monoid rings");
  const MonoidRing m = ring.monoid();
  Report rep;
  const bool simp = is_simplicial(m), vanish = acl_vanishes(m);
  rep.lines.push_back(std::string("simplicial: ") + yes_no(simp) + " (" +
                      std::to_string(m.facet_count()) + " facets, lattice rank " +
                      std::to_string(m.lattice_rank()) + ")");
  rep.lines.push_back(std::string("ACl vanishes: ") + yes_no(vanish));
  rep.json["simplicial"] = simp;
  rep.json["acl_vanishes"] = vanish;
  rep.json["facets"] = m.facet_count();
  rep.json["lattice_rank"] = m.lattice_rank();
  if (simp != vanish) {
    rep.lines.push_back("disagreement: simpliciality and ACl vanishing differ");
    rep.status = exit_disagreement;
  }
  return rep;
}

inline Report determinantal_catalog_report(long long m, long long n, long long k) {
  const CatalogReport c = determinantal_report(DeterminantalDatum(m, n, k));
  Report rep;
  std::string groups = c.class_group == c.affine_class_group
                           ? "Cl = ACl = " + to_string(c.class_group)
                           : "Cl = " + to_string(c.class_group) +
                                 ", ACl = " + to_string(c.affine_class_group);
  rep.lines.push_back("dim " + c.dimension.str() + ", height " + c.ideal_height.str() + ", " +
                      groups);
  rep.lines.push_back("witness height " + c.witness_height.str());
  rep.json["ring"] = {{"kind", "determinantal"}, {"m", m}, {"n", n}, {"k", k}};
  rep.json["dimension"] = integer_json(c.dimension);
  rep.json["ideal_height"] = integer_json(c.ideal_height);
  rep.json["class_group"] = group_json(c.class_group);
  rep.json["affine_class_group"] = group_json(c.affine_class_group);
  rep.json["witness_height"] = integer_json(c.witness_height);
  rep.json["notes"] = c.notes;
  return rep;
}

inline Report ruled_cone_report() {
  Report rep;
  const FGAbelianGroup g = ruled_surface_cone_acl();
  rep.lines.push_back("ACl = " + to_string(g));
  rep.lines.push_back(std::string("note: ") + ruled_surface_cone_note);
  rep.json["affine_class_group"] = group_json(g);
  rep.json["notes"] = ruled_surface_cone_note;
  return rep;
}

inline Report oracle_report(const RingDescription &ring, long long bound,
                            const std::optional<IntegerVector> &divisor) {
  Report rep;
  const BoxBound box(bound);
  nlohmann::json checks = nlohmann::json::array();
  bool all_agree = true;
  auto record = [&](const std::string &name, bool agree, nlohmann::json detail) {
    all_agree = all_agree && agree;
    checks.push_back({{"check", name}, {"agree", agree}, {"detail", std::move(detail)}});
    rep.lines.push_back(name + ": " + (agree ? "agree" : "DISAGREE"));
  };

  if (ring.kind == RingKind::Monoid) {
    const MonoidRing m = ring.monoid();
    const auto prod = realizable_supports(m);
    const auto orac = oracle_realizable_supports(m, box);
    record("realizable supports", prod == orac,
           {{"production", supports_json(prod)}, {"oracle", supports_json(orac)}});
    if (divisor) {
      check_length(*divisor, m.facet_count());
      const ToricDivisor n(*divisor);
      const auto eff = effective_supports(m, n);
      const auto eff_o = oracle_effective_supports(m, n, box);
      record("effective supports", eff == eff_o,
             {{"production", supports_json(eff)}, {"oracle", supports_json(eff_o)}});
      const bool c = is_coaffine(m, n), c_o = oracle_is_coaffine(m, n, box);
      record("coaffine", c == c_o, {{"production", c}, {"oracle", c_o}});
      const bool s = is_strongly_coaffine(m, n),
                 s_o = oracle_monoid_strong(m, n, monoid_strong_kmax, box);
      record("strongly coaffine", s == s_o, {{"production", s}, {"oracle", s_o}});
    }
  } else if (ring.kind == RingKind::Hyperbola) {
    const HyperbolaDatum h = ring.hyperbola();
    const CrossModelReport cm = oracle_cross_model(h, box);
    record("cross model", cm.agrees(),
           {{"divisors_checked", cm.divisors_checked}, {"disagreements", cm.disagreements}});
    for (const auto &d : cm.disagreements) rep.lines.push_back("  " + d);
    if (divisor) {
      check_length(*divisor, h.size());
      const HyperbolaDatum local(h.exponents());
      const HyperbolaDivisor n(*divisor);
      const bool s = is_strongly_coaffine(local, n),
                 s_o = oracle_hyperbola_strong(local, n, hyperbola_strong_kmax);
      record("strongly coaffine", s == s_o, {{"production", s}, {"oracle", s_o}});
    }
  } else {
    throw InputError("kind", "oracle checks need a monoid or hyperbola ring");
  }
  rep.lines.push_back(std::string("agreement: ") + yes_no(all_agree));
  rep.json["bound"] = bound;
  if (divisor) rep.json["divisor"] = vector_json(*divisor);
  rep.json["checks"] = checks;
  rep.json["agreement"] = all_agree;
  if (!all_agree) rep.status = exit_disagreement;
  return rep;
}

inline void emit(const Report &rep, const std::string &command, bool json, std::ostream &out) {
  if (json) {
    nlohmann::json j = rep.json;
    j["schema"] = 1;
    j["command"] = command;
    out << j.dump(2) << '\n';
  } else {
    for (const auto &l : rep.lines) out << l << '\n';
  }
}

/// Runs the program on `args` (without the program name) and returns the
/// exit status: 0 success, 1 invalid input, 2 production/oracle disagreement.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Divisor class groups and affine class groups of toric and hyperbola rings",
               "affcl"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string ring_path, divisor_text, fixture_path;
  bool verbose = false;
  long long bound = 8, m = 0, n = 0, k = 0;

  auto with_ring = [&](CLI::App *sub) {
    sub->add_option("ring", ring_path, "ring description (JSON)")->required();
    sub->add_flag("--json", json, "machine-readable output");
  };
  auto *cl = app.add_subcommand("cl", "print the divisor class group");
  with_ring(cl);
  cl->add_flag("--verbose", verbose, "list the facets in divisor order");
  auto *acl = app.add_subcommand("acl", "print the affine class group");
  with_ring(acl);
  auto *coaff = app.add_subcommand("coaffine", "classify a divisor");
  with_ring(coaff);
  coaff->add_option("--divisor", divisor_text, "coefficients n1,...,nr")->required();
  auto *simp = app.add_subcommand("simplicial", "simpliciality and ACl vanishing");
  with_ring(simp);
  auto *catalog = app.add_subcommand("catalog", "closed-form results for further rings");
  catalog->require_subcommand(1);
  auto *detring = catalog->add_subcommand("detring", "determinantal ring K[X]/I_k");
  detring->add_option("--m", m, "rows")->required();
  detring->add_option("--n", n, "columns")->required();
  detring->add_option("--k", k, "minor size")->required();
  detring->add_flag("--json", json, "machine-readable output");
  auto *ruled = catalog->add_subcommand("ruled-cone", "cone over a ruled surface");
  ruled->add_flag("--json", json, "machine-readable output");
  auto *orc = app.add_subcommand("oracle", "compare production against enumeration oracles");
  with_ring(orc);
  orc->add_option("--bound", bound, "box bound B (coordinates in [-B, B])");
  orc->add_option("--divisor", divisor_text, "coefficients n1,...,nr");
  orc->add_option("--emit-fixture", fixture_path, "write the oracle report to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    Report rep;
    std::string command;
    if (cl->parsed()) {
      command = "cl";
      rep = class_group_report(load_ring_file(ring_path), verbose);
    } else if (acl->parsed()) {
      command = "acl";
      rep = affine_class_group_report(load_ring_file(ring_path));
    } else if (coaff->parsed()) {
      command = "coaffine";
      rep = coaffine_report(load_ring_file(ring_path), parse_divisor(divisor_text));
    } else if (simp->parsed()) {
      command = "simplicial";
      rep = simplicial_report(load_ring_file(ring_path));
    } else if (detring->parsed()) {
      command = "catalog detring";
      rep = determinantal_catalog_report(m, n, k);
    } else if (ruled->parsed()) {
      command = "catalog ruled-cone";
      rep = ruled_cone_report();
    } else {
      command = "oracle";
      const RingDescription ring = load_ring_file(ring_path);
      std::optional<IntegerVector> divisor;
      if (!divisor_text.empty()) divisor = parse_divisor(divisor_text);
      rep = oracle_report(ring, bound, divisor);
      if (!fixture_path.empty()) {
        nlohmann::json fixture = rep.json;
        fixture["schema"] = 1;
        fixture["ring"] = to_json(ring);
        fixture["input_hash"] = input_hash({{"ring", to_json(ring)},
                                            {"bound", bound},
                                            {"divisor", rep.json.value("divisor", nlohmann::json())}});
        std::ofstream f(fixture_path);
        if (!f) throw InputError(fixture_path, "cannot write fixture");
        f << fixture.dump(2) << '\n';
      }
    }
    if (!ring_path.empty() && command != "catalog detring" && command != "catalog ruled-cone") {
      const RingDescription ring = load_ring_file(ring_path);
      rep.json["ring"] = to_json(ring);
      rep.json["input_hash"] = input_hash(to_json(ring));
    }
    emit(rep, command, json, out);
    return rep.status;
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }
}

} // namespace affcl::cli
