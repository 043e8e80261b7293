#pragma once

// Command-line front end. `execute` takes the arguments after the program
// name and returns the exit status: 0 when every report passes, 1 when a
// report fails or an implementation mismatch is detected, 2 on usage errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uul/bicyclic.hpp"
#include "uul/catalog.hpp"
#include "uul/claims.hpp"
#include "uul/classify.hpp"
#include "uul/error.hpp"
#include "uul/parallel.hpp"
#include "uul/report.hpp"
#include "uul/shape.hpp"
#include "uul/units.hpp"

namespace uul::cli {

struct Options {
  std::string verb;
  std::string claim;
  std::string group;
  std::string catalog;
  unsigned p = 2;
  bool exhaustive = false;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
  std::uint64_t cap = std::uint64_t{1} << 24;
  std::string format = "text";
  std::string out;
  bool no_timing = false;
  std::string g_label, h_label;
  std::string emit = "report";
};

namespace detail {

inline ClaimOptions claim_options(const Options& o) {
  ClaimOptions c;
  c.p = o.p;
  c.sweep.seed = o.seed;
  c.sweep.exhaustive_cap = o.cap;
  if (o.sample) {
    c.sweep.mode = sweep_mode::sample;
    c.sweep.sample_count = *o.sample;
    c.mode_given = true;
  } else if (o.exhaustive) {
    c.sweep.mode = sweep_mode::exhaustive;
    c.mode_given = true;
  }
  return c;
}

inline std::vector<CatalogEntry> select_groups(const Options& o) {
  if (!o.catalog.empty()) return load_catalog(o.catalog);
  return {resolve_group(o.group)};
}

inline elem_t element_by_label(const FiniteGroup& g, const std::string& label) {
  if (auto e = g.find_label(label)) return *e;
  throw error(errc::invalid_argument, "no element labelled '" + label + "' in " + g.name());
}

inline VerificationReport units_report(const CatalogEntry& e, const Options& o) {
  const ClaimOptions c = claim_options(o);
  const GroupAlgebra kg(e.group, o.p);
  UnitSweepConfig cfg = c.sweep;
  if (!c.mode_given) {
    auto total = normalized_unit_count(kg);
    cfg.mode = total && *total <= cfg.exhaustive_cap ? sweep_mode::exhaustive : sweep_mode::sample;
  }
  VerificationReport r = check_vstar_normality(kg, cfg);
  r.group = e.name;
  return r;
}

inline VerificationReport bicyclic_report(const CatalogEntry& e, const Options& o) {
  const FiniteGroup& g = e.group;
  const GroupAlgebra kg(g, o.p);
  VerificationReport r;
  r.group = e.name;
  r.p = o.p;
  r.mode = "exhaustive";
  ReportTimer timer(r);
  if (!o.g_label.empty() || !o.h_label.empty()) {
    if (o.g_label.empty() || o.h_label.empty()) throw error(errc::invalid_argument, "--g and --h go together");
    const BicyclicSpec s{element_by_label(g, o.g_label), element_by_label(g, o.h_label)};
    const AlgebraElement u = bicyclic_unit(kg, s);
    const bool direct = is_unitary(u);
    bool normalizer = false, predicted = false;
    try {
      predicted = lemma13_predicate(g, o.p, s);
    } catch (const error& err) {
      if (err.code() != errc::normalizer_case) throw;
      normalizer = predicted = true;
    }
    if (direct != predicted)
      throw error(errc::implementation_mismatch, "criterion and direct computation disagree on " + pair_label(g, s));
    r.claim = "bicyclic-unitary";
    r.checked_count = 1;
    r.pass = direct;
    r.details["g"] = g.label(s.g);
    r.details["h"] = g.label(s.h);
    r.details["unit"] = u.to_string();
    r.details["support_size"] = u.support().size();
    r.details["normalizer_case"] = normalizer;
    r.details["criterion"] = predicted;
    if (!direct) r.witness = {g.label(s.g), g.label(s.h), u.to_string()};
    return r;
  }
  const BicyclicSweep sweep = all_bicyclic_unitary(kg, 256, o.seed);
  r.claim = "all-bicyclic-unitary";
  r.checked_count = static_cast<std::uint64_t>(g.order()) * g.order();
  r.pass = sweep.all_unitary;
  r.details["cross_checked"] = sweep.cross_checked;
  if (sweep.witness) {
    r.witness = {g.label(sweep.witness->g), g.label(sweep.witness->h),
                 bicyclic_unit(kg, *sweep.witness).to_string()};
    r.details["witness_roles"] = {"g", "h", "u_{g,h}"};
  }
  return r;
}

inline nlohmann::ordered_json verdict_json(const ClassVerdict& v) {
  nlohmann::ordered_json j;
  j["in_class"] = v.in_class;
  j["conditions"] = v.condition_names();
  return j;
}

inline VerificationReport classify_report(const CatalogEntry& e, const Options& o) {
  const FiniteGroup& g = e.group;
  VerificationReport r;
  r.claim = "classify";
  r.group = e.name;
  r.p = o.p;
  r.mode = "structural";
  ReportTimer timer(r);
  r.checked_count = 1;
  r.pass = true;
  r.details["order"] = g.order();
  r.details["abelian"] = is_abelian(g);
  r.details["two_group"] = is_2_group(g);
  if (is_2_group(g)) {
    const ClassVerdict v11 = classify_theorem11(g);
    const ClassVerdict v12 = classify_theorem12(g);
    r.details["thm11"] = verdict_json(v11);
    r.details["thm12"] = verdict_json(v12);
    r.details["split"] = uul::detail::split_json(g, v11.split);
    const GoodResult good = is_good(g);
    r.details["good"] = good.good;
    if (good.witness) r.details["bad_pair"] = {g.label(good.witness->first), g.label(good.witness->second)};
    r.details["lemma41_filter"] = lemma41_filter(g);
    const OrderBoundCheck b = lemma414_check(g);
    r.details["order_bound"] = {{"applicable", b.applicable}, {"n", b.n}, {"holds", b.holds}};
  }
  r.details["shape"] = flag_names(shape_predicates(g));
  return r;
}

inline VerificationReport info_report(const CatalogEntry& e, const Options& o) {
  const FiniteGroup& g = e.group;
  VerificationReport r;
  r.claim = "info";
  r.group = e.name;
  r.p = o.p;
  r.mode = "structural";
  ReportTimer timer(r);
  r.checked_count = 1;
  r.pass = true;
  r.details["order"] = g.order();
  r.details["source"] = e.source;
  r.details["tags"] = e.tags;
  r.details["generators"] = g.generator_names();
  nlohmann::ordered_json census = nlohmann::ordered_json::object();
  for (auto [k, v] : order_census(g)) census[std::to_string(k)] = v;
  r.details["order_census"] = census;
  r.details["center"] = center(g).size();
  r.details["derived"] = derived_subgroup(g).size();
  if (is_p_group(g)) {
    r.details["frattini"] = frattini_subgroup(g).size();
    r.details["omega"] = omega_subgroup(g).size();
  }
  r.details["shape"] = flag_names(shape_predicates(g));
  r.details["labels"] = g.labels();
  return r;
}

inline VerificationReport claim_report(const CatalogEntry& e, const Options& o) {
  VerificationReport r = verify_claim(o.claim, e.group, claim_options(o));
  r.group = e.name;
  return r;
}

inline int exit_code_for(const error& e) { return e.code() == errc::implementation_mismatch ? 1 : 2; }

}  // namespace detail

inline int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Unitary units of modular group algebras: construction and verification", "uul"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "uul 1.0");

  auto add_common = [&](CLI::App* sub, bool sweep) {
    auto* grp = sub->add_option("--group", o.group, "builtin name such as dihedral(8), or a .grp file");
    auto* cat = sub->add_option("--catalog", o.catalog, "directory of .grp files");
    grp->excludes(cat);
    sub->add_option("--p", o.p, "characteristic of the coefficient field")->check(CLI::Range(2u, 251u));
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "write reports to this file");
    sub->add_flag("--no-timing", o.no_timing, "omit elapsed_ms for byte-stable output");
    if (sweep) {
      auto* ex = sub->add_flag("--exhaustive", o.exhaustive, "enumerate every unit");
      auto* sm = sub->add_option("--sample", o.sample, "number of random samples")->check(CLI::PositiveNumber);
      ex->excludes(sm);
      sub->add_option("--seed", o.seed, "seed of the sampling generator");
      sub->add_option("--cap", o.cap, "largest exhaustive sweep");
    }
  };

  std::vector<std::string> claims;
  for (const auto& [name, fn] : claim_table()) claims.push_back(name);

  auto* verify = app.add_subcommand("verify", "check a claim: computation against the structural prediction");
  verify->add_option("claim", o.claim, "claim name")->required()->check(CLI::IsMember(claims));
  add_common(verify, true);
  auto* scan = app.add_subcommand("scan", "run a claim over a catalog and list the groups where it holds");
  scan->add_option("claim", o.claim, "claim name")->required()->check(CLI::IsMember(claims));
  add_common(scan, true);
  auto* classify = app.add_subcommand("classify", "structural verdicts for both theorems");
  add_common(classify, false);
  auto* units = app.add_subcommand("units", "is V*(KG) normal in V(KG)");
  add_common(units, true);
  auto* bicyclic = app.add_subcommand("bicyclic", "unitarity of bicyclic units");
  bicyclic->set_help_flag("--help", "print this help message and exit");
  add_common(bicyclic, false);
  bicyclic->add_option("--g", o.g_label, "element label for g");
  bicyclic->add_option("--h", o.h_label, "element label for h");
  bicyclic->add_option("--seed", o.seed, "seed for the direct cross-check sample");
  auto* info = app.add_subcommand("info", "group data, or the group file with --emit grp");
  add_common(info, false);
  info->add_option("--emit", o.emit, "report or grp")->check(CLI::IsMember({"report", "grp"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "uul 1.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "uul: " << e.what() << "\n";
    return 2;
  }
  for (CLI::App* sub : app.get_subcommands()) o.verb = sub->get_name();
  if (o.group.empty() && o.catalog.empty()) {
    err << "uul: one of --group or --catalog is required\n";
    return 2;
  }
  if (o.verb == "scan" && o.catalog.empty()) {
    err << "uul: scan needs --catalog\n";
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "uul: cannot write " << o.out << "\n";
      return 2;
    }
    sink = &file;
  }

  try {
    const std::vector<CatalogEntry> entries = detail::select_groups(o);
    if (o.verb == "info" && o.emit == "grp") {
      for (const auto& e : entries) {
        FiniteGroup g = e.group;
        std::string name = e.name;
        for (char& c : name)
          if (c == '(' || c == ')' || c == ',') c = '_';
        while (!name.empty() && name.back() == '_') name.pop_back();
        *sink << format_group_file(g.renamed(name), "right-regular representation of " + e.name);
      }
      return 0;
    }

    auto run_one = [&](std::size_t i) -> VerificationReport {
      const CatalogEntry& e = entries[i];
      if (o.verb == "scan") {
        try {
          return detail::claim_report(e, o);
        } catch (const error& x) {
          if (x.code() != errc::not_2_group && x.code() != errc::not_p_group) throw;
          VerificationReport r;
          r.claim = o.claim;
          r.group = e.name;
          r.mode = "skipped";
          r.pass = true;
          r.details["skipped"] = x.what();
          return r;
        }
      }
      if (o.verb == "verify") return detail::claim_report(e, o);
      if (o.verb == "units") return detail::units_report(e, o);
      if (o.verb == "bicyclic") return detail::bicyclic_report(e, o);
      if (o.verb == "classify") return detail::classify_report(e, o);
      return detail::info_report(e, o);
    };
    std::vector<VerificationReport> reports = parallel_map(entries.size(), run_one);

    if (o.verb == "scan") {
      VerificationReport summary;
      summary.claim = "scan:" + o.claim;
      summary.group = o.catalog;
      summary.p = o.p;
      summary.mode = "structural";
      for (const auto& r : reports)
        if (r.mode != "skipped") summary.mode = r.mode;
      summary.checked_count = reports.size();
      summary.pass = true;
      std::vector<std::string> holds, disagree, skipped;
      std::int64_t ms = 0;
      for (const auto& r : reports) {
        ms += r.elapsed_ms;
        if (r.mode == "skipped") {
          skipped.push_back(r.group);
          continue;
        }
        const bool computed = r.details.contains("computed") ? r.details["computed"].get<bool>() : r.pass;
        if (computed) holds.push_back(r.group);
        if (!r.pass) {
          disagree.push_back(r.group);
          summary.pass = false;
        }
      }
      summary.elapsed_ms = ms;
      summary.details["holds"] = holds;
      summary.details["disagreements"] = disagree;
      summary.details["skipped"] = skipped;
      summary.witness = disagree;
      reports = {summary};
    }

    bool all_pass = true;
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass;
      if (o.format == "json") *sink << r.to_json(!o.no_timing).dump() << "\n";
      else *sink << r.to_text(!o.no_timing);
    }
    return all_pass ? 0 : 1;
  } catch (const error& e) {
    err << "uul: " << e.what() << "\n";
    return detail::exit_code_for(e);
  } catch (const std::exception& e) {
    err << "uul: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace uul::cli
