// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracle.hpp"
#include "uul/uul.hpp"

using namespace uul;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

std::filesystem::path catalog_dir() { return UUL_CATALOG_DIR; }

std::vector<CatalogEntry> stratum(int order) {
  return load_catalog(catalog_dir() / ("order" + std::to_string(order)));
}

std::vector<CatalogEntry> complete_upto16() {
  std::vector<CatalogEntry> out;
  for (int n : {1, 2, 4, 8, 16}) {
    auto part = stratum(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out = complete_upto16();
  for (int n : {27, 32, 64}) {
    auto part = stratum(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<CatalogEntry> theorem12_set() {
  std::vector<CatalogEntry> out = complete_upto16();
  for (const char* n : {"Q8xC4", "C4sdQ8", "H32", "thm12_iv", "Q8xQ8", "H245"})
    out.push_back({n, "builtin", builtin(n), {}});
  return out;
}

UnitSweepConfig exhaustive() {
  UnitSweepConfig c;
  c.mode = sweep_mode::exhaustive;
  return c;
}

// 1 -------------------------------------------------------------------------
Outcome theorem11() {
  Outcome o;
  auto groups = complete_upto16();
  if (groups.size() != 23) o.fail("expected 23 groups, found " + std::to_string(groups.size()));
  std::size_t in_class = 0;
  for (const auto& e : groups) {
    GroupAlgebra kg(e.group, 2);
    VerificationReport r = check_vstar_normality(kg, exhaustive());
    if (r.checked_count != (std::uint64_t{1} << (e.group.order() - 1)) && r.pass)
      o.fail(e.name + ": sweep incomplete");
    ClassVerdict v = classify_theorem11(e.group);
    const bool predicted = v.abelian || v.in_class;
    in_class += predicted;
    if (r.pass != predicted) o.fail(e.name + ": computed " + r.verdict() + ", classified " + (predicted ? "in" : "out"));
  }
  o.note = o.pass ? std::to_string(groups.size()) + " groups agree (" + std::to_string(in_class) + " in class)" : o.note;
  return o;
}

// 2 -------------------------------------------------------------------------
Outcome lemma21() {
  Outcome o;
  std::uint64_t pairs = 0;
  std::size_t count = 0;
  for (const auto& e : complete_upto16()) {
    if (e.group.order() > 8) continue;
    ++count;
    GroupAlgebra kg(e.group, 2);
    const FiniteGroup& G = e.group;
    std::vector<AlgebraElement> units, unitary;
    for (const AlgebraElement& u : enumerate_normalized_units(kg)) {
      units.push_back(u);
      if (is_unitary(u)) unitary.push_back(u);
    }
    bool normal_by_definition = true, all_central = true;
    for (const AlgebraElement& x : units) {
      const AlgebraElement xi = invert_normalized(x);
      const AlgebraElement xx = x * x.star();
      bool central = true;
      for (std::size_t g = 0; g < G.order(); ++g) central = central && xx.commutes_with_group_element(static_cast<elem_t>(g));
      all_central = all_central && central;
      for (const AlgebraElement& y : unitary) {
        ++pairs;
        const bool conj_unitary = is_unitary(xi * y * x);
        const bool commutes = (xx * y) == (y * xx);
        if (conj_unitary != commutes) o.fail(e.name + ": pointwise disagreement at x=" + x.to_string());
        normal_by_definition = normal_by_definition && conj_unitary;
      }
    }
    if (normal_by_definition != all_central) o.fail(e.name + ": definition and centrality test disagree");
    if (check_vstar_normality(kg, exhaustive()).pass != normal_by_definition) o.fail(e.name + ": sweep disagrees");
  }
  if (o.pass) o.note = std::to_string(count) + " groups, " + std::to_string(pairs) + " (x,y) pairs agree";
  return o;
}

// 3 -------------------------------------------------------------------------
Outcome lemma13() {
  Outcome o;
  std::uint64_t pairs = 0;
  std::vector<std::pair<CatalogEntry, unsigned>> runs;
  for (const auto& e : all_entries())
    if (e.group.order() <= 32) runs.push_back({e, 2u});
  for (const char* n : {"cyclic(3)", "cyclic(9)", "abelian(3,3)", "heisenberg(3)", "exponent9_27"})
    runs.push_back({CatalogEntry{n, "builtin", builtin(n), {}}, 3u});
  for (const auto& [e, p] : runs) {
    VerificationReport r = verify_lemma13(GroupAlgebra(e.group, p));
    const auto n = e.group.order();
    if (!r.pass || r.details["agree"] != n * n)
      o.fail(e.name + " p=" + std::to_string(p) + ": " + r.details.dump());
    pairs += n * n;
  }
  if (o.pass) o.note = std::to_string(runs.size()) + " group/prime runs, " + std::to_string(pairs) + " pairs agree";
  return o;
}

// 4 -------------------------------------------------------------------------
Outcome theorem12() {
  Outcome o;
  auto groups = theorem12_set();
  for (const auto& e : groups) {
    BicyclicSweep s = all_bicyclic_unitary(GroupAlgebra(e.group, 2));
    ClassVerdict v = classify_theorem12(e.group);
    if (s.all_unitary != (v.abelian || v.in_class)) o.fail(e.name);
  }
  if (o.pass) o.note = std::to_string(groups.size()) + " groups agree";
  return o;
}

// 5 -------------------------------------------------------------------------
Outcome lemma14() {
  Outcome o;
  auto groups = theorem12_set();
  for (const auto& e : groups) {
    const bool good = is_good(e.group).good;
    ClassVerdict v = classify_theorem12(e.group);
    if (good != (v.abelian || v.in_class)) o.fail(e.name);
    if (good != oracle::good(e.group)) o.fail(e.name + ": closed-form oracle disagrees");
  }
  if (is_good(p_family(2)).good || is_good(r_family(2)).good) o.fail("P(2) or R(2) is good");
  if (!is_good(p_family(1)).good || !is_good(r_family(1)).good) o.fail("P(1) or R(1) is not good");
  if (o.pass) o.note = std::to_string(groups.size()) + " groups agree; P(1),R(1) good, P(2),R(2) not";
  return o;
}

// 6 -------------------------------------------------------------------------
Outcome lemma41() {
  Outcome o;
  for (const char* n : {"C4xC4", "C4sdC4", "C4sdQ8", "Q8xC4", "Q8xQ8", "thm12_iv", "H32", "H245"})
    if (!lemma41_filter(builtin(n))) o.fail(std::string(n) + " fails the filter");
  std::set<std::string> hits;
  for (const auto& e : stratum(16))
    if (lemma41_filter(e.group)) hits.insert(e.name);
  if (hits != std::set<std::string>{"C4xC4", "C4sdC4"}) o.fail("order-16 scan returned a different set");
  if (o.pass) o.note = "8 listed groups pass; order-16 scan = {C4sdC4, C4xC4}";
  return o;
}

// 7 -------------------------------------------------------------------------
Outcome lemma414() {
  Outcome o;
  std::size_t applicable = 0;
  for (const auto& e : all_entries()) {
    if (!is_2_group(e.group)) continue;
    OrderBoundCheck c = lemma414_check(e.group);
    if (!c.applicable) continue;
    ++applicable;
    if (!c.holds) o.fail(e.name + " exceeds the bound");
  }
  OrderBoundCheck q8 = lemma414_check(quaternion_group(8));
  if (!(q8.applicable && q8.n == 1 && q8.bound == 8)) o.fail("Q8 is not at equality with n=1");
  OrderBoundCheck qq = lemma414_check(q8_x_q8());
  if (!(qq.applicable && qq.n == 2 && qq.bound == 128 && qq.holds)) o.fail("Q8xQ8 is not 2^6 <= 2^7 at n=2");
  if (o.pass) o.note = std::to_string(applicable) + " applicable catalog groups within bound; Q8 equality; Q8xQ8 64<=128";
  return o;
}

// 8 -------------------------------------------------------------------------
Outcome lemma23() {
  Outcome o;
  auto groups = all_entries();
  for (const auto& e : groups) {
    VerificationReport r = verify_claim("lemma2.3", e.group, ClaimOptions{});
    if (!r.pass) o.fail(e.name + ": " + r.details.dump());
  }
  if (o.pass) o.note = std::to_string(groups.size()) + " catalog groups decompose and recompose";
  return o;
}

// 9 -------------------------------------------------------------------------
Outcome algebra_laws() {
  Outcome o;
  constexpr int cases = 10000;
  std::mt19937_64 rng(20240611);
  std::vector<GroupAlgebra> algebras;
  for (const auto& e : all_entries())
    if (e.group.order() <= 32) algebras.emplace_back(e.group, p_group_prime(e.group).value_or(2));
  algebras.emplace_back(dihedral_group(6), 5);
  std::vector<GroupAlgebra> modular;
  for (const auto& kg : algebras)
    if (kg.modular() && kg.dimension() > 1) modular.push_back(kg);

  auto random = [&](const GroupAlgebra& kg) {
    std::vector<residue_t> c(kg.dimension());
    for (auto& x : c) x = static_cast<residue_t>(rng() % kg.p());
    return kg.from_coefficients(std::move(c));
  };
  auto pick = [&](const std::vector<GroupAlgebra>& v) -> const GroupAlgebra& { return v[rng() % v.size()]; };
  std::map<std::string, int> failures;
  auto law = [&](const std::string& name, const std::function<bool()>& check) {
    for (int i = 0; i < cases; ++i)
      if (!check()) ++failures[name];
    failures.emplace(name, 0);
  };

  law("star anti-automorphism", [&] {
    const auto& kg = pick(algebras);
    auto a = random(kg), b = random(kg);
    return (a * b).star() == b.star() * a.star();
  });
  law("star involution", [&] {
    auto a = random(pick(algebras));
    return a.star().star() == a;
  });
  law("augmentation homomorphism", [&] {
    const auto& kg = pick(algebras);
    auto a = random(kg), b = random(kg);
    return (a * b).augmentation() == a.augmentation() * b.augmentation() % kg.p();
  });
  law("invert_normalized", [&] {
    const auto& kg = pick(modular);
    auto a = random(kg);
    a = a + kg.one().scaled(static_cast<residue_t>((kg.p() + 1 - a.augmentation()) % kg.p()));
    auto b = invert_normalized(a);
    return (a * b).is_one() && (b * a).is_one();
  });
  auto pair_law = [&](const std::string& name, const std::function<bool(const GroupAlgebra&, elem_t, elem_t)>& f,
                      bool char2) {
    law(name, [&] {
      const GroupAlgebra* kg = &pick(algebras);
      while (char2 && kg->p() != 2) kg = &pick(algebras);
      const auto n = kg->dimension();
      return f(*kg, static_cast<elem_t>(rng() % n), static_cast<elem_t>(rng() % n));
    });
  };
  pair_law("bicyclic self-inverse (char 2)",
           [](const GroupAlgebra& kg, elem_t g, elem_t h) {
             auto u = bicyclic_unit(kg, {g, h});
             return (u * u).is_one();
           },
           true);
  pair_law("support cardinality",
           [](const GroupAlgebra& kg, elem_t g, elem_t h) {
             const FiniteGroup& G = kg.group();
             const auto size = bicyclic_unit(kg, {g, h}).support().size();
             const bool normalizing = normalizes(G, h, cyclic_subgroup(G, g));
             return size == (normalizing ? 1u : 1u + 2u * G.element_order(g));
           },
           false);
  pair_law("u_{g,h} = u_{g,hg}",
           [](const GroupAlgebra& kg, elem_t g, elem_t h) {
             return bicyclic_unit(kg, {g, h}) == bicyclic_unit(kg, {g, kg.group().mul(h, g)});
           },
           false);
  pair_law("(g-1)gbar = 0",
           [](const GroupAlgebra& kg, elem_t g, elem_t) {
             return ((kg.element(g) - kg.one()) * kg.gbar(g)).is_zero() &&
                    (kg.gbar(g) * (kg.element(g) - kg.one())).is_zero();
           },
           false);

  std::size_t enumerated = 0;
  for (const auto& e : complete_upto16()) {
    GroupAlgebra kg(e.group, 2);
    std::uint64_t n = 0;
    for (const AlgebraElement& u : enumerate_normalized_units(kg)) n += u.augmentation() == 1;
    if (n != (std::uint64_t{1} << (e.group.order() - 1))) ++failures["|V(KG)| = p^(|G|-1)"];
    ++enumerated;
  }
  failures.emplace("|V(KG)| = p^(|G|-1)", 0);

  int total = 0;
  for (const auto& [name, f] : failures) {
    total += f;
    if (f) o.fail(name + ": " + std::to_string(f) + " failures");
  }
  if (o.pass)
    o.note = std::to_string(failures.size() - 1) + " laws x " + std::to_string(cases) + " cases, " +
             std::to_string(enumerated) + " unit-group counts; zero failures";
  return o;
}

// 10 ------------------------------------------------------------------------
Outcome heisenberg_sampling() {
  Outcome o;
  GroupAlgebra kg(heisenberg_group(3), 3);
  UnitSweepConfig cfg;
  cfg.mode = sweep_mode::sample;
  cfg.sample_count = 10000;
  cfg.seed = 1;
  VerificationReport a = check_vstar_normality(kg, cfg);
  VerificationReport b = check_vstar_normality(kg, cfg);
  if (a.pass) o.fail("no counterexample found");
  if (a.to_json(false) != b.to_json(false)) o.fail("rerun with the same seed differs");
  if (a.witness.size() != 3) {
    o.fail("malformed witness");
    return o;
  }
  const AlgebraElement x = kg.parse(a.witness[0]), y = kg.parse(a.witness[1]);
  if (!is_unitary(y)) o.fail("witness y is not unitary");
  if (is_unitary(invert_normalized(x) * y * x)) o.fail("conjugate of y is unitary");
  if (o.pass) o.note = "seed 1 fails after " + std::to_string(a.checked_count) + " sample(s); witness verified";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"thm1.1: V* normal iff in class, exhaustive over orders <= 16", theorem11},
      {"lemma2.1: conjugation test vs x x* centrality, orders <= 8", lemma21},
      {"lemma1.3: direct unitarity vs pair criterion, all pairs", lemma13},
      {"thm1.2: all bicyclic units unitary iff in class", theorem12},
      {"lemma1.4: good iff in class; P/R families", lemma14},
      {"lemma4.1: named list and order-16 scan", lemma41},
      {"lemma4.14: order bound", lemma414},
      {"lemma2.3: E x H decomposition", lemma23},
      {"algebra laws: property suite", algebra_laws},
      {"negative sampling: GF(3) heisenberg(3)", heisenberg_sampling},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("[%s] %2zu. %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.note.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
