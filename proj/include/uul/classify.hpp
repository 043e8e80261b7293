#pragma once

// Group-theoretic side of the classification: goodness, the conditions of
// the two theorems on the H factor of G = E x H, the Phi = Omega filter, the
// order bound in terms of |Omega|, and normality of the group algebra.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "uul/algebra.hpp"
#include "uul/builders.hpp"
#include "uul/decompose.hpp"
#include "uul/error.hpp"
#include "uul/group.hpp"
#include "uul/isomorphism.hpp"
#include "uul/parallel.hpp"
#include "uul/report.hpp"
#include "uul/shape.hpp"
#include "uul/subgroup.hpp"
#include "uul/units.hpp"

namespace uul {

enum class condition { thm11_i, thm11_ii, thm12_i, thm12_ii, thm12_iii, thm12_iv, thm12_v };

inline const char* to_string(condition c) {
  switch (c) {
    case condition::thm11_i: return "thm11.i";
    case condition::thm11_ii: return "thm11.ii";
    case condition::thm12_i: return "thm12.i";
    case condition::thm12_ii: return "thm12.ii";
    case condition::thm12_iii: return "thm12.iii";
    case condition::thm12_iv: return "thm12.iv";
    case condition::thm12_v: return "thm12.v";
  }
  return "?";
}

using ElementPair = std::pair<elem_t, elem_t>;

struct ClassVerdict {
  bool in_class = false;
  bool abelian = false;
  DirectSplit split;
  std::vector<condition> matched;
  std::optional<ElementPair> witness;

  bool has(condition c) const {
    for (condition m : matched)
      if (m == c) return true;
    return false;
  }
  std::vector<std::string> condition_names() const {
    std::vector<std::string> out;
    for (condition m : matched) out.push_back(to_string(m));
    return out;
  }
};

namespace detail {

inline void require_2_group(const FiniteGroup& g) {
  if (!is_2_group(g)) throw error(errc::not_2_group, g.name() + " is not a 2-group");
}

inline bool inverts(const FiniteGroup& g, elem_t h, const Subgroup& a) {
  for (elem_t x : a)
    if (g.conjugate(x, h) != g.inv(x)) return false;
  return true;
}

inline std::vector<Subgroup> abelian_index2_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (Subgroup& m : index2_subgroups(g)) {
    bool ab = true;
    for (std::size_t i = 0; i < m.size() && ab; ++i)
      for (std::size_t j = i + 1; j < m.size() && ab; ++j)
        ab = g.commute(m.members()[i], m.members()[j]);
    if (ab) out.push_back(std::move(m));
  }
  return out;
}

/// An abelian subgroup of index 2 inverted by some element outside it; with
/// `involution` the inverting element must have order 2.
inline bool inverted_abelian_index2(const FiniteGroup& h, bool involution) {
  for (const Subgroup& a : abelian_index2_subgroups(h))
    for (std::size_t x = 0; x < h.order(); ++x) {
      if (a.contains(static_cast<elem_t>(x))) continue;
      if (involution && h.element_order(static_cast<elem_t>(x)) != 2) continue;
      if (inverts(h, static_cast<elem_t>(x), a)) return true;
    }
  return false;
}

/// Extraspecial, or M o C4 with M an extraspecial maximal subgroup: a central
/// z of order 4 outside M with z^2 in M.
inline bool extraspecial_or_c4_central(const FiniteGroup& h) {
  if (is_extraspecial(h)) return true;
  const Subgroup z = center(h);
  std::vector<elem_t> z4;
  for (elem_t c : z)
    if (h.element_order(c) == 4) z4.push_back(c);
  if (z4.empty()) return false;
  for (const Subgroup& m : index2_subgroups(h)) {
    bool candidate = false;
    for (elem_t c : z4)
      if (!m.contains(c) && m.contains(h.mul(c, c))) candidate = true;
    if (!candidate) continue;
    if (is_extraspecial(as_group(m).group)) return true;
  }
  return false;
}

struct ReferenceGroups {
  FiniteGroup q8c4 = q8_x_c4();
  FiniteGroup q8q8 = q8_x_q8();
  FiniteGroup iv = thm12_iv();
  FiniteGroup h32g = h32();
  FiniteGroup h245g = h245();
};

inline const ReferenceGroups& references() {
  static const ReferenceGroups refs;
  return refs;
}

inline bool isomorphic_to_any(const FiniteGroup& h, std::initializer_list<const FiniteGroup*> refs) {
  for (const FiniteGroup* r : refs)
    if (r->order() == h.order() && is_isomorphic(h, *r)) return true;
  return false;
}

}  // namespace detail

/// (i): abelian A of index 2 with an involution outside A inverting A
/// (and no direct factor of order 2).
inline bool satisfies_thm11_i(const FiniteGroup& h) {
  if (is_abelian(h) || has_direct_factor_of_order_2(h)) return false;
  return detail::inverted_abelian_index2(h, true);
}

/// (ii) of either theorem: extraspecial, or extraspecial o C4.
inline bool satisfies_condition_ii(const FiniteGroup& h) {
  if (is_abelian(h)) return false;
  return detail::extraspecial_or_c4_central(h);
}

inline bool satisfies_thm12_i(const FiniteGroup& h) {
  if (is_abelian(h)) return false;
  return detail::inverted_abelian_index2(h, false);
}

inline bool satisfies_thm12_iii(const FiniteGroup& h) {
  const auto& r = detail::references();
  return detail::isomorphic_to_any(h, {&r.q8c4, &r.q8q8});
}

inline bool satisfies_thm12_iv(const FiniteGroup& h) {
  return detail::isomorphic_to_any(h, {&detail::references().iv});
}

inline bool satisfies_thm12_v(const FiniteGroup& h) {
  const auto& r = detail::references();
  return detail::isomorphic_to_any(h, {&r.h32g, &r.h245g});
}

namespace detail {

inline ClassVerdict start_verdict(const FiniteGroup& g) {
  require_2_group(g);
  ClassVerdict v{false, is_abelian(g), decompose_elem_abelian_factor(g), {}, std::nullopt};
  return v;
}

inline FiniteGroup h_factor(const FiniteGroup& g, const DirectSplit& s) {
  return as_group(s.h, g.name() + "_H").group;
}

}  // namespace detail

struct GoodResult {
  bool good = true;
  std::optional<ElementPair> witness;  // least (g, h) breaking the hypothesis
};

/// For all g, h: <g^2> is normal in G and <g,h>/<g^2> is abelian or dihedral.
/// A pair fails if <g^2> is not normalized by h or the quotient is neither.
inline GoodResult is_good(const FiniteGroup& G) {
  detail::require_2_group(G);
  const std::size_t n = G.order();
  std::map<std::pair<std::vector<elem_t>, elem_t>, bool> cache;
  GoodResult out;
  for (std::size_t gi = 0; gi < n; ++gi) {
    const elem_t g = static_cast<elem_t>(gi);
    const elem_t g2 = G.mul(g, g);
    const Subgroup s = cyclic_subgroup(G, g2);
    for (std::size_t hi = 0; hi < n; ++hi) {
      const elem_t h = static_cast<elem_t>(hi);
      bool ok = normalizes(G, h, s);
      if (ok) {
        const Subgroup k = generated_subgroup(G, {g, h});
        auto key = std::make_pair(k.members(), g2);
        auto it = cache.find(key);
        if (it == cache.end()) {
          std::vector<elem_t> gens;
          if (g != 0) gens.push_back(g);
          if (h != 0 && h != g) gens.push_back(h);
          const SubgroupGroup kg = as_group(k, "", gens);
          std::vector<elem_t> local;
          for (std::size_t i = 0; i < kg.embedding.size(); ++i)
            if (s.contains(kg.embedding[i])) local.push_back(static_cast<elem_t>(i));
          const FiniteGroup q = quotient(kg.group, Subgroup(kg.group, local)).group;
          it = cache.emplace(key, is_abelian(q) || is_dihedral(q)).first;
        }
        ok = it->second;
      }
      if (!ok) {
        out.good = false;
        out.witness = ElementPair{g, h};
        return out;
      }
    }
  }
  return out;
}

inline ClassVerdict classify_theorem11(const FiniteGroup& G) {
  ClassVerdict v = detail::start_verdict(G);
  if (v.abelian) {
    v.in_class = true;
    return v;
  }
  const FiniteGroup h = detail::h_factor(G, v.split);
  if (satisfies_thm11_i(h)) v.matched.push_back(condition::thm11_i);
  if (satisfies_condition_ii(h)) v.matched.push_back(condition::thm11_ii);
  v.in_class = !v.matched.empty();
  return v;
}

inline ClassVerdict classify_theorem12(const FiniteGroup& G) {
  ClassVerdict v = detail::start_verdict(G);
  if (v.abelian) {
    v.in_class = true;
    return v;
  }
  const FiniteGroup h = detail::h_factor(G, v.split);
  if (satisfies_thm12_i(h)) v.matched.push_back(condition::thm12_i);
  if (satisfies_condition_ii(h)) v.matched.push_back(condition::thm12_ii);
  if (satisfies_thm12_iii(h)) v.matched.push_back(condition::thm12_iii);
  if (satisfies_thm12_iv(h)) v.matched.push_back(condition::thm12_iv);
  if (satisfies_thm12_v(h)) v.matched.push_back(condition::thm12_v);
  v.in_class = !v.matched.empty();
  if (!v.in_class) v.witness = is_good(G).witness;
  return v;
}

/// Phi(G) = Omega(G), central, of order 4.
inline bool lemma41_filter(const FiniteGroup& G) {
  detail::require_2_group(G);
  const Subgroup phi = frattini_subgroup(G);
  if (phi.size() != 4) return false;
  if (!(phi == omega_subgroup(G))) return false;
  return phi.is_subset_of(center(G));
}

struct OrderBoundCheck {
  bool applicable = false;
  bool holds = true;
  unsigned n = 0;
  std::uint64_t bound = 0;  // 2^(n(n+5)/2), saturating
};

/// When Phi <= Omega <= Z(G): |G| <= 2^(n(n+5)/2) with |Omega| = 2^n.
inline OrderBoundCheck lemma414_check(const FiniteGroup& G) {
  detail::require_2_group(G);
  OrderBoundCheck c;
  const Subgroup phi = frattini_subgroup(G);
  const Subgroup omega = omega_subgroup(G);
  c.applicable = phi.is_subset_of(omega) && omega.is_subset_of(center(G));
  while ((std::size_t{1} << c.n) < omega.size()) ++c.n;
  const unsigned e = c.n * (c.n + 5) / 2;
  c.bound = e >= 63 ? std::uint64_t{1} << 63 : std::uint64_t{1} << e;
  c.holds = G.order() <= c.bound;
  return c;
}

namespace detail {

/// The index-th element of KG: base-p digits give all |G| coefficients.
inline AlgebraElement algebra_element_at(const GroupAlgebra& kg, std::uint64_t index) {
  std::vector<residue_t> c(kg.dimension(), 0);
  for (auto& r : c) {
    r = static_cast<residue_t>(index % kg.p());
    index /= kg.p();
  }
  return kg.from_coefficients(std::move(c));
}

inline bool star_commutes(const AlgebraElement& x) {
  const AlgebraElement s = x.star();
  return x * s == s * x;
}

}  // namespace detail

/// x x* = x* x for every x in KG: all p^|G| elements when within the cap,
/// otherwise cfg.sample_count random elements.
inline VerificationReport is_normal_group_algebra(const GroupAlgebra& kg, const UnitSweepConfig& cfg) {
  VerificationReport r;
  r.claim = "normal-algebra";
  r.group = kg.group().name();
  r.p = kg.p();
  ReportTimer timer(r);
  const auto total = checked_power(kg.p(), kg.dimension());
  const bool exhaustive = cfg.mode == sweep_mode::exhaustive;
  if (exhaustive && (!total || *total > cfg.exhaustive_cap))
    throw error(errc::too_large, "exhaustive sweep over " + std::to_string(kg.p()) + "^" +
                                     std::to_string(kg.dimension()) + " elements exceeds the cap");
  r.mode = to_string(cfg.mode);
  r.pass = true;
  std::optional<AlgebraElement> bad_x;
  if (exhaustive) {
    auto bad = find_least_failure(*total, [&](std::uint64_t i) {
      return detail::star_commutes(detail::algebra_element_at(kg, i));
    });
    r.checked_count = bad ? *bad + 1 : *total;
    if (bad) bad_x = detail::algebra_element_at(kg, *bad);
  } else {
    r.seed = cfg.seed;
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      std::vector<residue_t> c(kg.dimension());
      for (auto& x : c) x = static_cast<residue_t>(rng() % kg.p());
      AlgebraElement x = kg.from_coefficients(std::move(c));
      r.checked_count = i + 1;
      if (!detail::star_commutes(x)) {
        bad_x = std::move(x);
        break;
      }
    }
  }
  if (bad_x) {
    r.pass = false;
    r.witness = {bad_x->to_string(), (*bad_x * bad_x->star()).to_string(), (bad_x->star() * *bad_x).to_string()};
    r.details["witness_roles"] = {"x", "x*x^*", "x^*x"};
  }
  return r;
}

}  // namespace uul
