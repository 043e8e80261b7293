#pragma once

// Subgroups, quotients and the characteristic subgroups used throughout:
// centre, derived subgroup, Frattini subgroup, Omega and the subgroup
// generated by squares.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uul/error.hpp"
#include "uul/group.hpp"

namespace uul {

class Subgroup {
 public:
  /// Validates that `members` is closed and contains the identity.
  Subgroup(FiniteGroup parent, std::vector<elem_t> members) : parent_(std::move(parent)) {
    init(std::move(members));
    if (!contains(0)) throw error(errc::invalid_argument, "subgroup lacks the identity");
    for (elem_t a : members_) {
      if (!contains(parent_.inv(a))) throw error(errc::invalid_argument, "subgroup not closed under inverse");
      for (elem_t b : members_)
        if (!contains(parent_.mul(a, b))) throw error(errc::invalid_argument, "subgroup not closed under product");
    }
  }

  static Subgroup whole(const FiniteGroup& g) {
    std::vector<elem_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<elem_t>(i);
    return Subgroup(g, std::move(all), trusted_tag{});
  }

  static Subgroup trivial(const FiniteGroup& g) { return Subgroup(g, {0}, trusted_tag{}); }

  const FiniteGroup& parent() const { return parent_; }
  std::size_t size() const { return members_.size(); }
  bool contains(elem_t a) const { return mask_[a] != 0; }
  const std::vector<elem_t>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool is_subset_of(const Subgroup& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](elem_t a) { return other.contains(a); });
  }

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  struct trusted_tag {};
  Subgroup(FiniteGroup parent, std::vector<elem_t> members, trusted_tag) : parent_(std::move(parent)) {
    init(std::move(members));
  }

  void init(std::vector<elem_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    mask_.assign(parent_.order(), 0);
    for (elem_t a : members) {
      if (a >= parent_.order()) throw error(errc::invalid_argument, "element index out of range");
      mask_[a] = 1;
    }
    members_ = std::move(members);
  }

  friend Subgroup generated_subgroup(const FiniteGroup&, std::span<const elem_t>);

  FiniteGroup parent_;
  std::vector<elem_t> members_;
  std::vector<std::uint8_t> mask_;
};

/// Smallest subgroup containing `seed`.
inline Subgroup generated_subgroup(const FiniteGroup& g, std::span<const elem_t> seed) {
  for (elem_t s : seed)
    if (s >= g.order()) throw error(errc::invalid_argument, "seed element out of range");
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<elem_t> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (elem_t s : seed) {
      elem_t n = g.mul(members[i], s);
      if (!in[n]) {
        in[n] = 1;
        members.push_back(n);
      }
    }
  }
  return Subgroup(g, std::move(members), Subgroup::trusted_tag{});
}

inline Subgroup generated_subgroup(const FiniteGroup& g, std::initializer_list<elem_t> seed) {
  return generated_subgroup(g, std::span<const elem_t>(seed.begin(), seed.size()));
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<elem_t> seed = a.members();
  seed.insert(seed.end(), b.members().begin(), b.members().end());
  return generated_subgroup(a.parent(), seed);
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<elem_t> common;
  for (elem_t x : a)
    if (b.contains(x)) common.push_back(x);
  return Subgroup(a.parent(), std::move(common));
}

/// True iff g^-1 S g = S for every g. Checking the generators of G suffices.
inline bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (elem_t x : g.generators())
    for (elem_t a : s)
      if (!s.contains(g.conjugate(a, x))) return false;
  return true;
}

/// True iff conjugation by `h` maps S into itself.
inline bool normalizes(const FiniteGroup& g, elem_t h, const Subgroup& s) {
  for (elem_t a : s)
    if (!s.contains(g.conjugate(a, h))) return false;
  return true;
}

inline Subgroup centralizer(const FiniteGroup& g, std::span<const elem_t> elems) {
  std::vector<elem_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (elem_t e : elems)
      if (!g.commute(static_cast<elem_t>(x), e)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(static_cast<elem_t>(x));
  }
  return Subgroup(g, std::move(out));
}

inline Subgroup center(const FiniteGroup& g) { return centralizer(g, g.generators()); }

inline Subgroup cyclic_subgroup(const FiniteGroup& g, elem_t a) { return generated_subgroup(g, {a}); }

// ---------------------------------------------------------------------------

enum class characteristic { center, derived, frattini, omega, squares };

inline Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<elem_t> seed;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      elem_t c = g.commutator(static_cast<elem_t>(a), static_cast<elem_t>(b));
      if (!seen[c]) {
        seen[c] = 1;
        seed.push_back(c);
      }
    }
  return generated_subgroup(g, seed);
}

/// Subgroup generated by the k-th powers of all elements.
inline Subgroup power_subgroup(const FiniteGroup& g, unsigned k) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<elem_t> seed;
  for (std::size_t a = 0; a < g.order(); ++a) {
    elem_t c = g.pow(static_cast<elem_t>(a), k);
    if (!seen[c]) {
      seen[c] = 1;
      seed.push_back(c);
    }
  }
  return generated_subgroup(g, seed);
}

inline Subgroup squares_subgroup(const FiniteGroup& g) { return power_subgroup(g, 2); }

/// Frattini subgroup of a p-group: generated by p-th powers and commutators.
inline Subgroup frattini_subgroup(const FiniteGroup& g) {
  if (g.order() == 1) return Subgroup::trivial(g);
  auto p = p_group_prime(g);
  if (!p) throw error(errc::not_p_group, "Frattini subgroup requested for a group that is not a p-group");
  return join(power_subgroup(g, *p), derived_subgroup(g));
}

/// Omega of a p-group: generated by the elements x with x^p = 1.
inline Subgroup omega_subgroup(const FiniteGroup& g) {
  if (g.order() == 1) return Subgroup::trivial(g);
  auto p = p_group_prime(g);
  if (!p) throw error(errc::not_p_group, "Omega subgroup requested for a group that is not a p-group");
  std::vector<elem_t> seed;
  for (std::size_t a = 1; a < g.order(); ++a)
    if (g.element_order(static_cast<elem_t>(a)) == *p) seed.push_back(static_cast<elem_t>(a));
  return generated_subgroup(g, seed);
}

inline Subgroup characteristic_subgroup(const FiniteGroup& g, characteristic kind) {
  switch (kind) {
    case characteristic::center: return center(g);
    case characteristic::derived: return derived_subgroup(g);
    case characteristic::frattini: return frattini_subgroup(g);
    case characteristic::omega: return omega_subgroup(g);
    case characteristic::squares: return squares_subgroup(g);
  }
  throw error(errc::invalid_argument, "unknown characteristic subgroup kind");
}

// ---------------------------------------------------------------------------

/// A subgroup re-indexed as a group in its own right. Element i of `group` is
/// `embedding[i]` in the parent; parent labels are kept.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<elem_t> embedding;
};

namespace detail {

/// Greedy generating set: repeatedly adds the element that enlarges the
/// generated subgroup the most, preferring high order then low index.
inline std::vector<elem_t> greedy_generators(const FiniteGroup& g, std::span<const elem_t> pool) {
  std::vector<elem_t> gens;
  Subgroup current = Subgroup::trivial(g);
  std::size_t target = 0;
  {
    Subgroup all = generated_subgroup(g, pool);
    target = all.size();
  }
  while (current.size() < target) {
    std::optional<elem_t> best;
    std::size_t best_size = 0;
    for (elem_t x : pool) {
      if (current.contains(x)) continue;
      std::vector<elem_t> seed = gens;
      seed.push_back(x);
      std::size_t s = generated_subgroup(g, seed).size();
      if (!best || s > best_size || (s == best_size && g.element_order(x) > g.element_order(*best))) {
        best = x;
        best_size = s;
      }
    }
    gens.push_back(*best);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

}  // namespace detail

/// A small generating set. For p-groups this is a Burnside basis (its size is
/// the rank of G/Phi(G), the minimum possible); otherwise a greedy choice.
inline std::vector<elem_t> minimal_generating_set(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  if (is_p_group(g)) {
    Subgroup phi = frattini_subgroup(g);
    std::vector<elem_t> gens;
    Subgroup span = phi;
    // Highest element order first keeps the backtracking in isomorphism
    // search narrow.
    std::vector<elem_t> order(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<elem_t>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](elem_t a, elem_t b) { return g.element_order(a) > g.element_order(b); });
    for (elem_t x : order) {
      if (span.contains(x)) continue;
      gens.push_back(x);
      std::vector<elem_t> seed = phi.members();
      seed.insert(seed.end(), gens.begin(), gens.end());
      span = generated_subgroup(g, seed);
      if (span.size() == g.order()) break;
    }
    return gens;
  }
  std::vector<elem_t> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<elem_t>(i);
  return detail::greedy_generators(g, all);
}

/// `generators` must generate `s`; when empty a greedy generating set is used.
inline SubgroupGroup as_group(const Subgroup& s, std::string name = "", std::vector<elem_t> generators = {}) {
  const FiniteGroup& g = s.parent();
  const std::size_t n = s.size();
  std::vector<elem_t> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[s.members()[i]] = static_cast<elem_t>(i);
  std::vector<elem_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = local[g.mul(s.members()[i], s.members()[j])];
  std::vector<elem_t> gens =
      generators.empty() && n > 1 ? detail::greedy_generators(g, s.members()) : std::move(generators);
  std::vector<elem_t> local_gens;
  std::vector<std::string> names;
  for (elem_t x : gens) {
    local_gens.push_back(local[x]);
    names.push_back(g.label(x));
  }
  std::vector<std::string> labels;
  for (elem_t x : s) labels.push_back(g.label(x));
  if (name.empty()) name = g.name() + "_sub" + std::to_string(n);
  return {FiniteGroup::from_table(std::move(name), n, std::move(table), std::move(local_gens), std::move(names),
                                  std::move(labels)),
          s.members()};
}

// ---------------------------------------------------------------------------

struct Quotient {
  FiniteGroup group;
  GroupMap projection;
};

/// G/N with cosets numbered by their least element; the identity coset is 0.
inline Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw error(errc::not_normal, "quotient by a subgroup that is not normal");
  const std::size_t order = g.order();
  std::vector<elem_t> coset(order, 0);
  std::vector<std::uint8_t> assigned(order, 0);
  std::vector<elem_t> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (assigned[x]) continue;
    elem_t id = static_cast<elem_t>(reps.size());
    reps.push_back(static_cast<elem_t>(x));
    for (elem_t m : n) {
      elem_t y = g.mul(static_cast<elem_t>(x), m);
      coset[y] = id;
      assigned[y] = 1;
    }
  }
  const std::size_t q = reps.size();
  std::vector<elem_t> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset[g.mul(reps[i], reps[j])];

  std::vector<elem_t> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    elem_t c = coset[g.generators()[i]];
    if (c == 0 || std::find(gens.begin(), gens.end(), c) != gens.end()) continue;
    gens.push_back(c);
    names.push_back(g.generator_names()[i]);
  }
  FiniteGroup qg = FiniteGroup::from_table(g.name() + "/N" + std::to_string(n.size()), q, std::move(table),
                                           std::move(gens), std::move(names));
  return {std::move(qg), GroupMap{std::move(coset)}};
}

/// All subgroups of index 2, as kernels of the nontrivial homomorphisms onto C2.
inline std::vector<Subgroup> index2_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  if (g.order() % 2 != 0) return out;
  const std::vector<elem_t> gens = minimal_generating_set(g);
  const std::size_t d = gens.size();
  if (d > 20) throw error(errc::too_large, "too many generators for index-2 enumeration");
  std::vector<int> value(g.order());
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    std::fill(value.begin(), value.end(), -1);
    value[0] = 0;
    std::deque<elem_t> queue{0};
    bool ok = true;
    while (!queue.empty() && ok) {
      elem_t e = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < d; ++i) {
        elem_t n = g.mul(e, gens[i]);
        int v = value[e] ^ static_cast<int>((mask >> i) & 1u);
        if (value[n] < 0) {
          value[n] = v;
          queue.push_back(n);
        } else if (value[n] != v) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<elem_t> kernel;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (value[x] == 0) kernel.push_back(static_cast<elem_t>(x));
    out.emplace_back(g, std::move(kernel));
  }
  return out;
}

}  // namespace uul
