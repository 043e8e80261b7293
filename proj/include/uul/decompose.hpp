#pragma once

// Splitting off the largest elementary abelian direct factor:
// G = E x H with E elementary abelian and H without a direct factor of order 2.
//
// A = involutions of Z(G) together with 1, B = <g^2 : g in G>.
// E is a complement to A n B in A; H/B is a complement to AB/B in G/B.
// Both complements are built greedily in ascending element index, which is
// basis extension over GF(2) since A and G/B are elementary abelian 2-groups.

#include <vector>

#include "uul/group.hpp"
#include "uul/subgroup.hpp"

namespace uul {

struct DirectSplit {
  Subgroup e;
  Subgroup h;
};

namespace detail {

/// Extends `base` by elements of `pool` (ascending) until `target` is
/// reached; returns the chosen elements.
inline std::vector<elem_t> greedy_complement(const FiniteGroup& g, const Subgroup& base,
                                             const std::vector<elem_t>& pool, std::size_t target) {
  std::vector<elem_t> chosen;
  Subgroup span = base;
  for (elem_t x : pool) {
    if (span.size() >= target) break;
    if (span.contains(x)) continue;
    chosen.push_back(x);
    std::vector<elem_t> seed = span.members();
    seed.push_back(x);
    span = generated_subgroup(g, seed);
  }
  return chosen;
}

}  // namespace detail

/// Involutions of the centre together with the identity.
inline Subgroup central_involutions(const FiniteGroup& g) {
  std::vector<elem_t> a;
  for (elem_t z : center(g))
    if (g.mul(z, z) == 0) a.push_back(z);
  return Subgroup(g, std::move(a));
}

inline DirectSplit decompose_elem_abelian_factor(const FiniteGroup& g) {
  const Subgroup a = central_involutions(g);
  const Subgroup b = squares_subgroup(g);
  const Subgroup ab_meet = intersection(a, b);

  // E: complement of A n B in A.
  std::vector<elem_t> e_gens = detail::greedy_complement(g, ab_meet, a.members(), a.size());
  Subgroup e = generated_subgroup(g, e_gens);

  // H: complement of AB/B in G/B, lifted to G and joined with B.
  const Subgroup ab = join(a, b);
  std::vector<elem_t> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<elem_t>(i);
  std::vector<elem_t> h_gens = detail::greedy_complement(g, ab, all, g.order());
  std::vector<elem_t> seed = b.members();
  seed.insert(seed.end(), h_gens.begin(), h_gens.end());
  Subgroup h = generated_subgroup(g, seed);
  return {std::move(e), std::move(h)};
}

/// Direct-factor search: G has a direct factor of order 2 iff some central
/// involution avoids some subgroup of index 2 (that subgroup is then a
/// normal complement).
inline bool has_direct_factor_of_order_2(const FiniteGroup& g) {
  const Subgroup a = central_involutions(g);
  if (a.size() == 1) return false;
  for (const Subgroup& m : index2_subgroups(g))
    for (elem_t z : a)
      if (z != 0 && !m.contains(z)) return true;
  return false;
}

}  // namespace uul
