#pragma once

// Direct, semidirect and central products of finite groups.

#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uul/error.hpp"
#include "uul/group.hpp"
#include "uul/subgroup.hpp"

namespace uul {

namespace detail {

inline std::vector<std::string> merged_generator_names(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::string> names = a.generator_names();
  std::set<std::string> used(names.begin(), names.end());
  for (std::string n : b.generator_names()) {
    std::string base = n;
    for (int k = 2; used.count(n); ++k) n = base + std::to_string(k);
    used.insert(n);
    names.push_back(n);
  }
  return names;
}

inline std::string product_name(const FiniteGroup& a, const char* op, const FiniteGroup& b) {
  return "(" + a.name() + op + b.name() + ")";
}

}  // namespace detail

/// G1 x G2; element (a, b) has index a * |G2| + b.
inline FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2, std::string name = "") {
  const std::size_t n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  if (n > 65535) throw error(errc::exceeds_cap, "direct product too large");
  std::vector<elem_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = static_cast<elem_t>(g1.mul(x / n2, y / n2) * n2 + g2.mul(x % n2, y % n2));
  std::vector<elem_t> gens;
  for (elem_t a : g1.generators()) gens.push_back(static_cast<elem_t>(a * n2));
  for (elem_t b : g2.generators()) gens.push_back(b);
  if (name.empty()) name = detail::product_name(g1, "x", g2);
  return FiniteGroup::from_table(std::move(name), n, std::move(table), std::move(gens),
                                 detail::merged_generator_names(g1, g2));
}

/// N x| K where generator i of K acts on N by the automorphism `action[i]`
/// (given as images of N's element indices). The action is a left action:
/// (n1, k1)(n2, k2) = (n1 * k1(n2), k1 k2).
inline FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                                      const std::vector<std::vector<elem_t>>& action, std::string name = "") {
  const std::size_t nn = normal.order(), nk = acting.order(), n = nn * nk;
  if (n > 65535) throw error(errc::exceeds_cap, "semidirect product too large");
  if (action.size() != acting.generators().size())
    throw error(errc::bad_action, "one automorphism is needed per generator of the acting group");
  for (const auto& a : action) {
    GroupMap m{a};
    if (!is_bijective(normal, normal, m) || !is_homomorphism(normal, normal, m))
      throw error(errc::bad_action, "action of a generator is not an automorphism");
  }
  // Extend to every element of K and check that the extension is well defined.
  std::vector<std::vector<elem_t>> act(nk);
  act[0].resize(nn);
  for (std::size_t x = 0; x < nn; ++x) act[0][x] = static_cast<elem_t>(x);
  std::deque<elem_t> queue{0};
  std::vector<std::uint8_t> done(nk, 0);
  done[0] = 1;
  while (!queue.empty()) {
    elem_t e = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < acting.generators().size(); ++i) {
      elem_t t = acting.mul(e, acting.generators()[i]);
      std::vector<elem_t> f(nn);
      for (std::size_t x = 0; x < nn; ++x) f[x] = act[e][action[i][x]];
      if (!done[t]) {
        done[t] = 1;
        act[t] = std::move(f);
        queue.push_back(t);
      } else if (act[t] != f) {
        throw error(errc::bad_action, "action is not a homomorphism into Aut(N)");
      }
    }
  }
  std::vector<elem_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t n1 = x / nk, k1 = x % nk;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t n2 = y / nk, k2 = y % nk;
      table[x * n + y] = static_cast<elem_t>(normal.mul(n1, act[k1][n2]) * nk + acting.mul(k1, k2));
    }
  }
  std::vector<elem_t> gens;
  for (elem_t a : normal.generators()) gens.push_back(static_cast<elem_t>(a * nk));
  for (elem_t b : acting.generators()) gens.push_back(b);
  if (name.empty()) name = detail::product_name(normal, ":", acting);
  return FiniteGroup::from_table(std::move(name), n, std::move(table), std::move(gens),
                                 detail::merged_generator_names(normal, acting));
}

/// Automorphism of `g` given by x -> x^-1 (only valid for abelian g).
inline std::vector<elem_t> inversion_map(const FiniteGroup& g) {
  std::vector<elem_t> m(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) m[x] = g.inv(static_cast<elem_t>(x));
  return m;
}

inline std::vector<elem_t> identity_map(const FiniteGroup& g) {
  std::vector<elem_t> m(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) m[x] = static_cast<elem_t>(x);
  return m;
}

/// Central product: G1 x G2 modulo {(z, f(z)^-1)} where f maps the subgroup
/// generated by the first components of `identified` onto the subgroup
/// generated by the second components, sending each first component to its
/// partner.
inline FiniteGroup central_product(const FiniteGroup& g1, const FiniteGroup& g2,
                                   const std::vector<std::pair<elem_t, elem_t>>& identified,
                                   std::string name = "") {
  std::vector<elem_t> z1, z2;
  for (auto [a, b] : identified) {
    if (a >= g1.order() || b >= g2.order()) throw error(errc::invalid_argument, "element index out of range");
    z1.push_back(a);
    z2.push_back(b);
  }
  Subgroup c1 = center(g1), c2 = center(g2);
  for (elem_t a : z1)
    if (!c1.contains(a)) throw error(errc::not_central, g1.label(a) + " is not central in " + g1.name());
  for (elem_t b : z2)
    if (!c2.contains(b)) throw error(errc::not_central, g2.label(b) + " is not central in " + g2.name());

  Subgroup s1 = generated_subgroup(g1, z1), s2 = generated_subgroup(g2, z2);
  if (s1.size() != s2.size())
    throw error(errc::mismatched_identification, "identified subgroups have different orders");
  std::vector<int> f(g1.order(), -1);
  f[0] = 0;
  std::deque<elem_t> queue{0};
  while (!queue.empty()) {
    elem_t e = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < z1.size(); ++i) {
      elem_t t = g1.mul(e, z1[i]);
      int v = g2.mul(static_cast<elem_t>(f[e]), z2[i]);
      if (f[t] < 0) {
        f[t] = v;
        queue.push_back(t);
      } else if (f[t] != v) {
        throw error(errc::mismatched_identification, "identification does not extend to a homomorphism");
      }
    }
  }
  std::set<int> image;
  for (elem_t a : s1) image.insert(f[a]);
  if (image.size() != s1.size())
    throw error(errc::mismatched_identification, "identification is not injective");

  FiniteGroup d = direct_product(g1, g2);
  const std::size_t n2 = g2.order();
  std::vector<elem_t> kernel;
  for (elem_t a : s1) kernel.push_back(static_cast<elem_t>(a * n2 + g2.inv(static_cast<elem_t>(f[a]))));
  Subgroup k(d, std::move(kernel));
  Quotient q = quotient(d, k);
  if (name.empty()) name = detail::product_name(g1, "Y", g2);
  return q.group.renamed(std::move(name));
}

}  // namespace uul
