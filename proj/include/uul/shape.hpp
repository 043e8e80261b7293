#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uul/group.hpp"
#include "uul/subgroup.hpp"

namespace uul {

inline bool is_cyclic(const FiniteGroup& g) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

/// Every non-identity element has order 2 (the trivial group qualifies).
inline bool is_elementary_abelian_2(const FiniteGroup& g) {
  for (std::size_t x = 1; x < g.order(); ++x)
    if (g.element_order(x) != 2) return false;
  return true;
}

namespace detail {

/// An element `b` outside <a> with b^2 = `b_square` and b^-1 a b = a^exponent.
inline bool has_outside_element(const FiniteGroup& g, elem_t a, long long exponent, elem_t b_square) {
  Subgroup ca = cyclic_subgroup(g, a);
  const elem_t target = g.pow(a, exponent);
  for (std::size_t b = 0; b < g.order(); ++b) {
    if (ca.contains(b)) continue;
    if (g.mul(b, b) == b_square && g.conjugate(a, b) == target) return true;
  }
  return false;
}

}  // namespace detail

/// Order 2m, cyclic subgroup <a> of order m, involution outside <a> inverting a.
inline bool is_dihedral(const FiniteGroup& g) {
  if (g.order() % 2 != 0) return false;
  const std::size_t m = g.order() / 2;
  for (std::size_t a = 0; a < g.order(); ++a)
    if (g.element_order(a) == m && detail::has_outside_element(g, a, -1, 0)) return true;
  return false;
}

/// Order 2^n >= 8, a unique involution and a cyclic subgroup of index 2.
inline bool is_generalized_quaternion(const FiniteGroup& g) {
  if (g.order() < 8 || !is_2_group(g)) return false;
  std::size_t involutions = 0;
  bool cyclic_index2 = false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == 2) ++involutions;
    if (g.element_order(x) == g.order() / 2) cyclic_index2 = true;
  }
  return involutions == 1 && cyclic_index2;
}

/// Order 2^n >= 16, <a> of index 2 and an involution outside acting as
/// a -> a^(2^(n-2) - 1).
inline bool is_semidihedral(const FiniteGroup& g) {
  if (g.order() < 16 || !is_2_group(g)) return false;
  const std::size_t m = g.order() / 2;
  for (std::size_t a = 0; a < g.order(); ++a)
    if (g.element_order(a) == m &&
        detail::has_outside_element(g, a, static_cast<long long>(m / 2 - 1), 0))
      return true;
  return false;
}

/// Centre, derived subgroup and Frattini subgroup coincide and have order p.
inline bool is_extraspecial(const FiniteGroup& g) {
  auto p = p_group_prime(g);
  if (!p) return false;
  Subgroup z = center(g);
  if (z.size() != *p) return false;
  return derived_subgroup(g) == z && frattini_subgroup(g) == z;
}

/// Nonabelian with every subgroup normal; checking cyclic subgroups suffices.
inline bool is_hamiltonian(const FiniteGroup& g) {
  if (is_abelian(g)) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!is_normal(g, cyclic_subgroup(g, x))) return false;
  return true;
}

struct ShapeFlags {
  bool abelian = false;
  bool cyclic = false;
  bool elementary_abelian_2 = false;
  bool dihedral = false;
  bool generalized_quaternion = false;
  bool semidihedral = false;
  bool extraspecial = false;
  bool hamiltonian = false;

  bool operator==(const ShapeFlags&) const = default;
};

inline ShapeFlags shape_predicates(const FiniteGroup& g) {
  ShapeFlags f;
  f.abelian = is_abelian(g);
  f.cyclic = is_cyclic(g);
  f.elementary_abelian_2 = is_elementary_abelian_2(g);
  f.dihedral = is_dihedral(g);
  f.generalized_quaternion = is_generalized_quaternion(g);
  f.semidihedral = is_semidihedral(g);
  f.extraspecial = is_extraspecial(g);
  f.hamiltonian = is_hamiltonian(g);
  return f;
}

inline std::vector<std::string> flag_names(const ShapeFlags& f) {
  std::vector<std::string> out;
  if (f.abelian) out.push_back("abelian");
  if (f.cyclic) out.push_back("cyclic");
  if (f.elementary_abelian_2) out.push_back("elementary_abelian_2");
  if (f.dihedral) out.push_back("dihedral");
  if (f.generalized_quaternion) out.push_back("generalized_quaternion");
  if (f.semidihedral) out.push_back("semidihedral");
  if (f.extraspecial) out.push_back("extraspecial");
  if (f.hamiltonian) out.push_back("hamiltonian");
  return out;
}

}  // namespace uul
