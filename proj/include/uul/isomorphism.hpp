#pragma once

// Isomorphism testing for small groups by backtracking over images of a
// generating set. Candidates are restricted by an element signature (order,
// centralizer size, number of square roots) and every partial assignment must
// extend consistently and injectively to the subgroup it generates.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "uul/group.hpp"
#include "uul/subgroup.hpp"

namespace uul {

/// Cheap isomorphism invariants; differing vectors refute isomorphism.
struct InvariantVector {
  std::size_t order = 0;
  std::map<std::uint32_t, std::size_t> census;
  std::size_t center = 0;
  std::size_t derived = 0;
  std::size_t squares = 0;
  std::size_t involutions_span = 0;
  std::map<std::tuple<std::uint32_t, std::size_t, std::size_t>, std::size_t> signatures;

  bool operator==(const InvariantVector&) const = default;
};

namespace detail {

struct Signatures {
  std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>> of;
};

inline Signatures element_signatures(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> roots(n, 0);
  for (std::size_t x = 0; x < n; ++x) ++roots[g.mul(x, x)];
  Signatures s;
  s.of.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t cent = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (g.commute(x, y)) ++cent;
    s.of[x] = {g.element_order(x), cent, roots[x]};
  }
  return s;
}

}  // namespace detail

inline InvariantVector invariant_vector(const FiniteGroup& g) {
  InvariantVector v;
  v.order = g.order();
  v.census = order_census(g);
  v.center = center(g).size();
  v.derived = derived_subgroup(g).size();
  v.squares = squares_subgroup(g).size();
  std::vector<elem_t> inv;
  for (std::size_t x = 1; x < g.order(); ++x)
    if (g.element_order(x) == 2) inv.push_back(static_cast<elem_t>(x));
  v.involutions_span = generated_subgroup(g, inv).size();
  for (const auto& s : detail::element_signatures(g).of) ++v.signatures[s];
  return v;
}

namespace detail {

/// Extends x_i -> y_i over the subgroup generated by xs. Returns the partial
/// map (-1 where undefined) or nullopt if it is inconsistent or not injective.
inline std::optional<std::vector<int>> extend_map(const FiniteGroup& a, const FiniteGroup& b,
                                                  const std::vector<elem_t>& xs, const std::vector<elem_t>& ys) {
  std::vector<int> f(a.order(), -1);
  std::vector<std::uint8_t> hit(b.order(), 0);
  f[0] = 0;
  hit[0] = 1;
  std::deque<elem_t> queue{0};
  while (!queue.empty()) {
    elem_t e = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      elem_t t = a.mul(e, xs[i]);
      int v = b.mul(static_cast<elem_t>(f[e]), ys[i]);
      if (f[t] < 0) {
        if (hit[v]) return std::nullopt;
        hit[v] = 1;
        f[t] = v;
        queue.push_back(t);
      } else if (f[t] != v) {
        return std::nullopt;
      }
    }
  }
  return f;
}

}  // namespace detail

/// An isomorphism G1 -> G2 if one exists.
inline std::optional<GroupMap> is_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  if (invariant_vector(g1) != invariant_vector(g2)) return std::nullopt;

  const std::vector<elem_t> xs = minimal_generating_set(g1);
  if (xs.empty()) return GroupMap{{0}};
  const auto sig1 = detail::element_signatures(g1);
  const auto sig2 = detail::element_signatures(g2);
  std::vector<std::vector<elem_t>> candidates(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t y = 0; y < g2.order(); ++y)
      if (sig2.of[y] == sig1.of[xs[i]]) candidates[i].push_back(static_cast<elem_t>(y));

  std::vector<elem_t> ys;
  std::optional<GroupMap> found;
  auto search = [&](auto&& self, std::size_t level) -> bool {
    if (level == xs.size()) {
      auto f = detail::extend_map(g1, g2, xs, ys);
      if (!f) return false;
      GroupMap m;
      m.images.assign(f->begin(), f->end());
      found = std::move(m);
      return true;
    }
    std::vector<elem_t> prefix(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(level + 1));
    for (elem_t y : candidates[level]) {
      ys.push_back(y);
      if (detail::extend_map(g1, g2, prefix, ys) && self(self, level + 1)) return true;
      ys.pop_back();
    }
    return false;
  };
  search(search, 0);
  return found;
}

}  // namespace uul
