#pragma once

// Naive reference computations used to check the library. Nothing here calls
// into the library's algorithms beyond reading a group's multiplication table.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "uul/group.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  Perm id(gens.empty() ? 1 : gens[0].size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> frontier{id};
  seen.insert(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier)
      for (const Perm& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return seen;
}

inline std::uint32_t perm_order(const Perm& p) {
  std::uint32_t l = 1;
  std::vector<bool> done(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i]) continue;
    std::uint32_t len = 0;
    for (std::size_t j = i; !done[j]; j = p[j]) done[j] = true, ++len;
    l = std::lcm(l, len);
  }
  return l;
}

inline std::map<std::uint32_t, std::size_t> census(const std::set<Perm>& elems) {
  std::map<std::uint32_t, std::size_t> c;
  for (const Perm& p : elems) ++c[perm_order(p)];
  return c;
}

// ---- table-level helpers -------------------------------------------------

using uul::elem_t;
using uul::FiniteGroup;

inline elem_t power(const FiniteGroup& g, elem_t a, long long k) {
  const long long n = g.element_order(a);
  k = ((k % n) + n) % n;
  elem_t r = 0;
  for (long long i = 0; i < k; ++i) r = g.mul(r, a);
  return r;
}

inline elem_t inverse(const FiniteGroup& g, elem_t a) {
  for (std::size_t b = 0; b < g.order(); ++b)
    if (g.mul(a, b) == 0) return static_cast<elem_t>(b);
  return 0;
}

inline elem_t comm(const FiniteGroup& g, elem_t a, elem_t b) {
  return g.mul(g.mul(inverse(g, a), inverse(g, b)), g.mul(a, b));
}

inline elem_t conj(const FiniteGroup& g, elem_t a, elem_t b) { return g.mul(g.mul(inverse(g, b), a), b); }

/// Smallest set containing `seed` and closed under products (fixpoint).
inline std::set<elem_t> span(const FiniteGroup& g, std::vector<elem_t> seed) {
  std::set<elem_t> s(seed.begin(), seed.end());
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<elem_t> cur(s.begin(), s.end());
    for (elem_t a : cur)
      for (elem_t b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

inline std::set<elem_t> center(const FiniteGroup& g) {
  std::set<elem_t> z;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < g.order() && ok; ++b) ok = g.mul(a, b) == g.mul(b, a);
    if (ok) z.insert(static_cast<elem_t>(a));
  }
  return z;
}

inline bool normal(const FiniteGroup& g, const std::set<elem_t>& s) {
  for (elem_t a : s)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (!s.count(conj(g, a, static_cast<elem_t>(b)))) return false;
  return true;
}

inline std::map<std::uint32_t, std::size_t> census(const FiniteGroup& g) {
  std::map<std::uint32_t, std::size_t> c;
  for (std::size_t a = 0; a < g.order(); ++a) {
    std::uint32_t k = 1;
    for (elem_t x = static_cast<elem_t>(a); x != 0; x = g.mul(x, static_cast<elem_t>(a))) ++k;
    ++c[a == 0 ? 1 : k];
  }
  return c;
}

inline bool abelian(const FiniteGroup& g) { return center(g).size() == g.order(); }

/// Pair (g,h) is fine for goodness iff h normalizes S = <g^2> and, modulo S
/// (where g becomes an involution), g commutes with h, h is an involution,
/// or g inverts h.
inline bool good_pair(const FiniteGroup& G, elem_t g, elem_t h) {
  const std::set<elem_t> S = span(G, {G.mul(g, g)});
  for (elem_t s : S)
    if (!S.count(conj(G, s, h))) return false;
  return S.count(comm(G, g, h)) || S.count(G.mul(h, h)) || S.count(power(G, G.mul(g, h), 2));
}

inline bool good(const FiniteGroup& G) {
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      if (!good_pair(G, static_cast<elem_t>(g), static_cast<elem_t>(h))) return false;
  return true;
}

// ---- naive group algebra -------------------------------------------------

/// Sparse element of K[G]: element -> coefficient in [0, p).
using Sparse = std::map<elem_t, unsigned>;

inline Sparse add_term(Sparse a, elem_t x, long long c, unsigned p) {
  const long long v = ((static_cast<long long>(a[x]) + c) % p + p) % p;
  if (v == 0) a.erase(x);
  else a[x] = static_cast<unsigned>(v);
  return a;
}

inline Sparse mul(const FiniteGroup& G, const Sparse& a, const Sparse& b, unsigned p) {
  Sparse r;
  for (auto [x, cx] : a)
    for (auto [y, cy] : b) r = add_term(std::move(r), G.mul(x, y), static_cast<long long>(cx) * cy, p);
  return r;
}

inline Sparse star(const FiniteGroup& G, const Sparse& a) {
  Sparse r;
  for (auto [x, c] : a) r[inverse(G, x)] = c;
  return r;
}

inline bool is_one(const Sparse& a) { return a.size() == 1 && a.count(0) && a.at(0) == 1; }

/// u_{g,h} = 1 + (g - 1) h gbar, expanded term by term.
inline Sparse bicyclic(const FiniteGroup& G, elem_t g, elem_t h, unsigned p) {
  Sparse r{{0, 1}};
  const std::uint32_t n = G.element_order(g);
  elem_t gi = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    r = add_term(std::move(r), G.mul(G.mul(g, h), gi), 1, p);
    r = add_term(std::move(r), G.mul(h, gi), -1, p);
    gi = G.mul(gi, g);
  }
  return r;
}

/// Unitary for a known unit u: u u* = 1.
inline bool unitary(const FiniteGroup& G, const Sparse& u, unsigned p) { return is_one(mul(G, u, star(G, u), p)); }

inline Sparse random_element(const FiniteGroup& G, unsigned p, std::mt19937_64& rng) {
  Sparse r;
  for (std::size_t x = 0; x < G.order(); ++x) {
    const unsigned c = static_cast<unsigned>(rng() % p);
    if (c) r[static_cast<elem_t>(x)] = c;
  }
  return r;
}

}  // namespace oracle
