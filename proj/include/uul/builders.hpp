#pragma once

// Constructors for the reference groups. Each group is realized through the
// right-regular permutations of its generators on a normal form, then closed
// with close_generators, so element 0 is the identity and generator i is
// element i+1.

#include <cstdint>
#include <string>
#include <vector>

#include "uul/algebra.hpp"
#include "uul/error.hpp"
#include "uul/group.hpp"
#include "uul/product.hpp"

namespace uul {

namespace detail {

inline long long mod(long long a, long long m) { return ((a % m) + m) % m; }

inline void require(bool ok, const std::string& what) {
  if (!ok) throw error(errc::bad_params, what);
}

}  // namespace detail

inline FiniteGroup cyclic_group(std::size_t n, std::string name = "") {
  detail::require(n >= 1 && n <= default_order_cap, "cyclic order must be between 1 and the order cap");
  if (name.empty()) name = "C" + std::to_string(n);
  if (n == 1) return close_generators(1, {}, {}, default_order_cap, name);
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
  return close_generators(n, {p}, {"a"}, n, name);
}

/// <a, b | a^m = 1, b^s = a^t, b^-1 a b = a^r>. Elements are a^i b^j with
/// b^s reduced to a^t.
inline FiniteGroup metacyclic_group(long long m, long long s, long long t, long long r, std::string name = "",
                                    std::vector<std::string> names = {"a", "b"}) {
  detail::require(m >= 1 && s >= 1, "metacyclic orders must be positive");
  detail::require(m * s <= static_cast<long long>(default_order_cap), "metacyclic group exceeds the order cap");
  r = detail::mod(r, m);
  t = detail::mod(t, m);
  long long rs = 1;
  for (long long i = 0; i < s; ++i) rs = rs * r % m;
  detail::require(rs == 1 % m, "r^s must be 1 mod m");
  detail::require(detail::mod(t * (r - 1), m) == 0, "a^t must commute with b");
  // b a b^-1 = a^(r^-1), so a^i b^j * a = a^(i + r^-j) b^j.
  long long rinv = 1;
  for (long long i = 0; i + 1 < s; ++i) rinv = rinv * r % m;  // r^(s-1) = r^-1
  const std::size_t n = static_cast<std::size_t>(m * s);
  auto idx = [&](long long i, long long j) { return static_cast<std::uint32_t>(j * m + detail::mod(i, m)); };
  Permutation pa(n), pb(n);
  for (long long j = 0; j < s; ++j) {
    long long rj = 1;
    for (long long k = 0; k < j; ++k) rj = rj * rinv % m;
    for (long long i = 0; i < m; ++i) {
      pa[idx(i, j)] = idx(i + rj, j);
      pb[idx(i, j)] = j + 1 < s ? idx(i, j + 1) : idx(i + t, 0);
    }
  }
  if (name.empty())
    name = "metacyclic(" + std::to_string(m) + "," + std::to_string(s) + "," + std::to_string(t) + "," +
           std::to_string(r) + ")";
  return close_generators(n, {pa, pb}, std::move(names), default_order_cap, std::move(name));
}

inline FiniteGroup dihedral_group(std::size_t order) {
  detail::require(order >= 2 && order % 2 == 0, "dihedral order must be even and at least 2");
  const long long m = static_cast<long long>(order / 2);
  return metacyclic_group(m, 2, 0, -1, "D" + std::to_string(order), {"r", "s"});
}

inline bool is_power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

inline FiniteGroup quaternion_group(std::size_t order) {
  detail::require(order >= 8 && is_power_of_two(order), "quaternion order must be 2^n with n >= 3");
  const long long m = static_cast<long long>(order / 2);
  return metacyclic_group(m, 2, m / 2, -1, "Q" + std::to_string(order), {"i", "j"});
}

inline FiniteGroup semidihedral_group(std::size_t order) {
  detail::require(order >= 16 && is_power_of_two(order), "semidihedral order must be 2^n with n >= 4");
  const long long m = static_cast<long long>(order / 2);
  return metacyclic_group(m, 2, 0, m / 2 - 1, "SD" + std::to_string(order), {"a", "b"});
}

/// <a, b | a^8 = b^2 = 1, a^b = a^5>.
inline FiniteGroup modular16() { return metacyclic_group(8, 2, 0, 5, "M16", {"a", "b"}); }

/// <w, y | w^4 = 1, w^y = w^-1, y^(2^k) = w^2>, order 2^(k+2).
inline FiniteGroup p_family(unsigned k) {
  detail::require(k >= 1 && k <= 8, "P(k) needs 1 <= k <= 8");
  return metacyclic_group(4, 1ll << k, 2, -1, "P" + std::to_string(k), {"w", "y"});
}

/// <w, y | w^4 = 1, w^y = w^-1, y^(2^(k+1)) = 1>, order 2^(k+3).
inline FiniteGroup r_family(unsigned k) {
  detail::require(k <= 7, "R(k) needs k <= 7");
  return metacyclic_group(4, 1ll << (k + 1), 0, -1, "R" + std::to_string(k), {"w", "y"});
}

/// Abelian group C_{n1} x C_{n2} x ... as one regular representation.
inline FiniteGroup abelian_group(const std::vector<std::size_t>& factors, std::string name = "") {
  std::size_t n = 1;
  for (std::size_t f : factors) {
    detail::require(f >= 1, "abelian factor orders must be positive");
    n *= f;
    detail::require(n <= default_order_cap, "abelian group exceeds the order cap");
  }
  if (name.empty()) {
    for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "xC" : "C") + std::to_string(factors[i]);
    if (factors.empty()) name = "C1";
  }
  std::vector<Permutation> gens;
  std::vector<std::string> names;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::size_t f = factors[i];
    if (f > 1) {
      Permutation p(n);
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t digit = (x / stride) % f;
        p[x] = static_cast<std::uint32_t>(x - digit * stride + ((digit + 1) % f) * stride);
      }
      gens.push_back(std::move(p));
      names.push_back(default_generator_name(names.size()));
    }
    stride *= f;
  }
  return close_generators(n, gens, names, default_order_cap, std::move(name));
}

inline FiniteGroup elementary_abelian_group(std::size_t rank) {
  detail::require(rank <= 10, "elementary abelian rank must be at most 10");
  return abelian_group(std::vector<std::size_t>(rank, 2), "C2^" + std::to_string(rank));
}

/// Class-2 group with d generators over a central elementary abelian
/// subgroup of rank c. Elements are pairs (v, z) in F2^d x F2^c with
/// (v, z)(w, z') = (v + w, z + z' + beta(v, w)), beta bilinear with
/// beta(e_i, e_i) = square of generator i, beta(e_i, e_j) = commutator of
/// generators i and j for i > j, and 0 for i < j.
struct Class2Spec {
  std::vector<std::string> names;
  std::vector<std::uint32_t> squares;                  // bitmask over the central basis
  std::vector<std::vector<std::uint32_t>> commutators;  // [i][j] for i > j
  unsigned central_rank = 0;
};

inline FiniteGroup class2_group(const Class2Spec& spec, std::string name) {
  const std::size_t d = spec.names.size();
  const std::size_t n = std::size_t{1} << (d + spec.central_rank);
  detail::require(n <= default_order_cap, "class-2 group exceeds the order cap");
  auto beta = [&](std::size_t j, std::size_t i) -> std::uint32_t {
    if (i == j) return spec.squares[i];
    if (j > i) return spec.commutators[j][i];
    return 0;
  };
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < d; ++i) {
    Permutation p(n);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t v = x & ((std::size_t{1} << d) - 1);
      std::size_t z = x >> d;
      for (std::size_t j = 0; j < d; ++j)
        if (v >> j & 1) z ^= beta(j, i);
      p[x] = static_cast<std::uint32_t>((v ^ (std::size_t{1} << i)) | (z << d));
    }
    gens.push_back(std::move(p));
  }
  return close_generators(n, gens, spec.names, default_order_cap, std::move(name));
}

namespace detail {

inline Class2Spec class2_blank(std::vector<std::string> names, unsigned central_rank) {
  Class2Spec s;
  const std::size_t d = names.size();
  s.names = std::move(names);
  s.squares.assign(d, 0);
  s.commutators.assign(d, std::vector<std::uint32_t>(d, 0));
  s.central_rank = central_rank;
  return s;
}

inline void set_comm(Class2Spec& s, std::size_t i, std::size_t j, std::uint32_t c) {
  if (i > j) s.commutators[i][j] = c;
  else s.commutators[j][i] = c;
}

}  // namespace detail

/// <x, y, u | x^4 = y^4 = 1, x^2 = [y,x], y^2 = u^2 = [u,x], x^2 y^2 = [u,y]>.
inline FiniteGroup h32() {
  auto s = detail::class2_blank({"x", "y", "u"}, 2);
  const std::uint32_t c1 = 1, c2 = 2;
  s.squares = {c1, c2, c2};
  detail::set_comm(s, 1, 0, c1);
  detail::set_comm(s, 2, 0, c2);
  detail::set_comm(s, 2, 1, c1 | c2);
  return class2_group(s, "H32");
}

/// <x, y, u, v | x^4 = y^4 = [v,u] = 1, x^2 = v^2 = [y,x] = [v,y],
///  y^2 = u^2 = [u,x], x^2 y^2 = [u,y] = [v,x]>.
inline FiniteGroup h245() {
  auto s = detail::class2_blank({"x", "y", "u", "v"}, 2);
  const std::uint32_t c1 = 1, c2 = 2;
  s.squares = {c1, c2, c2, c1};
  detail::set_comm(s, 1, 0, c1);
  detail::set_comm(s, 2, 0, c2);
  detail::set_comm(s, 2, 1, c1 | c2);
  detail::set_comm(s, 3, 0, c1 | c2);
  detail::set_comm(s, 3, 1, c1);
  return class2_group(s, "H245");
}

/// <x, y | x^4 = y^4 = 1, x^2 = [y,x]> centrally joined with Q8 = <i, j>
/// so that i^2 = x^2 y^2.
inline FiniteGroup thm12_iv() {
  auto s = detail::class2_blank({"x", "y", "i", "j"}, 2);
  const std::uint32_t c1 = 1, c2 = 2;
  s.squares = {c1, c2, c1 | c2, c1 | c2};
  detail::set_comm(s, 1, 0, c1);
  detail::set_comm(s, 3, 2, c1 | c2);
  return class2_group(s, "thm12_iv");
}

/// Extraspecial group of order 2^(2m+1): m commuting pairs (x_k, y_k) with
/// [x_k, y_k] = z, and x_1^2 = y_1^2 = z for the quaternion type.
inline FiniteGroup extraspecial_group(unsigned m, bool quaternion_type) {
  detail::require(m >= 1 && m <= 4, "extraspecial rank must be between 1 and 4");
  std::vector<std::string> names;
  for (unsigned k = 1; k <= m; ++k) {
    if (m == 1) {
      names.push_back("x");
      names.push_back("y");
    } else {
      names.push_back("x" + std::to_string(k));
      names.push_back("y" + std::to_string(k));
    }
  }
  auto s = detail::class2_blank(names, 1);
  for (unsigned k = 0; k < m; ++k) detail::set_comm(s, 2 * k + 1, 2 * k, 1);
  if (quaternion_type) s.squares[0] = s.squares[1] = 1;
  return class2_group(s, quaternion_type ? "Q8central(" + std::to_string(m) + ")" : "D8central(" + std::to_string(m) + ")");
}

/// Upper unitriangular 3x3 matrices over GF(p): (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
inline FiniteGroup heisenberg_group(unsigned p) {
  detail::require(is_prime(p) && p * p * p <= default_order_cap, "heisenberg needs a prime p with p^3 <= cap");
  const std::size_t n = std::size_t{p} * p * p;
  auto idx = [p](std::size_t a, std::size_t b, std::size_t c) {
    return static_cast<std::uint32_t>((a % p) + p * ((b % p) + p * (c % p)));
  };
  Permutation px(n), py(n);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c) {
        px[idx(a, b, c)] = idx(a + 1, b, c);
        py[idx(a, b, c)] = idx(a, b + 1, c + a);
      }
  return close_generators(n, {px, py}, {"x", "y"}, default_order_cap, "Heis" + std::to_string(p));
}

/// Nonabelian group of order 27 and exponent 9: <a, b | a^9 = b^3 = 1, a^b = a^4>.
inline FiniteGroup exponent9_order27() { return metacyclic_group(9, 3, 0, 4, "M27", {"a", "b"}); }

inline FiniteGroup q8_x_c4() { return direct_product(quaternion_group(8), cyclic_group(4), "Q8xC4"); }

inline FiniteGroup q8_x_q8() { return direct_product(quaternion_group(8), quaternion_group(8), "Q8xQ8"); }

/// C4 x| Q8 with i acting trivially and j inverting the C4.
inline FiniteGroup c4_sd_q8() {
  const FiniteGroup c4 = cyclic_group(4), q8 = quaternion_group(8);
  std::vector<std::vector<elem_t>> action;
  for (const std::string& gname : q8.generator_names())
    action.push_back(gname == "j" ? inversion_map(c4) : identity_map(c4));
  return semidirect_product(c4, q8, action, "C4sdQ8");
}

/// <x, y | x^4 = y^4 = 1, x^y = x^-1>.
inline FiniteGroup c4_sd_c4() { return metacyclic_group(4, 4, 0, -1, "C4sdC4", {"x", "y"}); }

/// (C2 x C2) x| C4, the generator of C4 swapping the two factors.
inline FiniteGroup c2c2_sd_c4() {
  const FiniteGroup v = abelian_group({2, 2}), c4 = cyclic_group(4);
  // v's generators a, b are elements 1 and 2, ab is 3.
  std::vector<elem_t> swap(4);
  for (std::size_t x = 0; x < 4; ++x) swap[x] = static_cast<elem_t>(x);
  const elem_t a = v.generators()[0], b = v.generators()[1];
  swap[a] = b;
  swap[b] = a;
  return semidirect_product(v, c4, {swap}, "C2xC2sdC4");
}

/// C4 o D8 identifying the involution of C4 with the central involution of D8.
inline FiniteGroup c4_central_d8() {
  const FiniteGroup c4 = cyclic_group(4), d8 = dihedral_group(8);
  const elem_t z1 = c4.pow(c4.generators()[0], 2);
  const elem_t z2 = d8.pow(d8.generators()[0], 2);
  return central_product(c4, d8, {{z1, z2}}, "C4cD8");
}

inline FiniteGroup d8_x_c2() { return direct_product(dihedral_group(8), cyclic_group(2), "D8xC2"); }
inline FiniteGroup q8_x_c2() { return direct_product(quaternion_group(8), cyclic_group(2), "Q8xC2"); }

}  // namespace uul
