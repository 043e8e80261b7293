#pragma once

// The group algebra KG over a prime field K = GF(p), with dense coefficient
// vectors indexed by group elements.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uul/error.hpp"
#include "uul/group.hpp"

namespace uul {

using residue_t = std::uint8_t;

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// GF(p) for a small prime p.
class PrimeField {
 public:
  explicit PrimeField(unsigned p) : p_(p) {
    if (!is_prime(p) || p > 251) throw error(errc::bad_params, "field modulus must be a prime below 256");
  }

  unsigned p() const { return p_; }
  residue_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<residue_t>(r < 0 ? r + p_ : r);
  }
  residue_t add(residue_t a, residue_t b) const { return static_cast<residue_t>((a + b) % p_); }
  residue_t sub(residue_t a, residue_t b) const { return static_cast<residue_t>((a + p_ - b) % p_); }
  residue_t mul(residue_t a, residue_t b) const { return static_cast<residue_t>((unsigned{a} * b) % p_); }
  residue_t neg(residue_t a) const { return static_cast<residue_t>((p_ - a) % p_); }
  residue_t inv(residue_t a) const {
    if (a == 0) throw error(errc::not_a_unit, "zero has no inverse in GF(p)");
    residue_t r = 1;
    for (unsigned e = p_ - 2, b = a; e; e >>= 1, b = (b * b) % p_)
      if (e & 1) r = static_cast<residue_t>((unsigned{r} * b) % p_);
    return r;
  }

  bool operator==(const PrimeField&) const = default;

 private:
  unsigned p_;
};

class AlgebraElement;

/// The algebra KG: a group together with the coefficient field.
class GroupAlgebra {
 public:
  GroupAlgebra(FiniteGroup g, unsigned p) : group_(std::move(g)), field_(p) {
    auto q = p_group_prime(group_);
    modular_ = group_.order() == 1 || (q && *q == p);
  }

  const FiniteGroup& group() const { return group_; }
  const PrimeField& field() const { return field_; }
  unsigned p() const { return field_.p(); }
  std::size_t dimension() const { return group_.order(); }

  /// G is a p-group and char K = p, so the augmentation ideal is nilpotent.
  bool modular() const { return modular_; }

  bool same_as(const GroupAlgebra& other) const {
    return group_.same_as(other.group_) && field_ == other.field_;
  }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement element(elem_t g) const;
  AlgebraElement gbar(elem_t g) const;
  AlgebraElement from_coefficients(std::vector<residue_t> coeffs) const;
  AlgebraElement parse(std::string_view literal) const;

 private:
  FiniteGroup group_;
  PrimeField field_;
  bool modular_ = false;
};

class AlgebraElement {
 public:
  AlgebraElement(GroupAlgebra kg, std::vector<residue_t> coeffs) : kg_(std::move(kg)), c_(std::move(coeffs)) {
    if (c_.size() != kg_.dimension()) throw error(errc::invalid_argument, "coefficient vector has wrong length");
    for (residue_t& r : c_) r = kg_.field().reduce(r);
  }

  const GroupAlgebra& algebra() const { return kg_; }
  const std::vector<residue_t>& coefficients() const { return c_; }
  residue_t operator[](elem_t g) const { return c_[g]; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](residue_t r) { return r == 0; });
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](residue_t r) { return r == 0; });
  }

  bool operator==(const AlgebraElement& o) const { return kg_.same_as(o.kg_) && c_ == o.c_; }

  /// Sum of coefficients.
  residue_t augmentation() const {
    unsigned s = 0;
    for (residue_t r : c_) s += r;
    return static_cast<residue_t>(s % kg_.p());
  }

  /// Elements with nonzero coefficient, ascending.
  std::vector<elem_t> support() const {
    std::vector<elem_t> s;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i]) s.push_back(static_cast<elem_t>(i));
    return s;
  }

  /// Linear extension of g -> g^-1.
  AlgebraElement star() const {
    std::vector<residue_t> out(c_.size());
    const FiniteGroup& g = kg_.group();
    for (std::size_t i = 0; i < c_.size(); ++i) out[g.inv(static_cast<elem_t>(i))] = c_[i];
    return AlgebraElement(kg_, std::move(out), raw_tag{});
  }

  AlgebraElement operator+(const AlgebraElement& o) const {
    check_context(o);
    std::vector<residue_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = kg_.field().add(c_[i], o.c_[i]);
    return AlgebraElement(kg_, std::move(out), raw_tag{});
  }

  AlgebraElement operator-(const AlgebraElement& o) const {
    check_context(o);
    std::vector<residue_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = kg_.field().sub(c_[i], o.c_[i]);
    return AlgebraElement(kg_, std::move(out), raw_tag{});
  }

  AlgebraElement operator-() const {
    std::vector<residue_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = kg_.field().neg(c_[i]);
    return AlgebraElement(kg_, std::move(out), raw_tag{});
  }

  AlgebraElement scaled(residue_t s) const {
    std::vector<residue_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = kg_.field().mul(c_[i], s);
    return AlgebraElement(kg_, std::move(out), raw_tag{});
  }

  /// (ab)_k = sum over gh = k of a_g b_h.
  AlgebraElement operator*(const AlgebraElement& o) const {
    check_context(o);
    const FiniteGroup& g = kg_.group();
    const std::size_t n = c_.size();
    std::vector<elem_t> right;
    right.reserve(n);
    for (std::size_t h = 0; h < n; ++h)
      if (o.c_[h]) right.push_back(static_cast<elem_t>(h));
    std::vector<unsigned> acc(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      const unsigned ax = c_[x];
      if (!ax) continue;
      auto row = g.row(static_cast<elem_t>(x));
      for (elem_t h : right) acc[row[h]] += ax * o.c_[h];
    }
    std::vector<residue_t> out(n);
    const unsigned p = kg_.p();
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<residue_t>(acc[i] % p);
    return AlgebraElement(kg_, std::move(out), raw_tag{});
  }

  /// x * g for a group element g (a permutation of coefficients).
  AlgebraElement times_group_element(elem_t h) const {
    const FiniteGroup& g = kg_.group();
    std::vector<residue_t> out(c_.size());
    for (std::size_t x = 0; x < c_.size(); ++x) out[g.mul(static_cast<elem_t>(x), h)] = c_[x];
    return AlgebraElement(kg_, std::move(out), raw_tag{});
  }

  /// True iff x commutes with the group element h.
  bool commutes_with_group_element(elem_t h) const {
    const FiniteGroup& g = kg_.group();
    const elem_t hi = g.inv(h);
    // (xh)_k = x_{k h^-1}, (hx)_k = x_{h^-1 k}
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[g.mul(static_cast<elem_t>(k), hi)] != c_[g.mul(hi, static_cast<elem_t>(k))]) return false;
    return true;
  }

  /// Central in KG iff it commutes with every generator of G.
  bool is_central() const {
    for (elem_t h : kg_.group().generators())
      if (!commutes_with_group_element(h)) return false;
    return true;
  }

  AlgebraElement power(unsigned k) const {
    AlgebraElement r = kg_.one();
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Literal such as "1 + r + 2*r^2*s" using group element labels.
  std::string to_string() const {
    std::string out;
    const FiniteGroup& g = kg_.group();
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      if (!out.empty()) out += " + ";
      const std::string& label = g.label(static_cast<elem_t>(i));
      if (i == 0) {
        out += std::to_string(c_[i]);
      } else if (c_[i] == 1) {
        out += label;
      } else {
        out += std::to_string(c_[i]) + "*" + label;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  friend class GroupAlgebra;
  struct raw_tag {};
  AlgebraElement(GroupAlgebra kg, std::vector<residue_t> coeffs, raw_tag) : kg_(std::move(kg)), c_(std::move(coeffs)) {}

  void check_context(const AlgebraElement& o) const {
    if (!kg_.same_as(o.kg_)) throw error(errc::mixed_context, "operands belong to different group algebras");
  }

  GroupAlgebra kg_;
  std::vector<residue_t> c_;
};

inline AlgebraElement GroupAlgebra::zero() const {
  return AlgebraElement(*this, std::vector<residue_t>(dimension(), 0), AlgebraElement::raw_tag{});
}

inline AlgebraElement GroupAlgebra::one() const { return element(0); }

inline AlgebraElement GroupAlgebra::element(elem_t g) const {
  if (g >= dimension()) throw error(errc::invalid_argument, "group element out of range");
  std::vector<residue_t> c(dimension(), 0);
  c[g] = 1;
  return AlgebraElement(*this, std::move(c), AlgebraElement::raw_tag{});
}

/// Sum of the distinct powers of g.
inline AlgebraElement GroupAlgebra::gbar(elem_t g) const {
  if (g >= dimension()) throw error(errc::invalid_argument, "group element out of range");
  std::vector<residue_t> c(dimension(), 0);
  elem_t x = 0;
  do {
    c[x] = field_.add(c[x], 1);
    x = group_.mul(x, g);
  } while (x != 0);
  return AlgebraElement(*this, std::move(c), AlgebraElement::raw_tag{});
}

inline AlgebraElement GroupAlgebra::from_coefficients(std::vector<residue_t> coeffs) const {
  return AlgebraElement(*this, std::move(coeffs));
}

// Free-function spellings of the algebra operations.
inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
inline AlgebraElement star(const AlgebraElement& a) { return a.star(); }
inline residue_t augmentation(const AlgebraElement& a) { return a.augmentation(); }
inline std::vector<elem_t> support(const AlgebraElement& a) { return a.support(); }

namespace detail {

/// Solves a * b = 1 by Gaussian elimination over GF(p).
inline std::optional<std::vector<residue_t>> solve_right_inverse(const AlgebraElement& a) {
  const GroupAlgebra& kg = a.algebra();
  const FiniteGroup& g = kg.group();
  const PrimeField& f = kg.field();
  const std::size_t n = g.order();
  // (a b)_k = sum_h a_{k h^-1} b_h
  std::vector<std::vector<residue_t>> m(n, std::vector<residue_t>(n + 1, 0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t h = 0; h < n; ++h) m[k][h] = a[g.mul(static_cast<elem_t>(k), g.inv(static_cast<elem_t>(h)))];
    m[k][n] = k == 0 ? 1 : 0;
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[row]);
    residue_t inv = f.inv(m[row][col]);
    for (std::size_t j = col; j <= n; ++j) m[row][j] = f.mul(m[row][j], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      residue_t factor = m[r][col];
      for (std::size_t j = col; j <= n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[row][j]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row < n) return std::nullopt;
  std::vector<residue_t> b(n, 0);
  for (std::size_t r = 0; r < n; ++r) b[pivot_col[r]] = m[r][n];
  return b;
}

}  // namespace detail

/// Two-sided inverse. In the modular case a = e(1 + x) with x in the
/// augmentation ideal and the inverse is e^-1 * sum_k (-x)^k, which
/// terminates because x is nilpotent. Otherwise a dense linear solve is used.
inline AlgebraElement invert_normalized(const AlgebraElement& a) {
  const GroupAlgebra& kg = a.algebra();
  const PrimeField& f = kg.field();
  const residue_t eps = a.augmentation();
  if (kg.modular()) {
    if (eps == 0) throw error(errc::not_a_unit, "augmentation is zero in a modular group algebra");
    const residue_t eps_inv = f.inv(eps);
    const AlgebraElement neg_x = kg.one() - a.scaled(eps_inv);
    AlgebraElement term = kg.one();
    AlgebraElement sum = kg.one();
    for (std::size_t k = 1; k <= kg.dimension(); ++k) {
      term = term * neg_x;
      if (term.is_zero()) return sum.scaled(eps_inv);
      sum = sum + term;
    }
    throw error(errc::not_a_unit, "geometric series did not terminate");
  }
  auto b = detail::solve_right_inverse(a);
  if (!b) throw error(errc::not_a_unit, a.to_string() + " is not invertible");
  AlgebraElement inv = kg.from_coefficients(std::move(*b));
  if (!(inv * a).is_one()) throw error(errc::not_a_unit, "right inverse is not a left inverse");
  return inv;
}

// ---------------------------------------------------------------------------
// Element literals: sums of terms "c*w" where c is an optional integer and w
// a product of generator names with optional integer exponents, e.g.
// "1 + r + r^2*s", "2*a^-1*b - b".

namespace detail {

class LiteralParser {
 public:
  LiteralParser(const GroupAlgebra& kg, std::string_view text) : kg_(kg), s_(text) {}

  AlgebraElement parse() {
    AlgebraElement total = kg_.zero();
    skip();
    if (i_ == s_.size()) fail("empty literal");
    bool negative = false;
    if (peek('-')) {
      ++i_;
      negative = true;
    } else if (peek('+')) {
      ++i_;
    }
    for (;;) {
      AlgebraElement t = term();
      total = negative ? total - t : total + t;
      skip();
      if (i_ == s_.size()) break;
      if (peek('+')) negative = false;
      else if (peek('-')) negative = true;
      else fail("expected '+' or '-'");
      ++i_;
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw error(errc::parse_error, what + " at offset " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool peek_digit() {
    skip();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  long long integer() {
    skip();
    if (!peek_digit()) fail("expected integer");
    long long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > 1000000000) fail("integer too large");
      ++i_;
    }
    return v;
  }

  AlgebraElement term() {
    residue_t coeff = 1;
    elem_t word = 0;
    bool have_factor = false;
    if (peek_digit()) {
      long long v = integer();
      if (peek('*')) {
        ++i_;
        coeff = kg_.field().reduce(v);
      } else {
        return kg_.one().scaled(kg_.field().reduce(v));
      }
    }
    for (;;) {
      word = kg_.group().mul(word, factor());
      have_factor = true;
      if (!peek('*')) break;
      ++i_;
    }
    if (!have_factor) fail("expected a group element");
    return kg_.element(word).scaled(coeff);
  }

  elem_t factor() {
    skip();
    const FiniteGroup& g = kg_.group();
    if (peek_digit()) {
      long long v = integer();
      if (v != 1) fail("only 1 may appear as a numeric factor");
      return 0;
    }
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\''))
      ++i_;
    if (start == i_) fail("expected a generator name");
    std::string name(s_.substr(start, i_ - start));
    auto gen = g.find_generator(name);
    if (!gen) gen = g.find_label(name);
    if (!gen) fail("unknown element label '" + name + "'");
    long long exponent = 1;
    if (peek('^')) {
      ++i_;
      bool neg = false;
      if (peek('-')) {
        ++i_;
        neg = true;
      }
      exponent = integer();
      if (neg) exponent = -exponent;
    }
    return g.pow(*gen, exponent);
  }

  const GroupAlgebra& kg_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline AlgebraElement GroupAlgebra::parse(std::string_view literal) const {
  return detail::LiteralParser(*this, literal).parse();
}

}  // namespace uul
