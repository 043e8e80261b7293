#pragma once

// Finite groups stored as full multiplication tables.
//
// A FiniteGroup is an immutable handle: copies share the same table, so it is
// cheap to pass around and safe to read from several threads. Element 0 is
// always the identity. Every group carries a generating set with names; the
// human-readable element labels ("r^2*s") are shortest words in those names.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uul/error.hpp"

namespace uul {

using elem_t = std::uint16_t;

inline constexpr std::size_t default_order_cap = 1024;

/// Image of each point 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

inline std::string default_generator_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "g" + std::to_string(i + 1);
}

namespace detail {

inline std::string format_word(const std::vector<std::size_t>& word,
                               const std::vector<std::string>& names) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += '*';
    out += names[word[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace detail

class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup() : FiniteGroup(from_table("1", 1, {0}, {}, {})) {}

  /// Builds a group from a row-major multiplication table. The table must be a
  /// Latin square with element 0 as identity and `generators` must generate
  /// the whole group. Associativity is not checked here (see is_associative).
  static FiniteGroup from_table(std::string name, std::size_t order, std::vector<elem_t> table,
                                std::vector<elem_t> generators,
                                std::vector<std::string> generator_names,
                                std::vector<std::string> labels = {}) {
    if (order == 0 || order > 65535)
      throw error(errc::invalid_argument, "group order out of range");
    if (table.size() != order * order)
      throw error(errc::invalid_argument, "table size does not match order");
    for (std::size_t x = 0; x < order; ++x) {
      if (table[x] != x || table[x * order] != x)
        throw error(errc::invalid_argument, "element 0 is not the identity");
    }
    std::vector<std::uint8_t> seen(order);
    for (std::size_t r = 0; r < order; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t c = 0; c < order; ++c) {
        elem_t v = table[r * order + c];
        if (v >= order || seen[v]++) throw error(errc::invalid_argument, "table is not a Latin square");
      }
    }
    for (std::size_t c = 0; c < order; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t r = 0; r < order; ++r) {
        if (seen[table[r * order + c]]++) throw error(errc::invalid_argument, "table is not a Latin square");
      }
    }
    for (elem_t g : generators)
      if (g >= order) throw error(errc::invalid_argument, "generator index out of range");
    if (generator_names.empty()) {
      for (std::size_t i = 0; i < generators.size(); ++i) generator_names.push_back(default_generator_name(i));
    }
    if (generator_names.size() != generators.size())
      throw error(errc::invalid_argument, "generator name count mismatch");

    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->order = order;
    d->table = std::move(table);
    d->generators = std::move(generators);
    d->generator_names = std::move(generator_names);

    d->inverse.assign(order, 0);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        if (d->table[x * order + y] == 0) {
          d->inverse[x] = static_cast<elem_t>(y);
          break;
        }
      }
    }
    d->element_order.assign(order, 1);
    for (std::size_t x = 1; x < order; ++x) {
      std::uint32_t k = 1;
      elem_t p = static_cast<elem_t>(x);
      while (p != 0) {
        p = d->table[p * order + x];
        ++k;
      }
      d->element_order[x] = k;
    }

    // Shortest words by breadth-first search on the right Cayley graph.
    std::vector<std::vector<std::size_t>> words(order);
    std::vector<std::uint8_t> reached(order, 0);
    reached[0] = 1;
    std::deque<elem_t> queue{0};
    std::size_t count = 1;
    while (!queue.empty()) {
      elem_t e = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < d->generators.size(); ++i) {
        elem_t n = d->table[e * order + d->generators[i]];
        if (!reached[n]) {
          reached[n] = 1;
          ++count;
          words[n] = words[e];
          words[n].push_back(i);
          queue.push_back(n);
        }
      }
    }
    if (count != order) throw error(errc::invalid_argument, "generators do not generate the group");
    if (labels.empty()) {
      labels.resize(order);
      for (std::size_t x = 0; x < order; ++x) labels[x] = detail::format_word(words[x], d->generator_names);
    }
    if (labels.size() != order) throw error(errc::invalid_argument, "label count mismatch");
    d->labels = std::move(labels);
    for (std::size_t x = 0; x < order; ++x) d->label_index.emplace(d->labels[x], static_cast<elem_t>(x));
    return FiniteGroup(std::move(d));
  }

  const std::string& name() const { return d_->name; }
  std::size_t order() const { return d_->order; }
  elem_t identity() const { return 0; }

  elem_t mul(elem_t a, elem_t b) const { return d_->table[a * d_->order + b]; }
  elem_t inv(elem_t a) const { return d_->inverse[a]; }
  std::uint32_t element_order(elem_t a) const { return d_->element_order[a]; }
  bool commute(elem_t a, elem_t b) const { return mul(a, b) == mul(b, a); }

  /// a^k for any integer k.
  elem_t pow(elem_t a, long long k) const {
    const long long n = element_order(a);
    k %= n;
    if (k < 0) k += n;
    elem_t r = 0;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  /// a^-1 b^-1 a b
  elem_t commutator(elem_t a, elem_t b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  /// b^-1 a b
  elem_t conjugate(elem_t a, elem_t b) const { return mul(mul(inv(b), a), b); }

  const std::vector<elem_t>& generators() const { return d_->generators; }
  const std::vector<std::string>& generator_names() const { return d_->generator_names; }
  const std::string& label(elem_t a) const { return d_->labels[a]; }
  const std::vector<std::string>& labels() const { return d_->labels; }

  std::optional<elem_t> find_label(std::string_view label) const {
    auto it = d_->label_index.find(std::string(label));
    if (it == d_->label_index.end()) return std::nullopt;
    return it->second;
  }

  std::optional<elem_t> find_generator(std::string_view name) const {
    for (std::size_t i = 0; i < d_->generator_names.size(); ++i)
      if (d_->generator_names[i] == name) return d_->generators[i];
    return std::nullopt;
  }

  std::span<const elem_t> row(elem_t a) const {
    return std::span<const elem_t>(d_->table.data() + a * d_->order, d_->order);
  }
  const std::vector<elem_t>& table() const { return d_->table; }

  FiniteGroup renamed(std::string name) const {
    auto d = std::make_shared<Data>(*d_);
    d->name = std::move(name);
    return FiniteGroup(std::move(d));
  }

  /// True when both handles share one table.
  bool same_as(const FiniteGroup& other) const { return d_ == other.d_; }

 private:
  struct Data {
    std::string name;
    std::size_t order = 0;
    std::vector<elem_t> table;
    std::vector<elem_t> inverse;
    std::vector<std::uint32_t> element_order;
    std::vector<elem_t> generators;
    std::vector<std::string> generator_names;
    std::vector<std::string> labels;
    std::unordered_map<std::string, elem_t> label_index;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

/// Index mapping between two groups; images[i] is the image of element i.
struct GroupMap {
  std::vector<elem_t> images;

  elem_t operator()(elem_t a) const { return images[a]; }
  bool operator==(const GroupMap&) const = default;
};

inline bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupMap& map) {
  if (map.images.size() != src.order()) return false;
  for (elem_t x : map.images)
    if (x >= dst.order()) return false;
  if (map(0) != 0) return false;
  for (std::size_t a = 0; a < src.order(); ++a)
    for (std::size_t b = 0; b < src.order(); ++b)
      if (map(src.mul(a, b)) != dst.mul(map(a), map(b))) return false;
  return true;
}

inline bool is_bijective(const FiniteGroup& src, const FiniteGroup& dst, const GroupMap& map) {
  if (src.order() != dst.order() || map.images.size() != src.order()) return false;
  std::vector<std::uint8_t> hit(dst.order(), 0);
  for (elem_t x : map.images) {
    if (x >= dst.order() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

/// Exhaustive O(n^3) check.
inline bool is_associative(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const elem_t ab = g.mul(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
    }
  return true;
}

inline bool is_latin_square(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c)
      if (seen[g.mul(r, c)]++) return false;
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c)
      if (seen[g.mul(c, r)]++) return false;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Permutations

/// Composition acting on the right: x^(p*q) = (x^p)^q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

inline Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline bool is_bijection(const Permutation& p) {
  std::vector<std::uint8_t> hit(p.size(), 0);
  for (auto x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

/// Parses cycle notation such as "(0 1 2 3)(4 5)" or "()" on the given degree.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  std::vector<std::uint8_t> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw error(errc::parse_error, "empty cycle notation");
  while (i < text.size()) {
    if (text[i] != '(') throw error(errc::parse_error, "expected '(' in cycle notation");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i == text.size()) throw error(errc::parse_error, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw error(errc::parse_error, "bad point in cycle");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 1u << 20) throw error(errc::parse_error, "point too large");
        ++i;
      }
      if (v >= degree) throw error(errc::not_permutation, "point " + std::to_string(v) + " outside degree");
      if (used[v]) throw error(errc::not_permutation, "point " + std::to_string(v) + " repeated");
      used[v] = 1;
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<std::uint8_t> done(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == s) continue;
    out += '(';
    std::size_t x = s;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace detail {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

/// Closes a set of permutations under composition and flattens the result to
/// a multiplication table. Element 0 is the identity; elements appear in
/// breadth-first order of right multiplication by the generators, so the i-th
/// distinct non-identity generator becomes element i when no earlier product
/// coincides with it.
inline FiniteGroup close_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                    std::vector<std::string> names = {},
                                    std::size_t cap = default_order_cap, std::string group_name = "") {
  if (degree == 0) throw error(errc::not_permutation, "degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != degree || !is_bijection(g)) throw error(errc::not_permutation, "generator is not a bijection");
  }
  if (names.empty())
    for (std::size_t i = 0; i < generators.size(); ++i) names.push_back(default_generator_name(i));
  if (names.size() != generators.size()) throw error(errc::invalid_argument, "generator name count mismatch");

  std::vector<Permutation> elems{identity_permutation(degree)};
  std::unordered_map<Permutation, elem_t, detail::PermutationHash> index;
  index.emplace(elems[0], 0);
  std::vector<std::vector<elem_t>> right;  // right[e][i] = e * gen_i
  std::vector<std::pair<elem_t, std::size_t>> parent{{0, 0}};

  for (std::size_t e = 0; e < elems.size(); ++e) {
    right.emplace_back(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Permutation n = compose(elems[e], generators[i]);
      auto it = index.find(n);
      if (it == index.end()) {
        if (elems.size() >= cap)
          throw error(errc::exceeds_cap, "closure exceeds order cap " + std::to_string(cap));
        elem_t id = static_cast<elem_t>(elems.size());
        index.emplace(n, id);
        elems.push_back(std::move(n));
        parent.emplace_back(static_cast<elem_t>(e), i);
        right[e][i] = id;
      } else {
        right[e][i] = it->second;
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<elem_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) table[a * n] = static_cast<elem_t>(a);
  for (std::size_t b = 1; b < n; ++b) {
    auto [pb, gi] = parent[b];
    for (std::size_t a = 0; a < n; ++a) table[a * n + b] = right[table[a * n + pb]][gi];
  }

  std::vector<elem_t> gens;
  for (const auto& g : generators) gens.push_back(index.at(g));
  return FiniteGroup::from_table(std::move(group_name), n, std::move(table), std::move(gens), std::move(names));
}

/// Right-regular permutation of each generator (degree = order).
inline std::vector<Permutation> regular_generators(const FiniteGroup& g) {
  std::vector<Permutation> out;
  for (elem_t x : g.generators()) {
    Permutation p(g.order());
    for (std::size_t e = 0; e < g.order(); ++e) p[e] = g.mul(static_cast<elem_t>(e), x);
    out.push_back(std::move(p));
  }
  return out;
}

/// Number of elements of each order, keyed by order.
inline std::map<std::uint32_t, std::size_t> order_census(const FiniteGroup& g) {
  std::map<std::uint32_t, std::size_t> census;
  for (std::size_t x = 0; x < g.order(); ++x) ++census[g.element_order(static_cast<elem_t>(x))];
  return census;
}

inline bool is_abelian(const FiniteGroup& g) {
  for (elem_t a : g.generators())
    for (elem_t b : g.generators())
      if (!g.commute(a, b)) return false;
  return true;
}

/// The prime p when |G| is a power of p; nullopt otherwise (and for |G| = 1).
inline std::optional<unsigned> p_group_prime(const FiniteGroup& g) {
  std::size_t n = g.order();
  if (n == 1) return std::nullopt;
  unsigned p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

inline bool is_p_group(const FiniteGroup& g) { return g.order() == 1 || p_group_prime(g).has_value(); }

inline bool is_2_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  return (n & (n - 1)) == 0;
}

}  // namespace uul
