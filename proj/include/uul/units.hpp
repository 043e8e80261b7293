#pragma once

// Normalized units V(KG), unitary units V*(KG), and the normality question
// for V* inside V, decided through the centrality of x x*.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uul/algebra.hpp"
#include "uul/error.hpp"
#include "uul/parallel.hpp"
#include "uul/report.hpp"

namespace uul {

enum class sweep_mode { exhaustive, sample };

inline const char* to_string(sweep_mode m) { return m == sweep_mode::exhaustive ? "exhaustive" : "sample"; }

struct UnitSweepConfig {
  sweep_mode mode = sweep_mode::exhaustive;
  std::uint64_t sample_count = 10000;
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 24;
};

/// p^k, or nullopt once it exceeds 2^62.
inline std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 62) / p) return std::nullopt;
    r *= p;
  }
  return r;
}

/// |V(KG)| = p^(|G|-1) in the modular case.
inline std::optional<std::uint64_t> normalized_unit_count(const GroupAlgebra& kg) {
  return checked_power(kg.p(), kg.dimension() - 1);
}

namespace detail {

inline void require_modular(const GroupAlgebra& kg) {
  if (!kg.modular())
    throw error(errc::invalid_argument,
                "normalized units are enumerated only for p-groups over GF(p) with the same p");
}

inline std::uint64_t exhaustive_total(const GroupAlgebra& kg, std::uint64_t cap) {
  auto total = normalized_unit_count(kg);
  if (!total || *total > cap)
    throw error(errc::too_large, "exhaustive sweep over " + std::to_string(kg.p()) + "^" +
                                     std::to_string(kg.dimension() - 1) + " units exceeds the cap " +
                                     std::to_string(cap));
  return *total;
}

}  // namespace detail

/// The index-th normalized unit: base-p digits of `index` give the
/// coefficients of elements 1..n-1 and the identity coefficient makes the
/// augmentation 1. Indices 0..p^(n-1)-1 cover V(KG) exactly once.
inline AlgebraElement normalized_unit(const GroupAlgebra& kg, std::uint64_t index) {
  const unsigned p = kg.p();
  std::vector<residue_t> c(kg.dimension(), 0);
  unsigned sum = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    c[i] = static_cast<residue_t>(index % p);
    sum += c[i];
    index /= p;
  }
  c[0] = kg.field().sub(1, static_cast<residue_t>(sum % p));
  return kg.from_coefficients(std::move(c));
}

/// Uniform random normalized unit. Uses raw mt19937_64 output so sequences are
/// identical across standard libraries.
inline AlgebraElement random_normalized_unit(const GroupAlgebra& kg, std::mt19937_64& rng) {
  std::vector<residue_t> c(kg.dimension(), 0);
  unsigned sum = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    c[i] = static_cast<residue_t>(rng() % kg.p());
    sum += c[i];
  }
  c[0] = kg.field().sub(1, static_cast<residue_t>(sum % kg.p()));
  return kg.from_coefficients(std::move(c));
}

/// Every normalized unit exactly once, in index order.
class NormalizedUnits {
 public:
  class iterator {
   public:
    using value_type = AlgebraElement;
    using difference_type = std::ptrdiff_t;
    iterator(const GroupAlgebra* kg, std::uint64_t i) : kg_(kg), i_(i) {}
    AlgebraElement operator*() const { return normalized_unit(*kg_, i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const GroupAlgebra* kg_;
    std::uint64_t i_;
  };

  NormalizedUnits(GroupAlgebra kg, std::uint64_t cap) : kg_(std::move(kg)) {
    detail::require_modular(kg_);
    total_ = detail::exhaustive_total(kg_, cap);
  }

  std::uint64_t size() const { return total_; }
  iterator begin() const { return {&kg_, 0}; }
  iterator end() const { return {&kg_, total_}; }

 private:
  GroupAlgebra kg_;
  std::uint64_t total_ = 0;
};

inline NormalizedUnits enumerate_normalized_units(const GroupAlgebra& kg,
                                                  std::uint64_t cap = std::uint64_t{1} << 24) {
  return NormalizedUnits(kg, cap);
}

/// u* = u^-1.
inline bool is_unitary(const AlgebraElement& u) { return u.star() == invert_normalized(u); }

/// Same test as is_unitary for a known unit, without inverting: u u* = 1.
inline bool is_unitary_unit(const AlgebraElement& u) { return (u * u.star()).is_one(); }

namespace detail {

/// First generator of G not commuting with x x*, if any.
inline std::optional<elem_t> noncentral_witness(const AlgebraElement& x) {
  const AlgebraElement w = x * x.star();
  for (elem_t g : x.algebra().group().generators())
    if (!w.commutes_with_group_element(g)) return g;
  return std::nullopt;
}

/// Fills the failure witness: x, the group element y that x x* fails to
/// commute with, and x^-1 y x, which must then fail to be unitary.
inline void attach_normality_witness(VerificationReport& r, const AlgebraElement& x, elem_t y) {
  const GroupAlgebra& kg = x.algebra();
  const AlgebraElement conj = invert_normalized(x) * kg.element(y) * x;
  if (is_unitary(conj))
    throw error(errc::implementation_mismatch,
                "x x* fails to commute with y but x^-1 y x is unitary; contradicts the commutation criterion");
  r.witness = {x.to_string(), kg.group().label(y), conj.to_string()};
  r.details["witness_roles"] = {"x", "y", "x^-1*y*x"};
  r.details["conjugate_unitary"] = false;
}

}  // namespace detail

/// Decides whether V*(KG) is normal in V(KG) by testing that x x* is central
/// for every normalized unit x (exhaustive) or for sampled units.
inline VerificationReport check_vstar_normality(const GroupAlgebra& kg, const UnitSweepConfig& cfg) {
  detail::require_modular(kg);
  VerificationReport r;
  r.claim = "vstar-normal";
  r.group = kg.group().name();
  r.p = kg.p();
  r.mode = to_string(cfg.mode);
  ReportTimer timer(r);

  if (cfg.mode == sweep_mode::exhaustive) {
    const std::uint64_t total = detail::exhaustive_total(kg, cfg.exhaustive_cap);
    r.details["units_total"] = total;
    auto bad = find_least_failure(total, [&](std::uint64_t i) {
      return !detail::noncentral_witness(normalized_unit(kg, i)).has_value();
    });
    if (!bad) {
      r.pass = true;
      r.checked_count = total;
    } else {
      r.pass = false;
      r.checked_count = *bad + 1;
      const AlgebraElement x = normalized_unit(kg, *bad);
      detail::attach_normality_witness(r, x, *detail::noncentral_witness(x));
    }
    return r;
  }

  r.seed = cfg.seed;
  std::mt19937_64 rng(cfg.seed);
  r.pass = true;
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
    const AlgebraElement x = random_normalized_unit(kg, rng);
    r.checked_count = i + 1;
    if (auto y = detail::noncentral_witness(x)) {
      r.pass = false;
      r.details["sample_index"] = i;
      detail::attach_normality_witness(r, x, *y);
      break;
    }
  }
  return r;
}

/// All unitary normalized units, in enumeration order.
inline std::vector<AlgebraElement> unitary_units(const GroupAlgebra& kg, std::uint64_t cap = std::uint64_t{1} << 24) {
  std::vector<AlgebraElement> out;
  for (AlgebraElement u : enumerate_normalized_units(kg, cap))
    if (is_unitary_unit(u)) out.push_back(std::move(u));
  return out;
}

/// Normality straight from the definition: x^-1 y x is unitary for every
/// x in V and y in V*. Quadratic in |V|, so only for tiny groups.
inline VerificationReport check_vstar_normality_by_definition(const GroupAlgebra& kg,
                                                              std::uint64_t cap = std::uint64_t{1} << 16) {
  detail::require_modular(kg);
  VerificationReport r;
  r.claim = "vstar-normal-by-definition";
  r.group = kg.group().name();
  r.p = kg.p();
  r.mode = "exhaustive";
  ReportTimer timer(r);
  const std::vector<AlgebraElement> vstar = unitary_units(kg, cap);
  r.details["unitary_count"] = vstar.size();
  r.pass = true;
  for (AlgebraElement x : enumerate_normalized_units(kg, cap)) {
    const AlgebraElement xi = invert_normalized(x);
    for (const AlgebraElement& y : vstar) {
      ++r.checked_count;
      const AlgebraElement c = xi * y * x;
      if (!is_unitary_unit(c)) {
        r.pass = false;
        r.witness = {x.to_string(), y.to_string(), c.to_string()};
        r.details["witness_roles"] = {"x", "y", "x^-1*y*x"};
        return r;
      }
    }
  }
  return r;
}

}  // namespace uul
