#pragma once

// Bicyclic units u_{g,h} = 1 + (g-1) h gbar(g) and the structural test for
// their unitarity: char 2, h normalizes <g^2>, and <g^2> contains h^2 or (hg)^2.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uul/algebra.hpp"
#include "uul/error.hpp"
#include "uul/parallel.hpp"
#include "uul/report.hpp"
#include "uul/units.hpp"

namespace uul {

struct BicyclicSpec {
  elem_t g = 0;
  elem_t h = 0;
  bool operator==(const BicyclicSpec&) const = default;
};

inline AlgebraElement bicyclic_unit(const GroupAlgebra& kg, BicyclicSpec s) {
  const AlgebraElement n = (kg.element(s.g) - kg.one()) * kg.element(s.h) * kg.gbar(s.g);
  return kg.one() + n;
}

/// 1 - (g-1) h gbar(g).
inline AlgebraElement bicyclic_inverse_formula(const GroupAlgebra& kg, BicyclicSpec s) {
  const AlgebraElement n = (kg.element(s.g) - kg.one()) * kg.element(s.h) * kg.gbar(s.g);
  return kg.one() - n;
}

/// 1 + gbar(g) h^-1 (g^-1 - 1).
inline AlgebraElement bicyclic_star_formula(const GroupAlgebra& kg, BicyclicSpec s) {
  const FiniteGroup& G = kg.group();
  return kg.one() + kg.gbar(s.g) * kg.element(G.inv(s.h)) * (kg.element(G.inv(s.g)) - kg.one());
}

namespace detail {

/// Powers of g as a membership mask.
inline std::vector<char> cyclic_mask(const FiniteGroup& G, elem_t g) {
  std::vector<char> m(G.order(), 0);
  elem_t x = 0;
  do {
    m[x] = 1;
    x = G.mul(x, g);
  } while (x != 0);
  return m;
}

/// Per-g data shared by all h in a pair sweep.
struct PairCriterionRow {
  const FiniteGroup& G;
  unsigned p;
  elem_t g;
  std::vector<char> cyc;      // <g>
  std::vector<char> cyc_sq;   // <g^2>
  elem_t g2;

  PairCriterionRow(const FiniteGroup& group, unsigned prime, elem_t gg)
      : G(group), p(prime), g(gg), cyc(cyclic_mask(group, gg)), g2(group.mul(gg, gg)) {
    cyc_sq = cyclic_mask(group, g2);
  }

  bool normalizer_case(elem_t h) const { return cyc[G.conjugate(g, h)] != 0; }

  /// Criterion outside the normalizer case.
  bool criterion(elem_t h) const {
    if (p != 2) return false;
    if (!cyc_sq[G.conjugate(g2, h)]) return false;
    return cyc_sq[G.mul(h, h)] || cyc_sq[G.pow(G.mul(h, g), 2)];
  }

  /// Predicted unitarity with the normalizer case counted as unitary.
  bool predicted_unitary(elem_t h) const { return normalizer_case(h) || criterion(h); }
};

}  // namespace detail

/// True iff the characteristic is 2, h normalizes <g^2>, and <g^2> contains
/// h^2 or (hg)^2. Throws normalizer_case when h normalizes <g>.
inline bool lemma13_predicate(const FiniteGroup& G, unsigned p, BicyclicSpec s) {
  detail::PairCriterionRow row(G, p, s.g);
  if (row.normalizer_case(s.h))
    throw error(errc::normalizer_case, "h normalizes <g>, so u_{g,h} = 1");
  return row.criterion(s.h);
}

/// Unitarity of u_{g,h} computed directly: u* == u^-1.
inline bool bicyclic_unitary_direct(const GroupAlgebra& kg, BicyclicSpec s) {
  return is_unitary(bicyclic_unit(kg, s));
}

inline std::string pair_label(const FiniteGroup& G, BicyclicSpec s) {
  return "(" + G.label(s.g) + ", " + G.label(s.h) + ")";
}

/// Sweeps every pair (g,h) comparing direct unitarity with the criterion.
inline VerificationReport verify_lemma13(const GroupAlgebra& kg) {
  const FiniteGroup& G = kg.group();
  const std::size_t n = G.order();
  VerificationReport r;
  r.claim = "lemma1.3";
  r.group = G.name();
  r.p = kg.p();
  r.mode = "exhaustive";
  ReportTimer timer(r);

  struct RowStats {
    std::uint64_t agree = 0, normalizer = 0, unitary = 0;
    std::optional<elem_t> first_disagreement;
  };
  auto rows = parallel_map(n, [&](std::size_t gi) {
    RowStats st;
    const detail::PairCriterionRow row(G, kg.p(), static_cast<elem_t>(gi));
    for (std::size_t hi = 0; hi < n; ++hi) {
      const BicyclicSpec s{static_cast<elem_t>(gi), static_cast<elem_t>(hi)};
      const bool direct = bicyclic_unitary_direct(kg, s);
      const bool norm = row.normalizer_case(s.h);
      const bool predicted = norm || row.criterion(s.h);
      st.normalizer += norm;
      st.unitary += direct;
      if (direct == predicted) ++st.agree;
      else if (!st.first_disagreement) st.first_disagreement = s.h;
    }
    return st;
  });

  std::uint64_t agree = 0, normalizer = 0, unitary = 0;
  for (std::size_t gi = 0; gi < n; ++gi) {
    agree += rows[gi].agree;
    normalizer += rows[gi].normalizer;
    unitary += rows[gi].unitary;
    if (r.witness.empty() && rows[gi].first_disagreement) {
      const BicyclicSpec s{static_cast<elem_t>(gi), *rows[gi].first_disagreement};
      r.witness = {G.label(s.g), G.label(s.h)};
    }
  }
  r.checked_count = static_cast<std::uint64_t>(n) * n;
  r.pass = agree == r.checked_count;
  r.details["pairs"] = r.checked_count;
  r.details["agree"] = agree;
  r.details["normalizer_pairs"] = normalizer;
  r.details["unitary_pairs"] = unitary;
  r.details["non_unitary_pairs"] = r.checked_count - unitary;
  return r;
}

struct BicyclicSweep {
  bool all_unitary = true;
  std::optional<BicyclicSpec> witness;  // least failing (g,h) by index
  std::uint64_t cross_checked = 0;
};

/// Decides whether every bicyclic unit is unitary using the structural
/// criterion, then recomputes `cross_check` random pairs directly (every
/// pair when |G|^2 is smaller). A disagreement is an implementation bug and
/// throws implementation_mismatch.
inline BicyclicSweep all_bicyclic_unitary(const GroupAlgebra& kg, std::uint64_t cross_check = 256,
                                          std::uint64_t seed = 1) {
  const FiniteGroup& G = kg.group();
  const std::uint64_t n = G.order();
  BicyclicSweep out;

  auto bad = find_least_failure(n * n, [&](std::uint64_t i) {
    const detail::PairCriterionRow row(G, kg.p(), static_cast<elem_t>(i / n));
    return row.predicted_unitary(static_cast<elem_t>(i % n));
  });
  if (bad) {
    out.all_unitary = false;
    out.witness = BicyclicSpec{static_cast<elem_t>(*bad / n), static_cast<elem_t>(*bad % n)};
  }

  auto check = [&](BicyclicSpec s) {
    const detail::PairCriterionRow row(G, kg.p(), s.g);
    if (row.predicted_unitary(s.h) != bicyclic_unitary_direct(kg, s))
      throw error(errc::implementation_mismatch,
                  "criterion and direct computation disagree on " + pair_label(G, s) + " in " + G.name());
    ++out.cross_checked;
  };
  if (n * n <= cross_check) {
    for (std::uint64_t i = 0; i < n * n; ++i) check({static_cast<elem_t>(i / n), static_cast<elem_t>(i % n)});
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < cross_check; ++k) {
      const std::uint64_t i = rng() % (n * n);
      check({static_cast<elem_t>(i / n), static_cast<elem_t>(i % n)});
    }
  }
  if (out.witness) check(*out.witness);
  return out;
}

}  // namespace uul
