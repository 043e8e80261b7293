#include <set>

#include <gtest/gtest.h>

#include "../oracle.hpp"
#include "test_support.hpp"

using namespace uul;

namespace {

std::vector<CatalogEntry> two_groups_upto(std::size_t n) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog_entries())
    if (is_2_group(e.group) && e.group.order() <= n) out.push_back(e);
  return out;
}

/// Semidirect product <x> x| <y> with |x| >= |y| = 4 and x^y = x^-1.
bool inverted_cyclic_by_c4(const FiniteGroup& k) {
  for (std::size_t xi = 0; xi < k.order(); ++xi)
    for (std::size_t yi = 0; yi < k.order(); ++yi) {
      const elem_t x = static_cast<elem_t>(xi), y = static_cast<elem_t>(yi);
      if (k.element_order(y) != 4 || k.element_order(x) < 4) continue;
      if (oracle::conj(k, x, y) != oracle::inverse(k, x)) continue;
      auto sx = oracle::span(k, {x}), sy = oracle::span(k, {y});
      std::vector<elem_t> meet;
      std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(meet));
      if (meet.size() != 1) continue;
      if (oracle::span(k, {x, y}).size() == k.order()) return true;
    }
  return false;
}

}  // namespace

TEST(Good, Examples) {
  EXPECT_TRUE(is_good(dihedral_group(16)).good);
  EXPECT_TRUE(is_good(quaternion_group(16)).good);
  GoodResult sd = is_good(semidihedral_group(16));
  EXPECT_FALSE(sd.good);
  EXPECT_TRUE(sd.witness.has_value());
  EXPECT_FALSE(is_good(builtin("C2xC2sdC4")).good);
  EXPECT_UUL_ERROR(is_good(cyclic_group(3)), errc::not_2_group);
}

TEST(Good, MatchesClosedFormOracle) {
  for (const auto& e : two_groups_upto(64)) {
    GoodResult r = is_good(e.group);
    EXPECT_EQ(r.good, oracle::good(e.group)) << e.name;
    if (!r.good) {
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_FALSE(oracle::good_pair(e.group, r.witness->first, r.witness->second)) << e.name;
    }
  }
}

TEST(Good, FamiliesPAndR) {
  for (unsigned k = 1; k <= 4; ++k) {
    EXPECT_EQ(is_good(p_family(k)).good, k <= 1) << "P" << k;
    EXPECT_EQ(is_good(r_family(k)).good, k <= 1) << "R" << k;
  }
}

TEST(Good, ThreeBadGroupsOfOrder16) {
  std::set<std::string> bad;
  for (const auto& e : stratum(16))
    if (!is_abelian(e.group) && !is_good(e.group).good) bad.insert(e.name);
  EXPECT_EQ(bad, (std::set<std::string>{"C2xC2sdC4", "M16", "SD16"}));
}

TEST(Good, TwoGeneratorCharacterisation) {
  std::set<std::vector<elem_t>> seen;
  for (const auto& e : two_groups_upto(32)) {
    const FiniteGroup& G = e.group;
    seen.clear();
    for (std::size_t g = 0; g < G.order(); ++g)
      for (std::size_t h = g + 1; h < G.order(); ++h) {
        Subgroup k = generated_subgroup(G, {static_cast<elem_t>(g), static_cast<elem_t>(h)});
        if (!seen.insert(k.members()).second) continue;
        FiniteGroup kg = as_group(k).group;
        const bool listed = is_abelian(kg) || is_dihedral(kg) || is_generalized_quaternion(kg) ||
                            inverted_cyclic_by_c4(kg);
        EXPECT_EQ(is_good(kg).good, listed) << e.name << " <" << G.label(g) << "," << G.label(h) << ">";
      }
  }
}

TEST(Good, ExponentFourFrattiniIsElementaryCentral) {
  for (const auto& e : two_groups_upto(64)) {
    const FiniteGroup& G = e.group;
    auto c = order_census(G);
    if (c.rbegin()->first != 4 || !is_good(G).good) continue;
    FiniteGroup phi = as_group(frattini_subgroup(G)).group;
    EXPECT_TRUE(is_elementary_abelian_2(phi)) << e.name;
    EXPECT_TRUE(frattini_subgroup(G).is_subset_of(center(G))) << e.name;
  }
}

TEST(Classify, NormalityClassExamples) {
  ClassVerdict d8 = classify_theorem11(dihedral_group(8));
  EXPECT_TRUE(d8.in_class);
  EXPECT_TRUE(d8.has(condition::thm11_i));
  EXPECT_TRUE(d8.has(condition::thm11_ii));
  ClassVerdict q8 = classify_theorem11(quaternion_group(8));
  EXPECT_TRUE(q8.in_class);
  EXPECT_EQ(q8.condition_names(), std::vector<std::string>{"thm11.ii"});
  EXPECT_FALSE(classify_theorem11(builtin("C4sdC4")).in_class);
  EXPECT_FALSE(classify_theorem11(builtin("modular16")).in_class);
  EXPECT_TRUE(classify_theorem11(builtin("C4xC4")).abelian);
  EXPECT_UUL_ERROR(classify_theorem11(builtin("heisenberg(3)")), errc::not_2_group);
}

TEST(Classify, BicyclicClassExamples) {
  ClassVerdict c4c4 = classify_theorem12(builtin("C4sdC4"));
  EXPECT_TRUE(c4c4.in_class);
  EXPECT_EQ(c4c4.condition_names(), std::vector<std::string>{"thm12.i"});
  EXPECT_TRUE(classify_theorem12(builtin("Q8xQ8")).has(condition::thm12_iii));
  EXPECT_TRUE(classify_theorem12(builtin("Q8xC4")).has(condition::thm12_iii));
  EXPECT_TRUE(classify_theorem12(builtin("thm12_iv")).has(condition::thm12_iv));
  EXPECT_TRUE(classify_theorem12(builtin("H32")).has(condition::thm12_v));
  EXPECT_TRUE(classify_theorem12(builtin("H245")).has(condition::thm12_v));
  ClassVerdict m16 = classify_theorem12(builtin("modular16"));
  EXPECT_FALSE(m16.in_class);
  EXPECT_TRUE(m16.witness.has_value());
  EXPECT_FALSE(all_bicyclic_unitary(GroupAlgebra(builtin("modular16"), 2)).all_unitary);
}

TEST(Classify, DirectFactorIsSplitOff) {
  // D8 x C2 x C2 reduces to D8
  FiniteGroup g = direct_product(builtin("D8xC2"), cyclic_group(2));
  ClassVerdict v = classify_theorem11(g);
  EXPECT_TRUE(v.in_class);
  EXPECT_EQ(v.split.e.size(), 4u);
  EXPECT_EQ(v.split.h.size(), 8u);
}

TEST(Classify, ConditionTwoMatchesReferenceCentralProducts) {
  // C4 o D8 and C4 o Q8 are the same group and satisfy condition (ii)
  EXPECT_TRUE(satisfies_condition_ii(builtin("C4cD8")));
  EXPECT_TRUE(satisfies_condition_ii(builtin("extraspecial_Q8central(2)")));
  EXPECT_TRUE(satisfies_condition_ii(builtin("extraspecial_D8central(2)")));
  FiniteGroup c4 = cyclic_group(4), e32 = builtin("extraspecial_D8central(2)");
  FiniteGroup big = central_product(c4, e32, {{*c4.find_label("a^2"), *center(e32).members().rbegin()}});
  EXPECT_TRUE(satisfies_condition_ii(big));
  EXPECT_FALSE(satisfies_condition_ii(builtin("Q8xC4")));
  EXPECT_FALSE(satisfies_condition_ii(builtin("C4sdC4")));
}

TEST(Classify, FilterExamples) {
  EXPECT_TRUE(lemma41_filter(builtin("C4xC4")));
  EXPECT_TRUE(lemma41_filter(builtin("H245")));
  EXPECT_FALSE(lemma41_filter(dihedral_group(8)));
  for (const char* n : {"C4xC4", "C4sdC4", "C4sdQ8", "Q8xC4", "Q8xQ8", "thm12_iv", "H32", "H245"})
    EXPECT_TRUE(lemma41_filter(builtin(n))) << n;
}

TEST(Classify, FilterScanOrder16) {
  std::set<std::string> hits;
  for (const auto& e : stratum(16))
    if (lemma41_filter(e.group)) hits.insert(e.name);
  EXPECT_EQ(hits, (std::set<std::string>{"C4xC4", "C4sdC4"}));
}

TEST(Classify, OrderBoundExamples) {
  OrderBoundCheck q8 = lemma414_check(quaternion_group(8));
  EXPECT_TRUE(q8.applicable);
  EXPECT_EQ(q8.n, 1u);
  EXPECT_EQ(q8.bound, 8u);
  EXPECT_TRUE(q8.holds);
  OrderBoundCheck qq = lemma414_check(builtin("Q8xQ8"));
  EXPECT_TRUE(qq.applicable);
  EXPECT_EQ(qq.n, 2u);
  EXPECT_EQ(qq.bound, 128u);
  OrderBoundCheck v4 = lemma414_check(elementary_abelian_group(2));
  EXPECT_TRUE(v4.applicable && v4.holds);
  EXPECT_EQ(v4.n, 2u);
  EXPECT_FALSE(lemma414_check(dihedral_group(8)).applicable);
}

TEST(Classify, OrderBoundHoldsOnCatalog) {
  for (const auto& e : two_groups_upto(64)) {
    OrderBoundCheck c = lemma414_check(e.group);
    if (c.applicable) { EXPECT_TRUE(c.holds) << e.name; }
  }
}

TEST(NormalAlgebra, Examples) {
  UnitSweepConfig ex;
  ex.mode = sweep_mode::exhaustive;
  EXPECT_TRUE(is_normal_group_algebra(GroupAlgebra(dihedral_group(8), 2), ex).pass);
  VerificationReport sd = is_normal_group_algebra(GroupAlgebra(semidihedral_group(16), 2), ex);
  EXPECT_FALSE(sd.pass);
  ASSERT_EQ(sd.witness.size(), 3u);
  GroupAlgebra ksd(semidihedral_group(16), 2);
  AlgebraElement x = ksd.parse(sd.witness[0]);
  EXPECT_NE(x * x.star(), x.star() * x);
  for (std::size_t r = 0; r <= 3; ++r)
    EXPECT_TRUE(is_normal_group_algebra(GroupAlgebra(elementary_abelian_group(r), 2), ex).pass);
  EXPECT_UUL_ERROR(is_normal_group_algebra(GroupAlgebra(builtin("Q8xC4"), 2), ex), errc::too_large);
}
