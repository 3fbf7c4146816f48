#include <gtest/gtest.h>

#include <bit>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "support/brute_force.hpp"
#include "wfact/assembly.hpp"
#include "wfact/oracle.hpp"

using namespace wfact;

TEST(Oracle, TablesOfSmallGroups) {
  auto t = build_tables(GroupParams(2, 2, 2));
  EXPECT_EQ(t.elements.size(), 4u);
  EXPECT_EQ(t.subgroups.subgroups.size(), 4u);
  t = build_tables(GroupParams(1, 1, 3));
  EXPECT_EQ(t.elements.size(), 6u);
  EXPECT_EQ(t.subgroups.subgroups.size(), 5u);
  t = build_tables(GroupParams(1, 1, 2));
  EXPECT_EQ(t.elements.size(), 2u);
  EXPECT_EQ(t.subgroups.subgroups.size(), 2u);
  EXPECT_EQ(t.elements.elements.front(), identity_element(2));
}

TEST(Oracle, RightMultiplicationMatchesGroupLaw) {
  GroupParams g(3, 1, 3);
  auto t = build_element_table(g);
  std::mt19937 rng(5);
  for (int probe = 0; probe < 1000; ++probe) {
    auto x = rng() % t.size();
    auto r = rng() % t.reflections.size();
    auto y = t.right_mult[r][x];
    EXPECT_EQ(t.elements[static_cast<std::size_t>(y)], multiply(t.elements[x], to_element(t.reflections[r], g), g));
  }
}

TEST(Oracle, SubgroupTableIsClosedAndContainsExtremes) {
  for (const auto& g : {GroupParams(2, 1, 2), GroupParams(4, 2, 2), GroupParams(2, 2, 3)}) {
    auto t = build_tables(g);
    const auto& st = t.subgroups;
    EXPECT_EQ(st.subgroups[0].count(), 1u);
    ASSERT_GE(st.full_index, 0);
    EXPECT_EQ(st.subgroups[static_cast<std::size_t>(st.full_index)].count(), t.elements.size());
    for (std::size_t s = 0; s < st.subgroups.size(); ++s) {
      // Closed under multiplication by its own reflections.
      for (std::size_t r = 0; r < t.elements.reflections.size(); ++r) {
        if (!st.subgroups[s].contains(t.elements.refl_indices[r])) continue;
        st.subgroups[s].for_each([&](int x) {
          EXPECT_TRUE(st.subgroups[s].contains(t.elements.right_mult[r][static_cast<std::size_t>(x)]));
        });
      }
      for (std::size_t r = 0; r < t.elements.reflections.size(); ++r) {
        auto j = static_cast<std::size_t>(st.join[s][r]);
        EXPECT_TRUE(st.subgroups[j].contains(t.elements.refl_indices[r]));
        st.subgroups[s].for_each([&](int x) { EXPECT_TRUE(st.subgroups[j].contains(x)); });
      }
    }
  }
}

TEST(Oracle, CountExamples) {
  auto e = count_factorizations(GroupParams(2, 2, 2), identity_element(2), 6, CountMode::full);
  EXPECT_EQ(e, (EgfPrefix{0, 0, 0, 0, 6, 0, 30}));
  auto c = count_factorizations(GroupParams(1, 1, 3), Element{{1, 2, 0}, {0, 0, 0}}, 2, CountMode::full);
  EXPECT_EQ(c[2], 3);
  for (const auto& g : {GroupParams(1, 1, 1), GroupParams(2, 2, 2), GroupParams(3, 1, 1)}) {
    EXPECT_EQ(count_factorizations(g, identity_element(g.n), 0, CountMode::all)[0], 1);
    EXPECT_EQ(count_factorizations(g, identity_element(g.n), 0, CountMode::full)[0], g.order() == 1 ? 1 : 0);
  }
}

TEST(Oracle, AgreesWithLiteralEnumeration) {
  for (const auto& g : {GroupParams(2, 1, 2), GroupParams(3, 3, 2), GroupParams(1, 1, 3)}) {
    auto tables = build_tables(g);
    auto counts = count_all_targets(tables, 5);
    for (std::size_t x = 0; x < tables.elements.size(); ++x) {
      auto [all, full] = brute::group_sequences(g, tables.elements.elements[x], 5);
      for (int N = 0; N <= 5; ++N) {
        EXPECT_EQ(counts.all[static_cast<std::size_t>(N)][x], all[static_cast<std::size_t>(N)]);
        EXPECT_EQ(counts.full[static_cast<std::size_t>(N)][x], full[static_cast<std::size_t>(N)]);
      }
    }
  }
}

TEST(Oracle, AllCountsDecomposeOverSubgroups) {
  for (const auto& g : {GroupParams(2, 2, 2), GroupParams(1, 1, 3), GroupParams(2, 1, 2)}) {
    auto tables = build_tables(g);
    auto counts = count_all_targets(tables, 8);
    auto direct = count_all_direct(tables.elements, 8);
    EXPECT_EQ(counts.all, direct) << g.label();
  }
}

TEST(Oracle, AllSeriesMatchesCharacterFormulaInSymmetricGroups) {
  GroupParams g(1, 1, 4);
  auto tables = build_tables(g);
  auto counts = count_all_targets(tables, oracle_length(g, CountMode::all));
  for (const auto& rep : class_representatives(g)) {
    auto s = oracle_series_from(counts, g, tables.elements.index_of(rep), CountMode::all);
    EXPECT_EQ(s, frobenius_series_sn(cycle_type(rep.perm)));
  }
}

TEST(Oracle, SeriesExamples) {
  auto xm1 = LaurentPoly(0, {Rational(-1), Rational(1)});
  EXPECT_EQ(oracle_series(GroupParams(1, 1, 2), identity_element(2), CountMode::full),
            pow(xm1, 2).shifted(-1) / Rational(2));
  EXPECT_EQ(oracle_series(GroupParams(2, 2, 2), identity_element(2), CountMode::full),
            series_full(GroupParams(2, 2, 2), identity_element(2)));
  GroupParams g2(6, 6, 2);
  auto d = extract_phi(oracle_series(g2, identity_element(2), CountMode::full), g2.order(), 6);
  EXPECT_EQ(d.phi, LaurentPoly(0, {1, 4, 10, 16, 10, 16, 10, 4, 1}));
}

TEST(Oracle, DeterministicUnderReflectionOrder) {
  GroupParams g(4, 2, 2);
  auto base = build_tables(g);
  auto refl = reflections(g);
  std::mt19937 rng(17);
  std::shuffle(refl.begin(), refl.end(), rng);
  auto shuffled = build_tables(g, refl);
  auto a = count_all_targets(base, 9);
  auto b = count_all_targets(shuffled, 9);
  EXPECT_EQ(a.full, b.full);
  EXPECT_EQ(a.all, b.all);
}

TEST(Oracle, CapIsEnforcedAndConfigurable) {
  EXPECT_THROW(build_tables(GroupParams(4, 1, 4)), capability_error);  // #W = 6144
  // G(2,1,2) has 8 elements.
  ::setenv("WFACT_CAP_W", "4", 1);
  EXPECT_THROW(build_tables(GroupParams(2, 1, 2)), capability_error);
  ::setenv("WFACT_CAP_W", "ten", 1);
  EXPECT_THROW(build_tables(GroupParams(2, 1, 2)), argument_error);
  ::unsetenv("WFACT_CAP_W");
  EXPECT_NO_THROW(build_tables(GroupParams(2, 1, 2)));
}

TEST(Oracle, TransitivityOnColoredBasis) {
  GroupParams g(2, 2, 2);
  auto refl = reflections(g);
  EXPECT_TRUE(acts_transitively_on_Em(refl, g));
  EXPECT_FALSE(acts_transitively_on_Em({refl[0]}, g));
  EXPECT_TRUE(acts_transitively_on_Em({}, GroupParams(1, 1, 1)));
  EXPECT_FALSE(acts_transitively_on_Em({}, GroupParams(3, 3, 1)));
  EXPECT_THROW(acts_transitively_on_Em({}, GroupParams(2, 1, 2)), argument_error);
}

TEST(Oracle, TransitivityMatchesFullnessOnSmallSubsets) {
  for (const auto& g : {GroupParams(2, 2, 2), GroupParams(3, 3, 2), GroupParams(2, 2, 3)}) {
    auto refl = reflections(g);
    const auto R = refl.size();
    for (unsigned mask = 0; mask < (1u << R); ++mask) {
      if (std::popcount(mask) > 4) continue;
      std::vector<Reflection> set;
      for (std::size_t i = 0; i < R; ++i)
        if (mask >> i & 1u) set.push_back(refl[i]);
      EXPECT_EQ(acts_transitively_on_Em(set, g), is_full_set(set, g)) << g.label() << " mask " << mask;
    }
  }
}
