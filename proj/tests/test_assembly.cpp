#include <gtest/gtest.h>

#include <set>

#include "support/brute_force.hpp"
#include "wfact/assembly.hpp"
#include "wfact/fixtures.hpp"
#include "wfact/oracle.hpp"

using namespace wfact;

namespace {

const std::vector<GroupParams> groups{{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 3, 2},
                                      {4, 2, 2}, {2, 2, 3}, {2, 1, 3}, {3, 3, 3}};

}  // namespace

TEST(SeriesPpn, TrivialProjectionIsSymmetricSeries) {
  for (const auto& lambda : integer_partitions(4)) {
    std::vector<std::pair<int, int>> cycles;
    for (int len : lambda.parts) cycles.emplace_back(len, 0);
    GroupParams s4(1, 1, 4);
    auto cd = cycle_data(element_from_cycles(cycles, s4), s4);
    EXPECT_EQ(series_ppn(1, 4, cd), full_series_sn_by_type(lambda));
  }
}

TEST(SeriesPpn, HandValuesInG222) {
  GroupParams g(2, 2, 2);
  auto id = cycle_data(identity_element(2), g);
  auto lo = lowest_order(series_ppn(2, 2, id));
  EXPECT_EQ(lo.s, 4u);
  EXPECT_EQ(lo.c, 6);

  auto swap = cycle_data(Element{{1, 0}, {1, 1}}, g);
  EXPECT_EQ(swap.d, 2);
  auto t = full_series_sn_by_type(IntegerPartition({2}));
  EXPECT_EQ(series_ppn(2, 2, swap), (t.substitute_power(2) - t * Rational(2)) / Rational(2));
  lo = lowest_order(series_ppn(2, 2, swap));
  EXPECT_EQ(lo.s, 3u);
  EXPECT_EQ(lo.c, 3);
  auto [all, full] = brute::group_sequences(g, Element{{1, 0}, {1, 1}}, 3);
  EXPECT_EQ(full[3], 3);
}

TEST(SeriesPpn, RejectsInconsistentData) {
  CycleData cd;
  cd.lengths = {2};
  cd.cycle_colors = {0};
  cd.k = 1;
  cd.d = 3;
  EXPECT_THROW(series_ppn(2, 2, cd), argument_error);
  cd.d = 1;
  EXPECT_THROW(series_ppn(2, 3, cd), argument_error);
}

TEST(SeriesFull, RankOneDelegatesToCyclic) {
  EXPECT_EQ(series_full(GroupParams(6, 1, 1), identity_element(1)), cyclic_full_series(6, 1));
  EXPECT_EQ(series_full(GroupParams(6, 2, 1), Element{{0}, {2}}), cyclic_full_series(3, 3));
  EXPECT_EQ(series_full(GroupParams(4, 4, 1), identity_element(1)), LaurentPoly(1));
  EXPECT_EQ(full_length(GroupParams(4, 4, 1), identity_element(1)), 0u);
  EXPECT_EQ(lead_coeff(GroupParams(4, 4, 1), identity_element(1)), 1);
}

TEST(SeriesFull, RejectsNonMembers) {
  EXPECT_THROW(series_full(GroupParams(2, 2, 2), Element{{0, 1}, {1, 0}}), argument_error);
  EXPECT_THROW(full_length(GroupParams(2, 2, 2), Element{{0, 1}, {1, 0}}), argument_error);
  EXPECT_THROW(lead_coeff(GroupParams(2, 2, 2), Element{{0, 1}, {1, 0}}), argument_error);
}

TEST(SeriesFull, MatchesLiteralEnumerationOnShortLengths) {
  for (const auto& g : {GroupParams(2, 1, 2), GroupParams(2, 2, 2), GroupParams(3, 3, 2)}) {
    for (const auto& rep : class_representatives(g)) {
      auto [all, full] = brute::group_sequences(g, rep, 5);
      auto e = egf_prefix(series_full(g, rep), 5);
      for (int N = 0; N <= 5; ++N) EXPECT_EQ(e[static_cast<std::size_t>(N)], Rational(full[static_cast<std::size_t>(N)])) << g.label() << " " << class_label(rep, g) << " N=" << N;
    }
  }
}

TEST(FullLength, Examples) {
  EXPECT_EQ(full_length(GroupParams(2, 2, 2), identity_element(2)), 4u);
  EXPECT_EQ(full_length(GroupParams(4, 2, 2), Element{{0, 1}, {2, 0}}), 5u);
  for (int n = 1; n <= 5; ++n) {
    GroupParams sn(1, 1, n);
    for (const auto& rep : class_representatives(sn))
      EXPECT_EQ(full_length(sn, rep), static_cast<unsigned>(n + cycle_data(rep, sn).k - 2));
  }
}

TEST(LeadCoeff, Examples) {
  EXPECT_EQ(lead_coeff(GroupParams(3, 3, 2), Element{{0, 1}, {1, 2}}), 3);
  EXPECT_EQ(lead_coeff(GroupParams(2, 2, 2), identity_element(2)), 6);
  EXPECT_EQ(lead_coeff(GroupParams(2, 1, 2), identity_element(2)), 48);
  EXPECT_EQ(lead_coeff(GroupParams(6, 6, 2), identity_element(2)), 144);
}

TEST(LeadCoeff, AgreesWithSeriesLowestOrderOnAllClasses) {
  for (const auto& g : groups)
    for (const auto& rep : class_representatives(g)) {
      auto lo = lowest_order(series_full(g, rep));
      EXPECT_EQ(lo.s, full_length(g, rep)) << g.label() << " " << class_label(rep, g);
      EXPECT_EQ(lo.c, lead_coeff(g, rep)) << g.label() << " " << class_label(rep, g);
    }
}

TEST(LeadCoeff, AllFourCasesAreExercised) {
  // (a = 1, d = 1), (a != 1, d = 1), (a = 1, d != 1), (a != 1, d != 1) in G(4,2,2).
  GroupParams g(4, 2, 2);
  std::set<std::pair<bool, bool>> seen;
  for (const auto& rep : class_representatives(g)) {
    auto cd = cycle_data(rep, g);
    seen.insert({cd.a == 1, cd.d == 1});
  }
  EXPECT_EQ(seen.size(), 4u);
}

TEST(SeriesFull, FactorizedFormAgrees) {
  for (const auto& g : {GroupParams(2, 1, 2), GroupParams(3, 1, 2), GroupParams(4, 2, 2), GroupParams(2, 1, 3),
                        GroupParams(6, 2, 2), GroupParams(6, 3, 2), GroupParams(4, 1, 3), GroupParams(6, 2, 1)})
    for (const auto& rep : class_representatives(g))
      EXPECT_EQ(series_full_factorized(g, rep), series_full(g, rep)) << g.label() << " " << class_label(rep, g);
}

TEST(SeriesFull, PhiIsMonicInsideWindow) {
  for (const auto& g : groups)
    for (const auto& rep : class_representatives(g)) {
      auto s = series_full(g, rep);
      EXPECT_GE(s.min_deg(), -g.hyperplane_count());
      EXPECT_LE(s.max_deg(), g.reflection_count());
      auto d = extract_phi(s, g.order(), static_cast<unsigned>(g.hyperplane_count()));
      EXPECT_TRUE(d.phi.is_monic()) << g.label() << " " << class_label(rep, g);
      EXPECT_EQ(d.ell, full_length(g, rep));
    }
}

TEST(SeriesFull, RealGroupsHavePalindromicPhi) {
  std::vector<GroupParams> real{{2, 1, 1}, {2, 1, 2}, {2, 1, 3}};
  for (int m = 2; m <= 6; ++m) real.emplace_back(m, m, 2);
  for (int n = 1; n <= 6; ++n) real.emplace_back(1, 1, n);
  for (const auto& g : real) {
    auto d = extract_phi(series_full(g, identity_element(g.n)), g.order(), static_cast<unsigned>(g.hyperplane_count()));
    EXPECT_TRUE(d.phi.is_palindromic()) << g.label();
  }
}

TEST(LeadFromPhi, Examples) {
  EXPECT_EQ(lead_from_phi(LaurentPoly(1), BigInt(2), 2), 1);
  auto fx = load_fixtures();
  EXPECT_EQ(lead_from_phi(fixture(fx, "H3"), BigInt(120), 6), 172800);
  EXPECT_EQ(lead_from_phi(fixture(fx, "G2"), BigInt(12), 4), lead_coeff(GroupParams(6, 6, 2), identity_element(2)));
  EXPECT_THROW(lead_from_phi(LaurentPoly::x(-1), BigInt(2), 1), argument_error);
}
