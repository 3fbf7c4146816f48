#include <gtest/gtest.h>

#include <random>

#include "wfact/laurent.hpp"
#include "wfact/roots.hpp"

using namespace wfact;

namespace {

LaurentPoly xm1() { return LaurentPoly(0, {Rational(-1), Rational(1)}); }

LaurentPoly random_poly(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int k = lo; k <= hi; ++k) {
    Rational q(coef(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return {lo, c};
}

}  // namespace

TEST(Laurent, ZeroIsCanonical) {
  LaurentPoly z(3, {Rational(0), Rational(0)});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, LaurentPoly());
  EXPECT_EQ(z.min_deg(), 0);
  EXPECT_EQ(LaurentPoly::x(2) - LaurentPoly::x(2), LaurentPoly());
}

TEST(Laurent, TrimsBothEnds) {
  LaurentPoly p(-2, {Rational(0), Rational(3), Rational(0), Rational(1), Rational(0)});
  EXPECT_EQ(p.min_deg(), -1);
  EXPECT_EQ(p.max_deg(), 1);
  EXPECT_EQ(p.coeff(-1), 3);
  EXPECT_EQ(p.coeff(1), 1);
  EXPECT_EQ(p.coeff(7), 0);
}

TEST(Laurent, RingAxiomsOnRandomPolys) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(rng, -3, 2), b = random_poly(rng, -1, 4), c = random_poly(rng, 0, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, LaurentPoly());
    EXPECT_EQ((a * b).evaluate(Rational(3, 2)), a.evaluate(Rational(3, 2)) * b.evaluate(Rational(3, 2)));
  }
}

TEST(Laurent, PowAndSubstitutePower) {
  auto p = LaurentPoly::x(1) + LaurentPoly::x(-1);
  EXPECT_EQ(pow(p, 2), LaurentPoly::x(2) + LaurentPoly(2) + LaurentPoly::x(-2));
  EXPECT_EQ(pow(p, 0), LaurentPoly(1));
  EXPECT_EQ(p.substitute_power(3), LaurentPoly::x(3) + LaurentPoly::x(-3));
  EXPECT_THROW(p.substitute_power(0), argument_error);
}

TEST(Laurent, EgfPrefixIsPowerSums) {
  // (X + X^-1)/2 = cosh z: 1, 0, 1, 0, 1, ...
  auto p = (LaurentPoly::x(1) + LaurentPoly::x(-1)) / Rational(2);
  auto e = egf_prefix(p, 6);
  ASSERT_EQ(e.size(), 7u);
  for (std::size_t j = 0; j < e.size(); ++j) EXPECT_EQ(e[j], j % 2 ? 0 : 1) << j;
  // X^3: 3^N.
  auto f = egf_prefix(LaurentPoly::x(3), 4);
  EXPECT_EQ(f[4], 81);
}

TEST(Laurent, EgfRoundTripOnRandomPolys) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int lo = static_cast<int>(rng() % 7) - 4;
    int hi = lo + static_cast<int>(rng() % 6);
    auto p = random_poly(rng, lo, hi);
    auto prefix = egf_prefix(p, static_cast<std::size_t>(hi - lo + 2));
    EXPECT_EQ(laurent_from_egf(prefix, lo - 1, hi), p);
  }
}

TEST(Laurent, EgfReconstructionRejectsInconsistentSurplus) {
  auto p = LaurentPoly::x(3);
  auto prefix = egf_prefix(p, 5);
  // Window [0, 2] cannot hold X^3; the surplus entries disagree.
  EXPECT_THROW(laurent_from_egf(prefix, 0, 2), reconstruction_error);
  EXPECT_THROW(laurent_from_egf(prefix, 0, 9), argument_error);
  EXPECT_THROW(laurent_from_egf(prefix, 2, 1), argument_error);
}

TEST(Laurent, StripRootAtOne) {
  auto q = LaurentPoly(0, {Rational(1), Rational(4), Rational(1)});
  auto p = q * pow(xm1(), 4);
  auto [quotient, count] = strip_root_at_one(p.shifted(-3));
  EXPECT_EQ(count, 4u);
  EXPECT_EQ(quotient, q.shifted(-3));
}

TEST(Laurent, LowestOrderOfKnownSeries) {
  // (X-1)^2/(2X) = z^2/2 + ...: count 1 at length 2.
  auto a1 = pow(xm1(), 2).shifted(-1) / Rational(2);
  auto lo = lowest_order(a1);
  EXPECT_EQ(lo.s, 2u);
  EXPECT_EQ(lo.c, 1);
  // (X^2+4X+1)(X-1)^4/(6X^3): coefficient of z^4/4! is 6*4!/6 = 24.
  auto a2 = (LaurentPoly(0, {Rational(1), Rational(4), Rational(1)}) * pow(xm1(), 4)).shifted(-3) / Rational(6);
  lo = lowest_order(a2);
  EXPECT_EQ(lo.s, 4u);
  EXPECT_EQ(lo.c, 24);
  EXPECT_EQ(egf_prefix(a2, 4)[4], 24);
  EXPECT_THROW(lowest_order(LaurentPoly()), argument_error);
}

TEST(Laurent, ExtractPhiInvertsAssemble) {
  auto phi = LaurentPoly(0, {Rational(1), Rational(4), Rational(10), Rational(4), Rational(1)});
  auto series = assemble_from_phi(phi, BigInt(12), 3, 6);
  auto d = extract_phi(series, BigInt(12), 6);
  EXPECT_EQ(d.ell, 3u);
  EXPECT_EQ(d.phi, phi);
  EXPECT_THROW(extract_phi(LaurentPoly::x(-5), BigInt(1), 2), structural_error);
}

TEST(Laurent, ToStringAndRationalParsing) {
  auto p = LaurentPoly::x(2) * Rational(1, 6) - LaurentPoly::x(-1) * Rational(1, 3);
  EXPECT_EQ(to_string(p), "1/6*X^2 - 1/3*X^-1");
  EXPECT_EQ(to_string(LaurentPoly()), "0");
  EXPECT_EQ(to_string(Rational(-2)), "-2/1");
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_THROW(parse_rational("x"), argument_error);
  EXPECT_THROW(parse_rational("1/0"), argument_error);
}

TEST(Roots, RecoversKnownRoots) {
  // (X - 2)(X + 3)(X^2 + 1)
  auto p = LaurentPoly(0, {Rational(-2), Rational(1)}) * LaurentPoly(0, {Rational(3), Rational(1)}) *
           LaurentPoly(0, {Rational(1), Rational(0), Rational(1)});
  auto r = find_roots(p);
  ASSERT_EQ(r.roots.size(), 4u);
  std::vector<std::complex<double>> expected{{2, 0}, {-3, 0}, {0, 1}, {0, -1}};
  for (const auto& e : expected) {
    double best = 1;
    for (const auto& x : r.roots) best = std::min(best, std::abs(x - e));
    EXPECT_LT(best, 1e-12);
  }
}

TEST(Roots, ZeroRootsArePeeled) {
  auto r = find_roots(LaurentPoly(2, {Rational(-1), Rational(0), Rational(1)}));
  ASSERT_EQ(r.roots.size(), 4u);
  EXPECT_EQ(std::count(r.roots.begin(), r.roots.end(), std::complex<double>(0, 0)), 2);
}

TEST(Roots, RejectsConstantsAndLaurentInput) {
  EXPECT_THROW(find_roots(LaurentPoly(5)), argument_error);
  EXPECT_THROW(find_roots(LaurentPoly::x(-1) + LaurentPoly::x(1)), argument_error);
}

TEST(Roots, ClusteredRootsArePolished) {
  // (X - 1)^6 (X + 2): a sixfold root defeats plain double precision.
  auto p = pow(xm1(), 6) * LaurentPoly(0, {Rational(2), Rational(1)});
  auto r = find_roots(p);
  int near_one = 0;
  for (const auto& x : r.roots) near_one += std::abs(x - 1.0) < 1e-6;
  EXPECT_EQ(near_one, 6);
}
