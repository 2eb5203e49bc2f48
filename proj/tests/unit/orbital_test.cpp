#include <gtest/gtest.h>

#include "padicvol/orbital.hpp"

using namespace padicvol;

namespace {
const std::optional<int> inf = std::nullopt;

OrbitalProfile indicator(int n) {
  OrbitalProfile phi(n, 0);
  const ClampedVector all(static_cast<std::size_t>(n));
  phi.set(all, all, 1);
  return phi;
}

OrbitalProfile two_point() {
  OrbitalProfile phi(1, 1);
  phi.set({inf}, {inf}, 1);
  phi.set({inf}, {-1}, 1);
  return phi;
}

using Terms = std::map<GermExpansion::Key, RationalFunctionQ>;
}  // namespace

TEST(OrbitalProfile, NormalizesKeys) {
  OrbitalProfile phi(3, 2);
  phi.set({inf, -1, -2}, {inf, inf, inf}, 5);
  EXPECT_EQ(phi.at({-2, inf, -1}, {inf, inf, inf}), 5);
  EXPECT_EQ(phi.values().begin()->first.first, (ClampedVector{-2, -1, inf}));
}

TEST(OrbitalProfile, RejectsBadEntries) {
  OrbitalProfile phi(2, 1);
  EXPECT_THROW(phi.set({-2, inf}, {inf, inf}, 1), DomainError);
  EXPECT_THROW(phi.set({-1, -1}, {-1, inf}, 1), DomainError);
  EXPECT_THROW(phi.set({inf}, {inf, inf}, 1), DomainError);
}

TEST(OrbitalDirect, Examples) {
  EXPECT_EQ(orbital_direct(indicator(1), 4), RationalFunctionQ(5));
  EXPECT_EQ(orbital_direct(two_point(), 0), RationalFunctionQ(2));
  EXPECT_EQ(orbital_direct(OrbitalProfile(2, 1), 3), RationalFunctionQ());
}

TEST(OrbitalDirect, IndicatorGivesUnweightedVolume) {
  for (int n = 1; n <= 3; ++n)
    for (int x = 0; x <= 5; ++x) EXPECT_EQ(orbital_direct(indicator(n), x), vol_direct({n, 0, x}));
}

TEST(OrbitalCoeffs, Examples) {
  EXPECT_EQ(orbital_coeffs(indicator(2)).coeffs, (std::map<BlockClass, RationalFunctionQ>{{{0, 2, 0}, 1}}));
  EXPECT_EQ(orbital_coeffs(two_point()).coeffs,
            (std::map<BlockClass, RationalFunctionQ>{{{0, 1, 0}, 1}, {{1, 0, 0}, 1}}));
  EXPECT_TRUE(orbital_coeffs(OrbitalProfile(2, 2)).coeffs.empty());
}

TEST(OrbitalGerm, Examples) {
  EXPECT_EQ(orbital_germ(indicator(1)), GermExpansion(Terms{{{0, 1}, 1}, {{0, 0}, 1}}, 2));
  EXPECT_TRUE(orbital_germ(OrbitalProfile(2, 1)).empty());
  const GermExpansion g = orbital_germ(two_point());
  EXPECT_EQ(g, GermExpansion(Terms{{{0, 1}, 1}, {{0, 0}, 2}}, 4));
  EXPECT_EQ(g.validity_from(), 4);
}

TEST(OrbitalGerm, HandComputedRankOneAboveCase) {
  // n = 1, N = 1, value 3 on first = (-1): lambda = x + 1 contributes 3 for
  // every x, through the class (0,0,1) with coefficient 3 q^{0}.
  OrbitalProfile phi(1, 1);
  phi.set({-1}, {inf}, 3);
  for (int x = 0; x <= 6; ++x) EXPECT_EQ(orbital_direct(phi, x), RationalFunctionQ(3));
  EXPECT_EQ(orbital_coeffs(phi).coeffs, (std::map<BlockClass, RationalFunctionQ>{{{0, 0, 1}, 3}}));
}

TEST(OrbitalGerm, MatchesDirectSumOnRandomProfiles) {
  Rng rng = substream(7, "orbital-test");
  for (int n = 1; n <= 3; ++n)
    for (int N = 0; N <= 2; ++N)
      for (int s = 0; s < 6; ++s) {
        const OrbitalProfile phi = random_profile(n, N, 6, rng);
        const GermExpansion g = orbital_germ(phi);
        for (int x = 2 * N + 2; x <= 2 * N + 10; ++x) EXPECT_EQ(g.eval(x), orbital_direct(phi, x));
        // The identity already holds from x = 0 for these profiles.
        for (int x = 0; x < 2 * N + 2; ++x) EXPECT_EQ(g.eval_unchecked(x), orbital_direct(phi, x));
        EXPECT_TRUE(check_linear_term(phi));
      }
}

TEST(CheckLinearTerm, Examples) {
  EXPECT_TRUE(check_linear_term(indicator(1)));
  EXPECT_TRUE(check_linear_term(OrbitalProfile(2, 0)));
  Rng rng = substream(11, "linear-term");
  for (int s = 0; s < 20; ++s) EXPECT_TRUE(check_linear_term(random_profile(2, 1, 6, rng)));
}

TEST(Orbital, Linearity) {
  Rng rng = substream(3, "linearity");
  for (int s = 0; s < 10; ++s) {
    const OrbitalProfile f = random_profile(2, 2, 5, rng), g = random_profile(2, 2, 5, rng);
    const Rational a(3, 2), b(-2);
    const OrbitalProfile h = f.scaled(a) + g.scaled(b);
    for (int x = 0; x <= 6; ++x)
      EXPECT_EQ(orbital_direct(h, x),
                RationalFunctionQ(a) * orbital_direct(f, x) + RationalFunctionQ(b) * orbital_direct(g, x));
  }
}

TEST(Orbital, NonvanishingWithNonzeroPhi0) {
  Rng rng = substream(5, "nonvanishing");
  for (int s = 0; s < 10; ++s) {
    OrbitalProfile phi = random_profile(2, 1, 5, rng);
    const ClampedVector all(2);
    phi.set(all, all, 1);
    EXPECT_FALSE(orbital_germ(phi).coeff(0, 1).is_zero());
    EXPECT_FALSE(orbital_direct(phi, 20).is_zero());
  }
}
