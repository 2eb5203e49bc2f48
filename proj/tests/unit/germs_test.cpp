#include <gtest/gtest.h>

#include "padicvol/germs.hpp"

using namespace padicvol;

namespace {
RationalFunctionQ rf(const char* s) { return RationalFunctionQ::parse(s); }
using Terms = std::map<GermExpansion::Key, RationalFunctionQ>;
}  // namespace

TEST(EvalGerm, Examples) {
  EXPECT_EQ(eval_germ(GermExpansion(Terms{{{0, 0}, 1}}, 0), 9), RationalFunctionQ(1));
  EXPECT_EQ(eval_germ(GermExpansion(Terms{{{0, 1}, 1}, {{0, 0}, 1}}, 0), 4), RationalFunctionQ(5));
  const GermExpansion geo(Terms{{{1, 0}, rf("q/(q-1)")}, {{0, 0}, rf("1/(1-q)")}}, 0);
  EXPECT_EQ(eval_germ(geo, 2), rf("q^2+q+1"));
}

TEST(EvalGerm, RefusesBelowThreshold) {
  const GermExpansion g(Terms{{{0, 0}, 1}}, 3);
  EXPECT_THROW(g.eval(2), DomainError);
}

TEST(GermExpansion, DropsZeroCoefficients) {
  const GermExpansion g(Terms{{{0, 0}, 1}, {{1, 0}, 0}}, 0);
  EXPECT_EQ(g.terms().size(), 1u);
}

TEST(FitGerm, Examples) {
  VolumeTable t;
  const GermExpansion g11 = fit_germ([&](int x) { return t(1, 1, x); }, GermSupport::rectangle(1, 1), 1);
  EXPECT_EQ(g11, GermExpansion(Terms{{{1, 0}, rf("q/(q-1)")}, {{0, 0}, rf("1/(1-q)")}}, 1));
  const GermExpansion g10 = fit_germ([&](int x) { return t(1, 0, x); }, GermSupport::rectangle(0, 1), 0);
  EXPECT_EQ(g10, GermExpansion(Terms{{{0, 1}, 1}, {{0, 0}, 1}}, 0));
  const GermExpansion one = fit_germ([](int) { return RationalFunctionQ(1); }, GermSupport::rectangle(0, 0), 0);
  EXPECT_EQ(one, GermExpansion(Terms{{{0, 0}, 1}}, 0));
}

TEST(FitGerm, ReportsFirstMismatch) {
  // x^2 does not fit in degree <= 1 in x; samples at 0,1 are used, 2 is held out.
  const Sampler sq = [](int x) { return RationalFunctionQ(static_cast<long>(x) * x); };
  try {
    fit_germ(sq, GermSupport::rectangle(0, 1), 0);
    FAIL() << "expected a fit error";
  } catch (const FitError& e) {
    EXPECT_EQ(e.first_mismatch(), 2);
  }
}

TEST(FitGerm, UniqueAcrossSufficientSupports) {
  // The wide rectangle n(|alpha|+n) x n against the recursion-derived support.
  for (int n = 1; n <= 2; ++n)
    for (int a = 0; a <= 2; ++a) {
      VolumeTable t;
      const Sampler s = [&](int x) { return t(n, a, x); };
      const GermExpansion wide = fit_germ(s, GermSupport::rectangle(n * (a + n), n), 1);
      EXPECT_EQ(wide, fit_germ(s, vol_support(n, a), 1)) << n << "," << a;
      EXPECT_EQ(wide, germ_of_vol(n, a));
    }
}

TEST(GermOfVol, Examples) {
  EXPECT_EQ(germ_of_vol(0, 2), GermExpansion(Terms{{{0, 0}, 1}}, 1));
  EXPECT_EQ(germ_of_vol(1, 1), GermExpansion(Terms{{{1, 0}, rf("q/(q-1)")}, {{0, 0}, rf("1/(1-q)")}}, 1));
  EXPECT_EQ(germ_of_vol(2, 0).coeff(0, 1), rf("2/(1-q)"));
  EXPECT_EQ(germ_of_vol(1, 1).validity_from(), 1);
}

TEST(GermOfVol, GeometricClosedFormAtRankOne) {
  // vol_{1,a}(x) = (q^{a(x+1)} - 1)/(q^a - 1) for a != 0.
  for (int a = -3; a <= 3; ++a) {
    if (a == 0) continue;
    const RationalFunctionQ d = RationalFunctionQ::q_power(a) - RationalFunctionQ(1);
    const GermExpansion expected(
        Terms{{{a, 0}, RationalFunctionQ::q_power(a) / d}, {{0, 0}, -RationalFunctionQ(1) / d}}, 1);
    EXPECT_EQ(germ_of_vol(1, a), expected) << a;
  }
}

TEST(GermOfVol, StructureForPositiveWeight) {
  for (int n = 0; n <= 4; ++n)
    for (int a = 1; a <= 3; ++a) {
      const GermExpansion g = germ_of_vol(n, a);
      EXPECT_EQ(g.coeff(0, 0), const_term_A(n, a));
      for (const auto& [k, c] : g.terms()) EXPECT_TRUE(k.first >= 1 || k == GermExpansion::Key(0, 0)) << n << a;
    }
}

TEST(GermOfVol, LinearCoefficient) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(germ_of_vol(n, 0).coeff(0, 1), linear_coeff_B(n));
}

TEST(GermOfVol, RoundTrip) {
  for (int n = 0; n <= 4; ++n)
    for (int a = -3; a <= 3; ++a)
      for (int x = 1; x <= 10; ++x) EXPECT_EQ(germ_of_vol(n, a).eval(x), vol_recur2({n, a, x}));
}

TEST(GermOfVol, AlsoHoldsAtZero) {
  for (int n = 0; n <= 4; ++n)
    for (int a = -3; a <= 3; ++a) EXPECT_EQ(germ_of_vol(n, a).eval_unchecked(0), vol_direct({n, a, 0}));
}

TEST(GermOfVol, FunctionalEquationTransport) {
  for (int n = 0; n <= 3; ++n)
    for (int a = -2; a <= 2; ++a) EXPECT_EQ(germ_of_vol(n, a).shift_exponent(-n * a), germ_of_vol(n, -a));
}

TEST(GermOfVol, RejectsLargeRank) { EXPECT_THROW(germ_of_vol(5, 0), DomainError); }
