#include <gtest/gtest.h>

#include "padicvol/lfactors.hpp"
#include "padicvol/random.hpp"

using namespace padicvol;

namespace {
TruncatedSeries series(int D, std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return TruncatedSeries(D, r);
}

// Schur polynomial in two variables from the bialternant formula.
Rational bialternant(int k1, int k2, const Rational& a, const Rational& b) {
  if (a == b) return Rational(k1 - k2 + 1) * pow(a, k1 + k2);
  return (pow(a, k1 + 1) * pow(b, k2) - pow(b, k1 + 1) * pow(a, k2)) / (a - b);
}
}  // namespace

TEST(StdLFactor, Examples) {
  EXPECT_EQ(std_lfactor({{2}, 3}, 1, 3), series(3, {1, 2, 4, 8}));
  EXPECT_EQ(std_lfactor({{2}, 3}, -1, 3), series(3, {1, -2, 4, -8}));
  EXPECT_EQ(std_lfactor({{1}, 3}, 1, 2), series(2, {1, 1, 1}));
}

TEST(StdLFactor, RejectsBadData) {
  EXPECT_THROW(std_lfactor({{0}, 3}, 1, 2), DomainError);
  EXPECT_THROW(std_lfactor({{1}, 1}, 1, 2), DomainError);
  EXPECT_THROW(std_lfactor({{1}, 3}, 2, 2), DomainError);
}

TEST(ExtSqLFactor, Examples) {
  EXPECT_EQ(ext_sq_lfactor({{1, 1}, 3}, 1, 2), series(2, {1, 1, 1}));
  EXPECT_EQ(ext_sq_lfactor({{2, 3}, 3}, 1, 2), series(2, {1, 6, 36}));
  EXPECT_EQ(ext_sq_lfactor({{2, 3}, 3}, -1, 1), series(1, {1, -6}));
  EXPECT_THROW(ext_sq_lfactor({{2}, 3}, 1, 2), DomainError);
}

TEST(ExtSqLFactor, DistinctPairsAreOrderedSquared) {
  Rng rng = substream(1, "pairs");
  for (int s = 0; s < 10; ++s) {
    SatakeData d{{uniform_rational(rng, 5, 3, true), uniform_rational(rng, 5, 3, true), uniform_rational(rng, 5, 3, true)}, 3};
    const TruncatedSeries o = ext_sq_lfactor(d, 1, 6);
    EXPECT_EQ(ext_sq_lfactor(d, 1, 6, Pairs::Distinct), o * o);
  }
}

TEST(ExtSqShift, Examples) {
  EXPECT_TRUE(check_ext_sq_shift({{2, 3}, 3}, 0, 5));
  EXPECT_TRUE(check_ext_sq_shift({{2, 3}, 5}, 1, 5));
  EXPECT_TRUE(check_ext_sq_shift({{2, Rational(1, 2)}, 3}, 2, 6));
}

TEST(ExtSqShift, GeometricInShiftedVariable) {
  // alpha = (2,3), q = 5, a = 1: coefficients (6/5)^k.
  const TruncatedSeries s = ext_sq_lfactor({{2, 3}, 5}, 1, 5).rescaled(Rational(1, 5));
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(s[k], pow(Rational(6, 5), k));
}

TEST(Tate, Examples) {
  auto [d1, c1] = tate_series({{{1, 1}}}, 3);
  EXPECT_EQ(d1, series(3, {1, 1, 1, 1}));
  EXPECT_EQ(c1, d1);
  auto [d2, c2] = tate_series({{{1, -1}}}, 3);
  EXPECT_EQ(d2, series(3, {1, -1, 1, -1}));
  EXPECT_EQ(c2, d2);
  auto [d3, c3] = tate_series({{{2, 1}, {1, -1}}}, 4);
  EXPECT_EQ(d3, c3);
  EXPECT_EQ(d3, series(4, {1, -1, 2, -2, 3}));
}

TEST(Tate, RandomTori) {
  Rng rng = substream(2, "tate");
  for (int s = 0; s < 20; ++s) {
    UnramifiedTorusData t;
    for (long i = 0, r = uniform_int(rng, 1, 4); i < r; ++i)
      t.factors.emplace_back(static_cast<int>(uniform_int(rng, 1, 3)), uniform_int(rng, 0, 1) ? 1 : -1);
    const auto [d, c] = tate_series(t, 8);
    EXPECT_EQ(d, c);
  }
}

TEST(SignTwist, NegatedParameters) {
  Rng rng = substream(3, "twist");
  for (int s = 0; s < 10; ++s) {
    SatakeData d{{uniform_rational(rng, 5, 3, true), uniform_rational(rng, 5, 3, true)}, 3};
    SatakeData neg = d;
    for (auto& a : neg.params) a = -a;
    EXPECT_EQ(std_lfactor(neg, 1, 6), std_lfactor(d, -1, 6));
  }
}

TEST(BumpFriedberg, Examples) {
  EXPECT_TRUE(bf_unramified_check({{1, 1}, 4}, 1, 1, 4));
  EXPECT_TRUE(bf_unramified_check({{2, Rational(1, 2)}, 9}, -1, 1, 4));
  EXPECT_TRUE(bf_unramified_check({{3, Rational(1, 3)}, 9}, 1, -1, 4));
}

TEST(BumpFriedberg, RejectsBadData) {
  EXPECT_THROW(bf_unramified_check({{1, 1, 1}, 4}, 1, 1, 4), DomainError);
  EXPECT_THROW(bf_unramified_check({{1, 1}, 3}, 1, 1, 4), DomainError);
}

TEST(BumpFriedberg, WhittakerValuesMatchBialternant) {
  const SatakeData d{{Rational(2), Rational(-1, 3)}, Rational(25, 4)};
  const BivariateSeries z = bf_zeta_integral(d, -1, 1, 6);
  for (int k2 = 0; k2 <= 6; ++k2)
    for (int j = 0; j + k2 <= 6; ++j) {
      const Rational expected =
          pow(Rational(2, 5), j) * bialternant(k2 + j, k2, d.params[0], d.params[1]) * pow(Rational(-1), j);
      EXPECT_EQ(z.at(j, k2), expected);
    }
  EXPECT_EQ(schur2(3, 1, 2, 2), bialternant(3, 1, 2, 2));
}

TEST(BumpFriedberg, RandomRankOneData) {
  Rng rng = substream(4, "bf");
  for (int s = 0; s < 10; ++s) {
    const Rational root = uniform_rational(rng, 7, 3, true);
    const Rational q = root * root;
    if (q <= 1) continue;
    SatakeData d{{uniform_rational(rng, 5, 4, true), uniform_rational(rng, 5, 4, true)}, q};
    EXPECT_TRUE(bf_unramified_check(d, 1, -1, 6));
    EXPECT_TRUE(bf_unramified_check(d, -1, 1, 5));
  }
}

TEST(TruncatedSeries, InverseAndProduct) {
  const TruncatedSeries a = series(5, {2, 1, 0, -3, 1, 4});
  const TruncatedSeries one = a * a.inverse();
  EXPECT_EQ(one, TruncatedSeries::one(5));
  EXPECT_THROW(series(3, {0, 1}).inverse(), DomainError);
}
