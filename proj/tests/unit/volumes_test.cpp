#include <gtest/gtest.h>

#include "padicvol/volumes.hpp"

using namespace padicvol;

namespace {
RationalFunctionQ rf(const char* s) { return RationalFunctionQ::parse(s); }
}  // namespace

TEST(VolDirect, Examples) {
  EXPECT_EQ(vol_direct({0, 5, 7}), RationalFunctionQ(1));
  EXPECT_EQ(vol_direct({1, 0, 4}), RationalFunctionQ(5));
  EXPECT_EQ(vol_direct({2, 0, 1}), rf("q+3"));
  EXPECT_THROW(vol_direct({-1, 0, 1}), DomainError);
}

TEST(VolRecur, Examples) {
  EXPECT_EQ(vol_recur({1, 2, 3}), rf("q^6+q^4+q^2+1"));
  EXPECT_EQ(vol_recur({0, 0, 0}), RationalFunctionQ(1));
  EXPECT_EQ(vol_recur({2, 0, 1}), rf("q+3"));
}

TEST(VolRecur2, Examples) {
  EXPECT_EQ(vol_recur2({1, 0, 3}), RationalFunctionQ(4));
  EXPECT_EQ(vol_recur2({0, 3, 2}), RationalFunctionQ(1));
  EXPECT_EQ(vol_recur2({2, 1, 2}), vol_direct({2, 1, 2}));
}

TEST(Volumes, ThreeMethodsAgree) {
  for (int n = 0; n <= 3; ++n)
    for (int a = -2; a <= 2; ++a)
      for (int x = 0; x <= 4; ++x) {
        const RationalFunctionQ d = vol_direct({n, a, x});
        EXPECT_EQ(d, vol_recur({n, a, x})) << n << "," << a << "," << x;
        EXPECT_EQ(d, vol_recur2({n, a, x})) << n << "," << a << "," << x;
      }
}

TEST(Volumes, FunctionalEquation) {
  VolumeTable t;
  for (int n = 0; n <= 4; ++n)
    for (int a = -3; a <= 3; ++a)
      for (int x = 0; x <= 6; ++x) EXPECT_EQ(t(n, a, x), RationalFunctionQ::q_power(n * a * x) * t(n, -a, x));
}

TEST(Constants, A) {
  EXPECT_EQ(const_term_A(0, 3), RationalFunctionQ(1));
  EXPECT_EQ(const_term_A(1, 2), rf("1/(1-q^2)"));
  EXPECT_EQ(const_term_A(2, 1), rf("1/((1-q)*(1-q^2))"));
  EXPECT_THROW(const_term_A(2, 0), DomainError);
}

TEST(Constants, B) {
  EXPECT_EQ(linear_coeff_B(1), RationalFunctionQ(1));
  EXPECT_EQ(linear_coeff_B(2), rf("2/(1-q)"));
  EXPECT_EQ(linear_coeff_B(3), rf("3/((1-q)*(1-q^2))"));
  EXPECT_THROW(linear_coeff_B(0), DomainError);
}

TEST(Constants, QBinomialConstantTermIdentity) {
  for (int n = 0; n <= 5; ++n)
    for (int a = 1; a <= 6; ++a) EXPECT_TRUE(check_constant_term_identity(n, a)) << n << "," << a;
}
