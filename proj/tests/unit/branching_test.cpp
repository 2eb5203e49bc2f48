#include <gtest/gtest.h>

#include <functional>

#include "padicvol/branching.hpp"

using namespace padicvol;

namespace {
PartitionNN P(std::vector<int> v) { return PartitionNN(std::move(v)); }

// Number of standard Young tableaux by the hook length formula.
double syt_count(const PartitionNN& l) {
  double r = 1;
  int cell = 0;
  for (int i = 0; i < l.length(); ++i)
    for (int j = 0; j < l.part(i); ++j) {
      int leg = 0;
      while (l.part(i + leg + 1) > j) ++leg;
      r *= ++cell;
      r /= (l.part(i) - j - 1) + leg + 1;
    }
  return r;
}

double binom(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool horizontal_strip(const PartitionNN& l, const PartitionNN& m) {
  if (!l.contains(m)) return false;
  for (int i = 0; i + 1 < l.length(); ++i)
    if (l.part(i + 1) > m.part(i)) return false;
  return true;
}

void for_each_dominant(int len, int lo, int hi, const std::function<void(const DominantWeight&)>& f) {
  std::vector<int> e(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i == len) return f(DominantWeight(e));
    for (int v = cap; v >= lo; --v) {
      e[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, hi);
}
}  // namespace

TEST(LrCoeff, Examples) {
  EXPECT_EQ(lr_coeff(P({1}), P({1}), P({1})), 0u);
  EXPECT_EQ(lr_coeff(P({2, 1}), P({1}), P({1, 1})), 1u);
  EXPECT_EQ(lr_coeff(P({2, 2}), P({2}), P({2})), 1u);
  EXPECT_EQ(lr_coeff(P({2, 1}), P({2}), P({1})), 1u);
  EXPECT_EQ(lr_coeff(P({2, 1}), P({1, 1}), P({1})), 1u);
  EXPECT_EQ(lr_coeff(P({3, 2, 1}), P({2, 1}), P({2, 1})), 2u);
}

TEST(LrCoeff, SquareOfTwoOneExpansion) {
  // s21^2 = s42 + s411 + s33 + 2 s321 + s3111 + s222 + s2211
  const std::vector<std::pair<PartitionNN, std::uint64_t>> expected{
      {P({4, 2}), 1}, {P({4, 1, 1}), 1}, {P({3, 3}), 1},    {P({3, 2, 1}), 2},
      {P({3, 1, 1, 1}), 1}, {P({2, 2, 2}), 1}, {P({2, 2, 1, 1}), 1}};
  for (const auto& [l, c] : expected) EXPECT_EQ(lr_coeff(l, P({2, 1}), P({2, 1})), c);
  EXPECT_EQ(lr_coeff(P({5, 1}), P({2, 1}), P({2, 1})), 0u);
  EXPECT_EQ(lr_coeff(P({2, 1, 1, 1, 1}), P({2, 1}), P({2, 1})), 0u);
}

TEST(LrCoeff, PieriRule) {
  for (int s = 0; s <= 6; ++s)
    for (const auto& l : detail::partitions_of(s, 4))
      for (int r = 0; r <= s; ++r)
        for (const auto& m : detail::partitions_of(s - r, 4))
          EXPECT_EQ(lr_coeff(l, m, P({r})), horizontal_strip(l, m) ? 1u : 0u);
}

TEST(LrCoeff, DimensionCount) {
  // sum_lambda c f^lambda = binom(|mu|+|nu|, |mu|) f^mu f^nu
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto& mu : detail::partitions_of(a, a))
        for (const auto& nu : detail::partitions_of(b, b)) {
          double total = 0;
          for (const auto& l : detail::partitions_of(a + b, a + b))
            total += static_cast<double>(lr_coeff(l, mu, nu)) * syt_count(l);
          EXPECT_DOUBLE_EQ(total, binom(a + b, a) * syt_count(mu) * syt_count(nu));
        }
}

TEST(LrCoeff, RejectsLargeShapes) { EXPECT_THROW(lr_coeff(P({41}), P({}), P({41})), DomainError); }

TEST(Branching, Examples) {
  EXPECT_EQ(branching_multiplicity(DominantWeight({1, -1})), 1u);
  EXPECT_EQ(branching_multiplicity(DominantWeight({1, 0})), 0u);
  EXPECT_EQ(branching_multiplicity(DominantWeight({2, 1, -1, -2})), 1u);
  EXPECT_EQ(branching_multiplicity(DominantWeight({0, 0})), 1u);
}

TEST(Branching, ExhaustiveAgreement) {
  for (int len = 2; len <= 6; len += 2)
    for_each_dominant(len, -3, 3, [&](const DominantWeight& l) {
      const std::uint64_t d = branching_delta(l);
      EXPECT_EQ(d, self_associate(l) ? 1u : 0u);
      EXPECT_EQ(branching_gamma_sum(l), d);
      const int m = std::max(0, -l[l.size() - 1]);
      EXPECT_EQ(branching_lr_oracle(l, m), d);
      EXPECT_EQ(branching_lr_oracle(l, m + 1), d);
    });
}

TEST(Branching, RejectsBadWeights) {
  EXPECT_THROW(DominantWeight({0, 1}), DomainError);
  EXPECT_THROW(branching_multiplicity(DominantWeight({1, 0, -1})), DomainError);
  EXPECT_THROW(branching_multiplicity(DominantWeight({5, -5})), DomainError);
  EXPECT_THROW(self_associate(DominantWeight({1})), DomainError);
}

TEST(SplitWeight, Parts) {
  const auto [p, m] = split_weight(DominantWeight({3, 1, 0, -2, -2}));
  EXPECT_EQ(p, P({3, 1}));
  EXPECT_EQ(m, P({2, 2}));
}
