#pragma once

// Branching from U(2n) to U(n) x U(n) for the trivial representation.
//
// Weights here use the usual DECREASING convention lambda_1 >= ... >= lambda_m,
// unlike SignedPartition in cartan.hpp.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "padicvol/errors.hpp"

namespace padicvol {

/// Weakly decreasing integer tuple, entries of any sign.
class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> e) : e_(std::move(e)) {
    if (!std::is_sorted(e_.rbegin(), e_.rend())) throw DomainError("dominant weight must be weakly decreasing");
  }
  const std::vector<int>& entries() const { return e_; }
  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

  DominantWeight shifted(int c) const {
    std::vector<int> e = e_;
    for (auto& x : e) x += c;
    return DominantWeight(std::move(e));
  }

 private:
  std::vector<int> e_;
};

/// Weakly decreasing nonnegative tuple; trailing zeros are dropped.
class PartitionNN {
 public:
  PartitionNN() = default;
  explicit PartitionNN(std::vector<int> e) : e_(std::move(e)) {
    if (!std::is_sorted(e_.rbegin(), e_.rend())) throw DomainError("partition must be weakly decreasing");
    if (!e_.empty() && e_.back() < 0) throw DomainError("partition entries must be nonnegative");
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }
  /// (m^k)
  static PartitionNN rectangle(int m, int k) {
    return PartitionNN(std::vector<int>(static_cast<std::size_t>(m > 0 ? k : 0), m));
  }

  const std::vector<int>& entries() const { return e_; }
  int length() const { return static_cast<int>(e_.size()); }
  int part(int i) const { return i < length() ? e_[static_cast<std::size_t>(i)] : 0; }
  int size() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  bool contains(const PartitionNN& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
      if (mu.part(i) > part(i)) return false;
    return true;
  }

  friend bool operator==(const PartitionNN&, const PartitionNN&) = default;
  friend auto operator<=>(const PartitionNN&, const PartitionNN&) = default;

 private:
  std::vector<int> e_;
};

inline constexpr int kLrSizeBound = 40;

/// c^lambda_{mu nu}: Littlewood-Richardson fillings of lambda/mu with content
/// nu, rows weakly increasing, columns strictly increasing, and the reverse
/// reading word (rows top to bottom, each right to left) a lattice word.
inline std::uint64_t lr_coeff(const PartitionNN& lambda, const PartitionNN& mu, const PartitionNN& nu) {
  if (lambda.size() > kLrSizeBound || mu.size() > kLrSizeBound || nu.size() > kLrSizeBound)
    throw DomainError("lr_coeff: partition size above supported bound 40");
  if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu)) return 0;
  if (nu.length() == 0) return 1;
  const int rows = lambda.length();
  const int k = nu.length();
  // cells in reading order
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = lambda.part(r) - 1; c >= mu.part(r); --c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda.part(r)), 0);
  std::vector<int> count(static_cast<std::size_t>(k) + 1, 0);
  std::uint64_t total = 0;

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    const auto [r, c] = cells[idx];
    auto& row = t[static_cast<std::size_t>(r)];
    // row weakly increasing: value <= right neighbour (already placed)
    int hi = k;
    if (c + 1 < lambda.part(r)) hi = std::min(hi, row[static_cast<std::size_t>(c + 1)]);
    // column strict: value > the cell above when it lies in the skew shape
    int lo = 1;
    if (r > 0 && c >= mu.part(r - 1)) lo = t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1;
    for (int v = lo; v <= hi; ++v) {
      auto& cv = count[static_cast<std::size_t>(v)];
      if (cv >= nu.part(v - 1)) continue;
      if (v > 1 && cv + 1 > count[static_cast<std::size_t>(v - 1)]) continue;
      ++cv;
      row[static_cast<std::size_t>(c)] = v;
      self(self, idx + 1);
      --cv;
    }
    row[static_cast<std::size_t>(c)] = 0;
  };
  rec(rec, 0);
  return total;
}

/// lambda_i + lambda_{2n+1-i} = 0 for all i.
inline bool self_associate(const DominantWeight& lambda) {
  const int m = lambda.size();
  if (m % 2 != 0) throw DomainError("self_associate: weight length must be even");
  for (int i = 0; i < m; ++i)
    if (lambda[i] + lambda[m - 1 - i] != 0) return false;
  return true;
}

/// (lambda+, lambda-): positive parts, and negated negative parts.
inline std::pair<PartitionNN, PartitionNN> split_weight(const DominantWeight& lambda) {
  std::vector<int> plus, minus;
  for (int v : lambda.entries())
    if (v > 0) plus.push_back(v);
  for (int i = lambda.size() - 1; i >= 0; --i)
    if (lambda[i] < 0) minus.push_back(-lambda[i]);
  return {PartitionNN(plus), PartitionNN(minus)};
}

namespace detail {

inline void check_branching_bounds(const DominantWeight& lambda) {
  if (lambda.size() % 2 != 0 || lambda.size() == 0) throw DomainError("branching: weight length must be even and positive");
  if (lambda.size() > 8) throw DomainError("branching: length above supported bound 8");
  for (int v : lambda.entries())
    if (v < -4 || v > 4) throw DomainError("branching: entries above supported bound 4");
}

/// Partitions of `size` with at most `max_len` parts.
inline std::vector<PartitionNN> partitions_of(int size, int max_len) {
  std::vector<PartitionNN> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = std::min(cap, remaining); v >= 1; --v) {
      cur.push_back(v);
      self(self, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(rec, size, size);
  return out;
}

}  // namespace detail

/// The full sum over gamma+, gamma-, gamma0 of
///   c^{gamma+}_{0 0} c^{gamma-}_{0 0} c^{lambda+}_{0 gamma0} c^{lambda-}_{0 gamma0},
/// with every gamma running over partitions of at most n parts and of size
/// at most |lambda+| + |lambda-|.
inline std::uint64_t branching_gamma_sum(const DominantWeight& lambda) {
  detail::check_branching_bounds(lambda);
  const int n = lambda.size() / 2;
  const auto [lp, lm] = split_weight(lambda);
  const int bound = lp.size() + lm.size();
  std::vector<PartitionNN> all;
  for (int s = 0; s <= bound; ++s)
    for (auto& g : detail::partitions_of(s, n)) all.push_back(g);
  const PartitionNN zero;
  std::uint64_t total = 0;
  for (const auto& gp : all) {
    const std::uint64_t a = lr_coeff(gp, zero, zero);
    if (a == 0) continue;
    for (const auto& gm : all) {
      const std::uint64_t b = lr_coeff(gm, zero, zero);
      if (b == 0) continue;
      for (const auto& g0 : all) total += a * b * lr_coeff(lp, zero, g0) * lr_coeff(lm, zero, g0);
    }
  }
  return total;
}

/// The collapsed form: [lambda+ = lambda-].
inline std::uint64_t branching_delta(const DominantWeight& lambda) {
  detail::check_branching_bounds(lambda);
  const auto [lp, lm] = split_weight(lambda);
  return lp == lm ? 1 : 0;
}

/// Multiplicity of det^m x det^m in the polynomial representation of highest
/// weight lambda + m: c^{lambda+m}_{(m^n),(m^n)}. Needs m >= -lambda_{2n}.
inline std::uint64_t branching_lr_oracle(const DominantWeight& lambda, int m) {
  detail::check_branching_bounds(lambda);
  const int n = lambda.size() / 2;
  if (m < 0 || m < -lambda[lambda.size() - 1]) throw DomainError("branching oracle: shift too small");
  return lr_coeff(PartitionNN(lambda.shifted(m).entries()), PartitionNN::rectangle(m, n), PartitionNN::rectangle(m, n));
}

/// dim Hom_{U(n) x U(n)}(F^lambda, 1), computed by the delta formula and by
/// the determinant-shift oracle; the two must agree.
inline std::uint64_t branching_multiplicity(const DominantWeight& lambda) {
  const std::uint64_t delta = branching_delta(lambda);
  const int m = std::max(0, -lambda[lambda.size() - 1]);
  const std::uint64_t oracle = branching_lr_oracle(lambda, m);
  if (delta != oracle) throw std::logic_error("branching: delta formula and LR oracle disagree");
  return delta;
}

}  // namespace padicvol
