#pragma once

// Cartan cells K w^lambda K of GL_n(F).
//
// Convention: lambda is WEAKLY INCREASING, lambda_1 <= ... <= lambda_n, and
// indexes the double coset of diag(w^lambda_1, ..., w^lambda_n). All index
// arithmetic in volumes/germs/orbital assumes this ordering. (The branching
// module uses the usual decreasing convention for dominant weights; the two
// never mix.)
//
// Volumes are normalized so that vol(K) = 1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "padicvol/errors.hpp"
#include "padicvol/qring.hpp"

namespace padicvol {

/// Weakly increasing integer tuple (an element of Z^{n,+}).
class SignedPartition {
 public:
  SignedPartition() = default;
  explicit SignedPartition(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!std::is_sorted(entries_.begin(), entries_.end()))
      throw DomainError("SignedPartition must be weakly increasing");
  }

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  bool empty() const { return entries_.empty(); }

  /// |lambda| = sum of entries.
  long total() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

  SignedPartition shifted(int c) const {
    std::vector<int> e = entries_;
    for (auto& x : e) x += c;
    return SignedPartition(std::move(e));
  }

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
  friend auto operator<=>(const SignedPartition&, const SignedPartition&) = default;

 private:
  std::vector<int> entries_;
};

/// Ordered run lengths (n_1, ..., n_s) of equal consecutive entries.
struct SegmentType {
  std::vector<int> lengths;
  friend bool operator==(const SegmentType&, const SegmentType&) = default;
};

inline SegmentType type_of(const SignedPartition& lambda) {
  if (lambda.empty()) throw DomainError("type_of: empty partition");
  SegmentType t;
  int run = 1;
  for (int i = 1; i < lambda.size(); ++i) {
    if (lambda[i] == lambda[i - 1]) {
      ++run;
    } else {
      t.lengths.push_back(run);
      run = 1;
    }
  }
  t.lengths.push_back(run);
  return t;
}

/// delta(w^lambda)^{-1} = q^{sum_{i<j} (lambda_j - lambda_i)}.
inline RationalFunctionQ delta_inv(const SignedPartition& lambda) {
  long e = 0;
  for (int i = 0; i < lambda.size(); ++i)
    for (int j = i + 1; j < lambda.size(); ++j) e += lambda[j] - lambda[i];
  return RationalFunctionQ::q_power(static_cast<int>(e));
}

/// mu(M_lambda)/mu(G) for a segment type, i.e. prod mu(GL_{n_i}) / mu(GL_n).
inline RationalFunctionQ levi_ratio(const SegmentType& t) {
  static std::mutex mutex;
  static std::map<std::vector<int>, RationalFunctionQ> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t.lengths); it != cache.end()) return it->second;
  }
  RationalFunctionQ r(1);
  int n = 0;
  for (int len : t.lengths) {
    r *= mu_gl(len);
    n += len;
  }
  r /= mu_gl(n);
  std::lock_guard lock(mutex);
  cache.emplace(t.lengths, r);
  return r;
}

/// vol(K w^lambda K) = mu(M_lambda)/mu(G) * delta(w^lambda)^{-1}.
inline RationalFunctionQ cell_volume(const SignedPartition& lambda) {
  return levi_ratio(type_of(lambda)) * delta_inv(lambda);
}

namespace detail {

inline int padic_val(std::int64_t x, int p) {
  if (x == 0) return 1 << 20;
  int v = 0;
  if (x < 0) x = -x;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Elementary-divisor exponents of a lower-triangular n x n integer matrix
// (n <= 3) from its determinantal divisors d_k = min valuation of k x k minors.
inline std::vector<int> elementary_divisors(const std::array<std::array<std::int64_t, 3>, 3>& m, int n,
                                            int p) {
  std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
  int v1 = 1 << 20;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v1 = std::min(v1, padic_val(m[i][j], p));
  d[1] = v1;
  if (n >= 2) {
    int v2 = 1 << 20;
    for (int r0 = 0; r0 < n; ++r0)
      for (int r1 = r0 + 1; r1 < n; ++r1)
        for (int c0 = 0; c0 < n; ++c0)
          for (int c1 = c0 + 1; c1 < n; ++c1) {
            const std::int64_t minor = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
            v2 = std::min(v2, padic_val(minor, p));
          }
    d[2] = v2;
  }
  if (n == 3) {
    const std::int64_t det = m[0][0] * m[1][1] * m[2][2];  // lower triangular
    d[3] = padic_val(det, p);
  }
  std::vector<int> out;
  for (int k = 1; k <= n; ++k) out.push_back(d[k] - d[k - 1]);
  return out;
}

}  // namespace detail

/// Number of right cosets gK inside K w^lambda K, counted as the sublattices
/// L of O^n whose quotient O^n/L has elementary divisors w^{lambda_i}.
/// Enumerates Hermite normal forms (lower triangular, diagonal p^{e_i},
/// row i reduced mod p^{e_i}) with e_i <= max(lambda), sum e_i = |lambda|,
/// and classifies each by its Smith form. Supported range: n <= 3, the
/// shifted entries in [0,3], p prime <= 7.
inline std::uint64_t count_cosets_oracle(const SignedPartition& lambda, int p) {
  if (lambda.empty() || lambda.size() > 3) throw DomainError("count_cosets_oracle: need 1 <= n <= 3");
  if (!is_prime(p) || p > 7) throw DomainError("count_cosets_oracle: p must be a prime <= 7");
  const SignedPartition shifted = lambda.shifted(-lambda[0]);
  const int n = shifted.size();
  const int top = shifted[n - 1];
  if (top > 3) throw DomainError("count_cosets_oracle: entries exceed supported bound 3");
  const int total = static_cast<int>(shifted.total());
  const std::vector<int> target = shifted.entries();

  std::vector<std::int64_t> ppow(static_cast<std::size_t>(top) + 1, 1);
  for (int i = 1; i <= top; ++i) ppow[static_cast<std::size_t>(i)] = ppow[static_cast<std::size_t>(i) - 1] * p;

  std::uint64_t count = 0;
  std::array<std::array<std::int64_t, 3>, 3> m{};
  std::vector<int> e(static_cast<std::size_t>(n), 0);

  // Iterate over all diagonal exponent vectors.
  auto visit_diag = [&]() {
    for (auto& row : m) row.fill(0);
    for (int i = 0; i < n; ++i) m[i][i] = ppow[static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
    // Free entries: (i, j) with j < i, range [0, p^{e_i}).
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) slots.emplace_back(i, j);
    std::vector<std::int64_t> val(slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < slots.size(); ++s) m[slots[s].first][slots[s].second] = val[s];
      std::vector<int> ed = detail::elementary_divisors(m, n, p);
      std::sort(ed.begin(), ed.end());
      if (ed == target) ++count;
      std::size_t s = 0;
      for (; s < slots.size(); ++s) {
        const std::int64_t bound = ppow[static_cast<std::size_t>(e[static_cast<std::size_t>(slots[s].first)])];
        if (++val[s] < bound) break;
        val[s] = 0;
      }
      if (s == slots.size()) break;
    }
  };

  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == n) {
      if (remaining == 0) visit_diag();
      return;
    }
    for (int v = 0; v <= std::min(top, remaining); ++v) {
      e[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return count;
}

}  // namespace padicvol
