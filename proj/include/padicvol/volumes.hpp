#pragma once

// The weighted volume family
//
//   vol_{n,a}(x) = sum_{lambda in Z^{n,+}_{[0,x]}} q^{a|lambda|} vol(K w^lambda K),
//   vol_{0,a}(x) = 1,
//
// computed by direct enumeration and by the two recursions (first-segment
// and zero-count), plus the closed-form constants A(n,a) and B_n.

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "padicvol/cartan.hpp"
#include "padicvol/errors.hpp"
#include "padicvol/qring.hpp"

namespace padicvol {

struct VolParams {
  int n = 0;      ///< rank
  int alpha = 0;  ///< weight exponent
  int x = 0;      ///< box bound
};

namespace detail {

inline void check_params(const VolParams& p) {
  if (p.n < 0) throw DomainError("vol: negative rank");
  if (p.x < 0) throw DomainError("vol: negative box bound");
}

}  // namespace detail

/// Calls f(lambda) for every lambda in Z^{n,+}_{[lo,hi]}.
template <class F>
void for_each_partition(int n, int lo, int hi, F&& f) {
  if (n == 0) {
    f(SignedPartition{});
    return;
  }
  if (lo > hi) return;
  std::vector<int> e(static_cast<std::size_t>(n), lo);
  while (true) {
    f(SignedPartition(e));
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == hi) --i;
    if (i < 0) return;
    const int v = e[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < n; ++j) e[static_cast<std::size_t>(j)] = v;
  }
}

/// Direct sum over the box; ground truth for the recursions.
inline RationalFunctionQ vol_direct(const VolParams& p) {
  detail::check_params(p);
  if (p.n == 0) return 1;
  RationalFunctionQ sum;
  for_each_partition(p.n, 0, p.x, [&](const SignedPartition& lambda) {
    sum += RationalFunctionQ::q_power(static_cast<int>(p.alpha * lambda.total())) * cell_volume(lambda);
  });
  return sum;
}

/// First-segment recursion:
///   vol_{n,a}(x) = sum_{y<=x} q^{a n y}
///     + sum_{1<=b<=n-1} [n,b]_q q^{a(n-b)} q^{a n (x-1)} sum_{y<=x-1} q^{-a n y} vol_{n-b,a+b}(y).
inline RationalFunctionQ vol_recur(const VolParams& p) {
  detail::check_params(p);
  std::map<std::tuple<int, int, int>, RationalFunctionQ> memo;
  std::function<RationalFunctionQ(int, int, int)> rec = [&](int n, int a, int x) -> RationalFunctionQ {
    if (n == 0) return 1;
    if (auto it = memo.find({n, a, x}); it != memo.end()) return it->second;
    RationalFunctionQ value;
    for (int y = 0; y <= x; ++y) value += RationalFunctionQ::q_power(a * n * y);
    for (int b = 1; b <= n - 1; ++b) {
      RationalFunctionQ inner;
      for (int y = 0; y <= x - 1; ++y) inner += RationalFunctionQ::q_power(-a * n * y) * rec(n - b, a + b, y);
      if (inner.is_zero()) continue;
      value += qbinom(n, b) * RationalFunctionQ::q_power(a * (n - b) + a * n * (x - 1)) * inner;
    }
    memo.emplace(std::make_tuple(n, a, x), value);
    return value;
  };
  return rec(p.n, p.alpha, p.x);
}

/// Recursion on the number b of zero entries:
///   vol_{n,a}(x) = sum_{0<=b<=n} [n,b]_q q^{a(n-b)} vol_{n-b,a+b}(x-1),
/// with the x = 0 base case taken from the direct sum.
class VolumeTable {
 public:
  RationalFunctionQ operator()(int n, int alpha, int x) {
    if (n < 0 || x < 0) throw DomainError("vol: negative rank or box bound");
    if (n == 0) return 1;
    if (auto it = memo_.find({n, alpha, x}); it != memo_.end()) return it->second;
    RationalFunctionQ value;
    if (x == 0) {
      value = vol_direct({n, alpha, 0});
    } else {
      for (int b = 0; b <= n; ++b)
        value += qbinom(n, b) * RationalFunctionQ::q_power(alpha * (n - b)) * (*this)(n - b, alpha + b, x - 1);
    }
    memo_.emplace(std::make_tuple(n, alpha, x), value);
    return value;
  }

 private:
  std::map<std::tuple<int, int, int>, RationalFunctionQ> memo_;
};

inline RationalFunctionQ vol_recur2(const VolParams& p) {
  detail::check_params(p);
  VolumeTable table;
  return table(p.n, p.alpha, p.x);
}

/// A(n,a) = prod_{i=0}^{n-1} (1 - q^{a+i})^{-1}, the constant germ term of
/// vol_{n,a} for a >= 1.
inline RationalFunctionQ const_term_A(int n, int alpha) {
  if (n < 0) throw DomainError("const_term_A: negative rank");
  if (alpha <= 0) throw DomainError("const_term_A: requires alpha >= 1");
  RationalFunctionQ r(1);
  for (int i = 0; i < n; ++i) r /= RationalFunctionQ::one_minus_q_power(alpha + i);
  return r;
}

/// B_n = n prod_{i=1}^{n-1} (1 - q^i)^{-1}, the coefficient of x in the germ of vol_{n,0}.
inline RationalFunctionQ linear_coeff_B(int n) {
  if (n <= 0) throw DomainError("linear_coeff_B: requires n >= 1");
  RationalFunctionQ r(n);
  for (int i = 1; i < n; ++i) r /= RationalFunctionQ::one_minus_q_power(i);
  return r;
}

/// (1 - q^{a n}) A(n,a) == sum_{b=1}^n [n,b]_q q^{a(n-b)} A(n-b, a+b), for a >= 1.
inline bool check_constant_term_identity(int n, int alpha) {
  const RationalFunctionQ lhs = RationalFunctionQ::one_minus_q_power(alpha * n) * const_term_A(n, alpha);
  RationalFunctionQ rhs;
  for (int b = 1; b <= n; ++b)
    rhs += qbinom(n, b) * RationalFunctionQ::q_power(alpha * (n - b)) * const_term_A(n - b, alpha + b);
  return lhs == rhs;
}

}  // namespace padicvol
