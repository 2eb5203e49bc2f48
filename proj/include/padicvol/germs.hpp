#pragma once

// Germ expansions  f(x) = sum_{(a,b)} c_{a,b} q^{a x} x^b  for x >= x0.
//
// Fitting works on the generating function of the shifted samples
// g(k) = f(x0 + k): when f has the stated support, sum g(k) z^k equals
// P(z) / prod_a (1 - q^a z)^{m_a} with deg P below the denominator degree,
// so P comes from the first samples and the c_{a,b} from the partial
// fraction expansion at each pole.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "padicvol/errors.hpp"
#include "padicvol/qring.hpp"
#include "padicvol/volumes.hpp"

namespace padicvol {

class GermExpansion {
 public:
  using Key = std::pair<int, int>;  // (a, b)

  GermExpansion() = default;
  GermExpansion(std::map<Key, RationalFunctionQ> terms, int validity_from)
      : terms_(std::move(terms)), validity_from_(validity_from) {
    if (validity_from_ < 0) throw DomainError("germ: negative validity threshold");
    for (const auto& [k, c] : terms_)
      if (k.second < 0) throw DomainError("germ: negative power of x");
    prune();
  }

  const std::map<Key, RationalFunctionQ>& terms() const { return terms_; }
  int validity_from() const { return validity_from_; }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of q^{a x} x^b (zero when absent).
  RationalFunctionQ coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? RationalFunctionQ() : it->second;
  }

  /// sum c_{a,b} q^{a x} x^b; refuses x below the validity threshold.
  RationalFunctionQ eval(int x) const {
    if (x < validity_from_) throw DomainError("germ evaluated below its validity threshold");
    return eval_unchecked(x);
  }

  RationalFunctionQ eval_unchecked(long x) const {
    RationalFunctionQ sum;
    for (const auto& [k, c] : terms_) {
      Integer xb = 1;
      for (int i = 0; i < k.second; ++i) xb *= x;
      sum += c * RationalFunctionQ::q_power(static_cast<int>(k.first * x)) * RationalFunctionQ(Rational(xb));
    }
    return sum;
  }

  /// Multiplies by q^{s x}: every term (a,b) moves to (a+s,b).
  GermExpansion shift_exponent(int s) const {
    std::map<Key, RationalFunctionQ> t;
    for (const auto& [k, c] : terms_) t.emplace(Key{k.first + s, k.second}, c);
    return GermExpansion(std::move(t), validity_from_);
  }

  GermExpansion scaled(const RationalFunctionQ& s) const {
    std::map<Key, RationalFunctionQ> t;
    for (const auto& [k, c] : terms_) t.emplace(k, c * s);
    return GermExpansion(std::move(t), validity_from_);
  }

  /// Sum of two expansions; valid where both are.
  friend GermExpansion operator+(const GermExpansion& x, const GermExpansion& y) {
    std::map<Key, RationalFunctionQ> t = x.terms_;
    for (const auto& [k, c] : y.terms_) t[k] += c;
    return GermExpansion(std::move(t), std::max(x.validity_from_, y.validity_from_));
  }

  /// Equality of term maps (the validity threshold is not compared).
  friend bool operator==(const GermExpansion& x, const GermExpansion& y) { return x.terms_ == y.terms_; }

 private:
  void prune() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  }

  std::map<Key, RationalFunctionQ> terms_;
  int validity_from_ = 0;
};

inline RationalFunctionQ eval_germ(const GermExpansion& g, int x) { return g.eval(x); }

/// Admissible exponents: a -> largest power of x allowed with q^{a x}.
struct GermSupport {
  std::map<int, int> max_b;

  /// The rectangle 0 <= a <= a_max, 0 <= b <= b_max.
  static GermSupport rectangle(int a_max, int b_max) {
    if (a_max < 0 || b_max < 0) throw DomainError("germ support: negative bound");
    GermSupport s;
    for (int a = 0; a <= a_max; ++a) s.max_b[a] = b_max;
    return s;
  }

  int unknowns() const {
    int m = 0;
    for (const auto& [a, b] : max_b) m += b + 1;
    return m;
  }
  int b_max() const {
    int m = 0;
    for (const auto& [a, b] : max_b) m = std::max(m, b);
    return m;
  }

  /// Every power of x allowed one step further.
  GermSupport widened() const {
    GermSupport s = *this;
    for (auto& [a, b] : s.max_b) b = 2 * b + 1;
    return s;
  }
};

namespace detail {

using SeriesQq = std::vector<RationalFunctionQ>;

inline SeriesQq truncated_mul(const SeriesQq& x, const SeriesQq& y, std::size_t order) {
  SeriesQq r(std::min(order, x.size() + y.size()));
  for (std::size_t i = 0; i < x.size() && i < order; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size() && i + j < order; ++j) r[i + j] += x[i] * y[j];
  }
  return r;
}

// x / y as a power series modulo w^order; y[0] must be nonzero.
inline SeriesQq series_div(const SeriesQq& x, const SeriesQq& y, std::size_t order) {
  const RationalFunctionQ inv0 = y.at(0).inverse();
  SeriesQq r(order);
  for (std::size_t k = 0; k < order; ++k) {
    RationalFunctionQ acc = k < x.size() ? x[k] : RationalFunctionQ();
    for (std::size_t j = 1; j <= k && j < y.size(); ++j) acc -= y[j] * r[k - j];
    r[k] = acc * inv0;
  }
  return r;
}

// Coefficients in x of binom(x - x0 + j - 1, j - 1).
inline std::vector<Rational> shifted_binomial(int j, int x0) {
  std::vector<Rational> p{Rational(1)};
  for (int i = 1; i <= j - 1; ++i) {
    // multiply by (x - x0 + i) / i
    std::vector<Rational> r(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      r[k + 1] += p[k];
      r[k] += p[k] * (i - x0);
    }
    for (auto& v : r) v /= i;
    p = std::move(r);
  }
  return p;
}

}  // namespace detail

using Sampler = std::function<RationalFunctionQ(int)>;

/// Fits f(x) for x >= x0 inside the given support and checks the result on
/// held-out points; throws FitError carrying the first mismatching x.
inline GermExpansion fit_germ(const Sampler& sampler, const GermSupport& support, int x0) {
  if (x0 < 0) throw DomainError("fit_germ: negative x0");
  const int m_total = support.unknowns();
  if (m_total == 0) throw DomainError("fit_germ: empty support");
  const std::size_t M = static_cast<std::size_t>(m_total);

  detail::SeriesQq g(M);
  for (std::size_t k = 0; k < M; ++k) g[k] = sampler(x0 + static_cast<int>(k));

  // D(z) = prod (1 - q^a z)^{m_a}
  detail::SeriesQq denom{RationalFunctionQ(1)};
  for (const auto& [a, b] : support.max_b)
    for (int i = 0; i <= b; ++i) denom = mul(denom, detail::SeriesQq{RationalFunctionQ(1), -RationalFunctionQ::q_power(a)});
  const detail::SeriesQq P = detail::truncated_mul(g, denom, M);

  std::map<GermExpansion::Key, RationalFunctionQ> terms;
  for (const auto& [a, b] : support.max_b) {
    const std::size_t m = static_cast<std::size_t>(b) + 1;
    // z = (1 - w) / u with u = q^a, so 1 - u z = w.
    const RationalFunctionQ u_inv = RationalFunctionQ::q_power(-a);
    const detail::SeriesQq t{u_inv, -u_inv};
    detail::SeriesQq num;
    for (std::size_t k = P.size(); k-- > 0;) {
      num = detail::truncated_mul(num, t, m);
      if (num.empty()) num.resize(1);
      num[0] += P[k];
    }
    detail::SeriesQq den{RationalFunctionQ(1)};
    for (const auto& [a2, b2] : support.max_b) {
      if (a2 == a) continue;
      const RationalFunctionQ r = RationalFunctionQ::q_power(a2 - a);
      const detail::SeriesQq f{RationalFunctionQ(1) - r, r};
      for (int i = 0; i <= b2; ++i) den = detail::truncated_mul(den, f, m);
    }
    const detail::SeriesQq e = detail::series_div(num, den, m);
    // Principal part sum_j e_{m-j} w^{-j}; coefficient of z^k in
    // (1 - u z)^{-j} is binom(k + j - 1, j - 1) u^k.
    const RationalFunctionQ back = RationalFunctionQ::q_power(-a * x0);
    for (std::size_t j = 1; j <= m; ++j) {
      const RationalFunctionQ& r = e[m - j];
      if (r.is_zero()) continue;
      const std::vector<Rational> poly = detail::shifted_binomial(static_cast<int>(j), x0);
      for (std::size_t bb = 0; bb < poly.size(); ++bb)
        if (poly[bb] != 0) terms[{a, static_cast<int>(bb)}] += r * back * RationalFunctionQ(poly[bb]);
    }
  }

  GermExpansion result(std::move(terms), x0);
  const int held_out = std::max(2 * support.b_max(), 2);
  for (int k = 0; k < held_out; ++k) {
    const int x = x0 + m_total + k;
    if (result.eval(x) != sampler(x))
      throw FitError("germ fit failed verification at x = " + std::to_string(x), x);
  }
  return result;
}

/// Support of vol_{n,alpha} read off from the zero-count recursion:
/// (1 - q^{n alpha} S) vol_{n,alpha} is a combination of vol_{n-b,alpha+b}.
inline GermSupport vol_support(int n, int alpha) {
  if (n < 0) throw DomainError("vol_support: negative rank");
  if (n == 0) return GermSupport{{{0, 0}}};
  GermSupport s;
  for (int b = 1; b <= n; ++b)
    for (const auto& [a, mb] : vol_support(n - b, alpha + b).max_b) {
      auto [it, inserted] = s.max_b.emplace(a, mb);
      if (!inserted) it->second = std::max(it->second, mb);
    }
  auto [it, inserted] = s.max_b.emplace(n * alpha, 0);
  if (!inserted) it->second += 1;
  return s;
}

/// Germ of vol_{n,alpha}, valid for x >= 1. Memoized.
inline GermExpansion germ_of_vol(int n, int alpha) {
  if (n < 0) throw DomainError("germ_of_vol: negative rank");
  if (n > 4) throw DomainError("germ_of_vol: rank above supported bound 4");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, GermExpansion> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, alpha}); it != cache.end()) return it->second;
  }
  VolumeTable table;
  const Sampler sampler = [&](int x) { return table(n, alpha, x); };
  const GermSupport support = vol_support(n, alpha);
  GermExpansion g;
  try {
    g = fit_germ(sampler, support, 1);
  } catch (const FitError&) {
    g = fit_germ(sampler, support.widened(), 1);
  }
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(n, alpha), g);
  return g;
}

}  // namespace padicvol
