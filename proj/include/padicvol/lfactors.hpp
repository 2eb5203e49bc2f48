#pragma once

// Unramified local L-factors as truncated power series in T = q^{-s}.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "padicvol/errors.hpp"
#include "padicvol/rational.hpp"

namespace padicvol {

/// c_0 + c_1 T + ... + c_D T^D, exact through degree D.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(check(order)) + 1) {}
  TruncatedSeries(int order, std::vector<Rational> coeffs) : c_(static_cast<std::size_t>(check(order)) + 1) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.c_[0] = 1;
    return s;
  }

  /// (1 - c T^d)^{-1} through degree D.
  static TruncatedSeries geometric(const Rational& c, int d, int order) {
    if (d < 1) throw DomainError("geometric series: degree must be >= 1");
    TruncatedSeries s(order);
    Rational p = 1;
    for (int k = 0; k * d <= order; ++k) {
      s.c_[static_cast<std::size_t>(k * d)] = p;
      p *= c;
    }
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int D = std::min(a.order(), b.order());
    TruncatedSeries r(D);
    for (int i = 0; i <= D; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= D; ++j) r.c_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return r;
  }

  TruncatedSeries inverse() const {
    if (c_[0] == 0) throw DomainError("series inverse needs a nonzero constant term");
    TruncatedSeries r(order());
    const Rational inv0 = 1 / c_[0];
    for (int k = 0; k <= order(); ++k) {
      Rational acc = k == 0 ? Rational(1) : Rational(0);
      for (int j = 1; j <= k; ++j) acc -= c_[static_cast<std::size_t>(j)] * r[k - j];
      r[k] = acc * inv0;
    }
    return r;
  }

  /// T -> c T.
  TruncatedSeries rescaled(const Rational& c) const {
    TruncatedSeries r = *this;
    Rational p = 1;
    for (auto& x : r.c_) {
      x *= p;
      p *= c;
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static int check(int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    return order;
  }
  std::vector<Rational> c_;
};

/// Satake parameters together with a numeric residue cardinality.
struct SatakeData {
  std::vector<Rational> params;
  Rational q_val = 3;

  void validate() const {
    for (const auto& a : params)
      if (a == 0) throw DomainError("Satake parameters must be nonzero");
    if (q_val <= 1) throw DomainError("residue cardinality must exceed 1");
  }
};

namespace detail {

inline void check_sign(int s) {
  if (s != 1 && s != -1) throw DomainError("character sign must be +1 or -1");
}

/// prod_r (1 - r T)^{-1}
inline TruncatedSeries euler_product(const std::vector<Rational>& roots, int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (const auto& r : roots) s = s * TruncatedSeries::geometric(r, 1, order);
  return s;
}

/// Exact square root of a nonnegative rational, if it exists.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rational(n, d);
}

}  // namespace detail

/// prod_i (1 - eta alpha_i T)^{-1}.
inline TruncatedSeries std_lfactor(const SatakeData& s, int eta, int order) {
  s.validate();
  detail::check_sign(eta);
  std::vector<Rational> roots;
  for (const auto& a : s.params) roots.push_back(a * eta);
  return detail::euler_product(roots, order);
}

/// Index set for the exterior square: i < j, or every i != j.
enum class Pairs { Ordered, Distinct };

inline std::vector<Rational> ext_sq_roots(const std::vector<Rational>& params, Pairs pairs) {
  std::vector<Rational> roots;
  const std::size_t m = params.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (pairs == Pairs::Ordered ? i < j : i != j) roots.push_back(params[i] * params[j]);
  return roots;
}

/// prod over pairs of (1 - eta alpha_i alpha_j T)^{-1}.
inline TruncatedSeries ext_sq_lfactor(const SatakeData& s, int eta, int order, Pairs pairs = Pairs::Ordered) {
  s.validate();
  detail::check_sign(eta);
  if (s.params.size() < 2) throw DomainError("exterior square needs at least two Satake parameters");
  std::vector<Rational> roots = ext_sq_roots(s.params, pairs);
  for (auto& r : roots) r *= eta;
  return detail::euler_product(roots, order);
}

/// L(s + a, wedge^2) against the |.|^a-twisted factor: T -> q^{-a} T on one
/// side, alpha_i alpha_j -> alpha_i alpha_j q^{-a} on the other.
inline bool check_ext_sq_shift(const SatakeData& s, int a, int order) {
  const Rational qa = pow(s.q_val, -a);
  const TruncatedSeries shifted = ext_sq_lfactor(s, 1, order).rescaled(qa);
  std::vector<Rational> roots = ext_sq_roots(s.params, Pairs::Ordered);
  for (auto& r : roots) r *= qa;
  return shifted == detail::euler_product(roots, order);
}

/// Torus prod_i Res_{F_i/F} G_m with unramified F_i of degree d_i and the
/// character sign eps_i on a uniformizer.
struct UnramifiedTorusData {
  std::vector<std::pair<int, int>> factors;  // (d_i, eps_i)

  void validate() const {
    for (const auto& [d, e] : factors) {
      if (d < 1) throw DomainError("torus factor degree must be >= 1");
      detail::check_sign(e);
    }
  }
};

/// (lattice sum, Euler product). The lattice sum runs over valuation vectors
/// (k_i) with sum d_i k_i <= D, weighting each by prod eps_i^{k_i} T^{d_i k_i}.
inline std::pair<TruncatedSeries, TruncatedSeries> tate_series(const UnramifiedTorusData& t, int order) {
  t.validate();
  TruncatedSeries direct(order);
  const std::size_t r = t.factors.size();
  std::vector<int> k(r, 0);
  auto rec = [&](auto&& self, std::size_t i, int deg, const Rational& weight) -> void {
    if (i == r) {
      direct[deg] += weight;
      return;
    }
    const auto [d, e] = t.factors[i];
    Rational w = weight;
    for (int ki = 0; deg + d * ki <= order; ++ki) {
      self(self, i + 1, deg + d * ki, w);
      w *= e;
    }
  };
  rec(rec, 0, 0, Rational(1));

  TruncatedSeries closed = TruncatedSeries::one(order);
  for (const auto& [d, e] : t.factors) {
    TruncatedSeries factor = TruncatedSeries::one(order);
    if (d <= order) factor[d] = -e;
    closed = closed * factor.inverse();
  }
  return {direct, closed};
}

/// Bivariate series sum c_{i,j} T1^i T0^j, kept for i + j <= D.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw DomainError("series order must be >= 0");
    for (int i = 0; i <= order; ++i) c_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(order - i) + 1);
  }
  int order() const { return order_; }
  Rational& at(int i, int j) { return c_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
  const Rational& at(int i, int j) const { return c_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }

  /// Product of a series in T1 and a series in T0.
  static BivariateSeries outer(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
    BivariateSeries r(order);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j) r.at(i, j) = a[i] * b[j];
    return r;
  }

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  int order_;
  std::vector<std::vector<Rational>> c_;
};

/// Schur polynomial s_{(k1,k2)}(a1, a2), k1 >= k2 >= 0, as the sum over
/// semistandard fillings of the two-row shape.
inline Rational schur2(int k1, int k2, const Rational& a1, const Rational& a2) {
  if (k1 < k2 || k2 < 0) throw DomainError("schur2: need k1 >= k2 >= 0");
  Rational sum = 0;
  for (int j = 0; j <= k1 - k2; ++j) sum += pow(a1, k2 + j) * pow(a2, k2 + (k1 - k2 - j));
  return sum;
}

/// Left side of the rank-one Bump-Friedberg integral: spherical Whittaker
/// values at diag(w^k1, w^k2), q^{-(k1-k2)/2} s_{(k1,k2)}(alpha), against the
/// characters, with T1 tracking k1 - k2 and T0 tracking k2.
inline BivariateSeries bf_zeta_integral(const SatakeData& s, int eta1, int eta0, int order) {
  s.validate();
  detail::check_sign(eta1);
  detail::check_sign(eta0);
  if (s.params.size() != 2) throw DomainError("Bump-Friedberg check is implemented for GL_2 only");
  const auto root = detail::rational_sqrt(s.q_val);
  if (!root) throw DomainError("residue cardinality must be a perfect square");
  const Rational half = 1 / *root;
  BivariateSeries z(order);
  for (int k2 = 0; k2 <= order; ++k2)
    for (int d = 0; d + k2 <= order; ++d) {
      const int k1 = k2 + d;
      z.at(d, k2) = pow(half, d) * schur2(k1, k2, s.params[0], s.params[1]) * pow(Rational(eta1), d) *
                    pow(Rational(eta0), k2);
    }
  return z;
}

/// L(s1 + 1/2, pi x eta1) L(s0, pi, wedge^2 x eta0) as a series in (T1, T0).
inline BivariateSeries bf_lfactor_side(const SatakeData& s, int eta1, int eta0, int order) {
  s.validate();
  const auto root = detail::rational_sqrt(s.q_val);
  if (!root) throw DomainError("residue cardinality must be a perfect square");
  SatakeData shifted = s;
  for (auto& a : shifted.params) a /= *root;
  return BivariateSeries::outer(std_lfactor(shifted, eta1, order), ext_sq_lfactor(s, eta0, order), order);
}

inline bool bf_unramified_check(const SatakeData& s, int eta1, int eta0, int order) {
  return bf_zeta_integral(s, eta1, eta0, order) == bf_lfactor_side(s, eta1, eta0, order);
}

}  // namespace padicvol
