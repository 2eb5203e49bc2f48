#pragma once

// Contracted orbital integrals on diagonal configurations.
//
// A profile phi is a lattice-invariant test function supported in
// w^{-N} Lambda, recorded by its values on pairs of clamped valuation
// vectors: valuations >= 0 collapse to "integral" (nullopt), values in
// [-N, -1] are kept, anything below -N is outside the support.
//
//   phi~(t) = sum_lambda phi(t w^{-lambda}, w^lambda) vol(K w^lambda K),  x = v(t).

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "padicvol/cartan.hpp"
#include "padicvol/errors.hpp"
#include "padicvol/germs.hpp"
#include "padicvol/qring.hpp"
#include "padicvol/random.hpp"
#include "padicvol/volumes.hpp"

namespace padicvol {

using ClampedVector = std::vector<std::optional<int>>;
using ProfileKey = std::pair<ClampedVector, ClampedVector>;

class OrbitalProfile {
 public:
  OrbitalProfile(int n, int N) : n_(n), N_(N) {
    if (n < 1) throw DomainError("orbital profile: rank must be >= 1");
    if (N < 0) throw DomainError("orbital profile: negative support radius");
  }

  int n() const { return n_; }
  int N() const { return N_; }
  const std::map<ProfileKey, Rational>& values() const { return values_; }

  /// Sets the value at a pair of clamped vectors (normalized first). Zero erases.
  void set(ClampedVector first, ClampedVector second, const Rational& value) {
    ProfileKey key = normalize(std::move(first), std::move(second));
    if (value == 0)
      values_.erase(key);
    else
      values_[key] = value;
  }

  Rational at(ClampedVector first, ClampedVector second) const {
    return lookup(normalize(std::move(first), std::move(second)));
  }

  Rational lookup(const ProfileKey& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? Rational(0) : it->second;
  }

  /// phi(0): the value on the all-integral pair.
  Rational phi0() const {
    const ClampedVector all(static_cast<std::size_t>(n_));
    return lookup({all, all});
  }

  /// Explicit entries ascending, then the integral markers.
  static ClampedVector normalize_vector(ClampedVector v) {
    std::sort(v.begin(), v.end(), [](const std::optional<int>& a, const std::optional<int>& b) {
      if (!a) return false;
      if (!b) return true;
      return *a < *b;
    });
    return v;
  }

  friend OrbitalProfile operator+(const OrbitalProfile& a, const OrbitalProfile& b) {
    check_compatible(a, b);
    OrbitalProfile r = a;
    for (const auto& [k, v] : b.values_) r.set(k.first, k.second, r.lookup(k) + v);
    return r;
  }

  OrbitalProfile scaled(const Rational& s) const {
    OrbitalProfile r(n_, N_);
    for (const auto& [k, v] : values_) r.set(k.first, k.second, v * s);
    return r;
  }

 private:
  static void check_compatible(const OrbitalProfile& a, const OrbitalProfile& b) {
    if (a.n_ != b.n_ || a.N_ != b.N_) throw DomainError("orbital profiles of different shape");
  }

  ProfileKey normalize(ClampedVector first, ClampedVector second) const {
    if (static_cast<int>(first.size()) != n_ || static_cast<int>(second.size()) != n_)
      throw DomainError("orbital profile: vector length differs from n");
    int explicit_count = 0;
    for (const auto* v : {&first, &second})
      for (const auto& e : *v)
        if (e) {
          if (*e < -N_ || *e > -1) throw DomainError("orbital profile: explicit entry outside [-N,-1]");
          ++explicit_count;
        }
    if (explicit_count > n_) throw DomainError("orbital profile: more explicit entries than coordinates");
    return {normalize_vector(std::move(first)), normalize_vector(std::move(second))};
  }

  int n_;
  int N_;
  std::map<ProfileKey, Rational> values_;
};

namespace detail {

inline std::optional<int> clamp_valuation(int v) {
  if (v >= 0) return std::nullopt;
  return v;
}

inline RationalFunctionQ cell_volume_or_one(const SignedPartition& l) {
  return l.empty() ? RationalFunctionQ(1) : cell_volume(l);
}

}  // namespace detail

/// The Cartan sum over lambda with -N <= lambda_i <= x + N.
inline RationalFunctionQ orbital_direct(const OrbitalProfile& phi, int x) {
  if (x < 0) throw DomainError("orbital_direct: negative valuation");
  RationalFunctionQ sum;
  if (phi.values().empty()) return sum;
  const int n = phi.n();
  for_each_partition(n, -phi.N(), x + phi.N(), [&](const SignedPartition& lambda) {
    ClampedVector first, second;
    for (int i = 0; i < n; ++i) {
      first.push_back(detail::clamp_valuation(x - lambda[i]));
      second.push_back(detail::clamp_valuation(lambda[i]));
    }
    const Rational v = phi.lookup({OrbitalProfile::normalize_vector(std::move(first)),
                                   OrbitalProfile::normalize_vector(std::move(second))});
    if (v != 0) sum += RationalFunctionQ(v) * cell_volume(lambda);
  });
  return sum;
}

/// Block class (n1, n2, n3): n1 entries below 0, n2 in [0, x], n3 above x.
using BlockClass = std::array<int, 3>;

struct OrbitalGermCoefficients {
  std::map<BlockClass, RationalFunctionQ> coeffs;
  friend bool operator==(const OrbitalGermCoefficients&, const OrbitalGermCoefficients&) = default;
};

/// c_{(n1,n2,n3)} = sum over xi1 in [-N,-1], xi3' in [1,N] of
///   prod mu(GL_{n_i}) / mu(GL_n) * q^{-(n2+n3)|xi1| + (n1+n2)|xi3'|}
///   * vol(xi1) vol(xi3') * phi(block configuration).
inline OrbitalGermCoefficients orbital_coeffs(const OrbitalProfile& phi) {
  OrbitalGermCoefficients out;
  if (phi.values().empty()) return out;
  const int n = phi.n(), N = phi.N();
  for (int n1 = 0; n1 <= n; ++n1)
    for (int n3 = 0; n1 + n3 <= n; ++n3) {
      const int n2 = n - n1 - n3;
      const RationalFunctionQ levi = mu_gl(n1) * mu_gl(n2) * mu_gl(n3) / mu_gl(n);
      RationalFunctionQ c;
      for_each_partition(n1, -N, -1, [&](const SignedPartition& xi1) {
        for_each_partition(n3, 1, N, [&](const SignedPartition& xi3) {
          ClampedVector first, second;
          for (int i = 0; i < n1 + n2; ++i) first.emplace_back(std::nullopt);
          for (int i = 0; i < n3; ++i) first.emplace_back(-xi3[i]);
          for (int i = 0; i < n1; ++i) second.emplace_back(xi1[i]);
          for (int i = 0; i < n2 + n3; ++i) second.emplace_back(std::nullopt);
          const Rational v = phi.lookup({OrbitalProfile::normalize_vector(std::move(first)),
                                         OrbitalProfile::normalize_vector(std::move(second))});
          if (v == 0) return;
          const int e = static_cast<int>(-(n2 + n3) * xi1.total() + (n1 + n2) * xi3.total());
          c += RationalFunctionQ(v) * RationalFunctionQ::q_power(e) * detail::cell_volume_or_one(xi1) *
               detail::cell_volume_or_one(xi3);
        });
      });
      if (!c.is_zero()) out.coeffs.emplace(BlockClass{n1, n2, n3}, levi * c);
    }
  return out;
}

/// Validity threshold used for the orbital germ: 2N + 2.
inline int orbital_threshold(const OrbitalProfile& phi) { return 2 * phi.N() + 2; }

/// sum c_{(n1,n2,n3)} q^{n3(n1+n2)x} vol_{n2,n1-n3}(x), with the functional
/// equation q^{n3(n1+n2)x} vol_{n2,n1-n3}(x) = q^{n1(n2+n3)x} vol_{n2,n3-n1}(x)
/// used when n1 < n3 so the fitted weight is never negative.
inline GermExpansion orbital_germ(const OrbitalProfile& phi) {
  if (phi.n() > 3) throw DomainError("orbital_germ: rank above supported bound 3");
  const int x0 = orbital_threshold(phi);
  GermExpansion total({}, x0);
  for (const auto& [cls, c] : orbital_coeffs(phi).coeffs) {
    const auto [n1, n2, n3] = cls;
    const GermExpansion piece = n1 >= n3 ? germ_of_vol(n2, n1 - n3).shift_exponent(n3 * (n1 + n2))
                                         : germ_of_vol(n2, n3 - n1).shift_exponent(n1 * (n2 + n3));
    total = total + piece.scaled(c);
  }
  return GermExpansion(total.terms(), x0);
}

/// The (0,1) germ coefficient equals phi(0) B_n.
inline bool check_linear_term(const OrbitalProfile& phi) {
  return orbital_germ(phi).coeff(0, 1) == RationalFunctionQ(phi.phi0()) * linear_coeff_B(phi.n());
}

/// Random profile with reachable keys only: at most n explicit entries across
/// the pair, values p/q with |p| <= 9, 1 <= q <= 4.
template <class G>
OrbitalProfile random_profile(int n, int N, int entries, G& rng) {
  OrbitalProfile phi(n, N);
  const ClampedVector all(static_cast<std::size_t>(n));
  phi.set(all, all, uniform_rational(rng, 9, 4));
  if (N == 0) return phi;
  for (int k = 0; k < entries; ++k) {
    const int k1 = static_cast<int>(uniform_int(rng, 0, n));
    const int k2 = static_cast<int>(uniform_int(rng, 0, n - k1));
    ClampedVector first(static_cast<std::size_t>(n)), second(static_cast<std::size_t>(n));
    for (int i = 0; i < k1; ++i) first[static_cast<std::size_t>(i)] = static_cast<int>(uniform_int(rng, -N, -1));
    for (int i = 0; i < k2; ++i) second[static_cast<std::size_t>(i)] = static_cast<int>(uniform_int(rng, -N, -1));
    phi.set(first, second, uniform_rational(rng, 9, 4));
  }
  return phi;
}

}  // namespace padicvol
