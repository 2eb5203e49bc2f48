#pragma once

// Property-suite orchestration for the `verify` command.

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "padicvol/branching.hpp"
#include "padicvol/cartan.hpp"
#include "padicvol/errors.hpp"
#include "padicvol/germs.hpp"
#include "padicvol/invariants.hpp"
#include "padicvol/lfactors.hpp"
#include "padicvol/orbital.hpp"
#include "padicvol/qring.hpp"
#include "padicvol/random.hpp"
#include "padicvol/volumes.hpp"

namespace padicvol {

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s{"qring",   "cartan",  "volumes",    "germs",
                                          "orbital", "lfactors", "invariants", "branching"};
  return s;
}

struct VerifyConfig {
  std::vector<std::string> suites = all_suites();
  int n_max = 4;
  int x_max = 6;
  int seeds = 10;
  std::uint64_t rng_seed = 20240531;
  std::vector<long> primes{2, 3, 5};

  /// Throws ConfigError before any computation when out of bounds.
  void validate() const {
    if (suites.empty()) throw ConfigError("no suites selected");
    for (const auto& s : suites)
      if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
        throw ConfigError("unknown suite '" + s + "'");
    if (n_max < 1 || n_max > 4) throw ConfigError("n_max must lie in [1, 4]");
    if (x_max < 1 || x_max > 10) throw ConfigError("x_max must lie in [1, 10]");
    if (seeds < 1 || seeds > 100) throw ConfigError("seeds must lie in [1, 100]");
    if (primes.empty()) throw ConfigError("at least one prime is required");
    for (long p : primes)
      if (!is_prime(p) || p > 7) throw ConfigError("primes must be primes <= 7");
  }
};

struct PropertyResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string counterexample;  // first failing input
  bool ok() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  long passed() const {
    return std::count_if(properties.begin(), properties.end(), [](const auto& p) { return p.ok(); });
  }
  long failed() const { return static_cast<long>(properties.size()) - passed(); }
};

struct VerifyReport {
  std::vector<SuiteReport> suites;
  bool ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.failed() == 0; });
  }
  int exit_status() const { return ok() ? 0 : 1; }
};

/// Records cases of one property.
class Checker {
 public:
  explicit Checker(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& input) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.counterexample = input();
  }
  /// A case that throws counts as a failure carrying the message.
  template <class F>
  void guard(const std::function<std::string()>& input, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++r_.cases;
      if (r_.failures++ == 0) r_.counterexample = input() + " threw: " + e.what();
    }
  }
  PropertyResult result() const { return r_; }

 private:
  PropertyResult r_;
};

namespace detail {

template <class... Ts>
std::string describe(const Ts&... parts) {
  std::ostringstream os;
  ((os << parts), ...);
  return os.str();
}

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Number of k-dimensional subspaces of F_p^n from row echelon pivot patterns.
inline Integer count_subspaces(int n, int k, long p) {
  Integer total = 0;
  std::vector<int> piv(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int i, int start) -> void {
    if (i == k) {
      long free = 0;
      for (int r = 0; r < k; ++r)
        free += (n - 1 - piv[static_cast<std::size_t>(r)]) - (k - 1 - r);
      Integer c;
      mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(free));
      total += c;
      return;
    }
    for (int c = start; c < n; ++c) {
      piv[static_cast<std::size_t>(i)] = c;
      self(self, i + 1, c + 1);
    }
  };
  rec(rec, 0, 0);
  return total;
}

inline LaurentPolyQ random_laurent(Rng& rng) {
  std::map<int, Rational> t;
  const long terms = uniform_int(rng, 0, 4);
  for (long i = 0; i < terms; ++i) t[static_cast<int>(uniform_int(rng, -3, 3))] += uniform_rational(rng, 5, 4);
  return LaurentPolyQ::from_terms(t);
}

inline Matrix random_matrix(Rng& rng, int n, long bound) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = uniform_int(rng, -bound, bound);
  return m;
}

inline Matrix random_invertible(Rng& rng, int n, long bound) {
  while (true) {
    Matrix m = random_matrix(rng, n, bound);
    if (m.det() != 0) return m;
  }
}

/// Random strongly regular (gamma, w) with integer entries.
inline std::pair<Matrix, std::vector<Rational>> random_regular_pair(Rng& rng, int n, long p) {
  while (true) {
    Matrix g = random_matrix(rng, 2 * n, 3);
    if (g.det() == 0) continue;
    std::vector<Rational> w(static_cast<std::size_t>(n));
    for (auto& v : w) v = uniform_int(rng, -3, 3);
    if (is_strongly_regular(project_sym(g, p), w)) return {g, w};
  }
}

inline void for_each_dominant(int len, int lo, int hi, const std::function<void(const DominantWeight&)>& f) {
  std::vector<int> e(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i == len) {
      f(DominantWeight(e));
      return;
    }
    for (int v = cap; v >= lo; --v) {
      e[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, hi);
}

inline PartitionNN random_partition(Rng& rng, int max_len, int max_part) {
  std::vector<int> e(static_cast<std::size_t>(uniform_int(rng, 0, max_len)));
  for (auto& v : e) v = static_cast<int>(uniform_int(rng, 0, max_part));
  std::sort(e.rbegin(), e.rend());
  return PartitionNN(e);
}

using PropertyFn = std::function<PropertyResult(const VerifyConfig&, Rng&)>;

struct Property {
  std::string name;
  PropertyFn run;
};

// ---------------------------------------------------------------- qring
inline std::vector<Property> qring_properties() {
  return {
      {"qbinom_symmetry_and_q1",
       [](const VerifyConfig& c, Rng&) {
         Checker k("qbinom_symmetry_and_q1");
         for (int n = 0; n <= 2 * c.n_max; ++n)
           for (int b = 0; b <= n; ++b) {
             Integer bin;
             mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(b));
             k.check(qbinom(n, b) == qbinom(n, n - b) && qbinom(n, b).evaluate(1) == Rational(bin),
                     [&] { return describe("n=", n, ",beta=", b); });
           }
         return k.result();
       }},
      {"qbinom_counts_subspaces",
       [](const VerifyConfig& c, Rng&) {
         Checker k("qbinom_counts_subspaces");
         for (long p : c.primes)
           for (int n = 0; n <= 2 * c.n_max; ++n)
             for (int b = 0; b <= n; ++b)
               k.check(qbinom(n, b).evaluate(p) == Rational(count_subspaces(n, b, p)),
                       [&] { return describe("n=", n, ",beta=", b, ",p=", p); });
         return k.result();
       }},
      {"laurent_ring_axioms",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("laurent_ring_axioms");
         for (int i = 0; i < 10 * c.seeds; ++i) {
           const LaurentPolyQ a = random_laurent(rng), b = random_laurent(rng), d = random_laurent(rng);
           k.check((a * b) * d == a * (b * d) && a * (b + d) == a * b + a * d,
                   [&] { return describe("case=", i); });
         }
         return k.result();
       }},
      {"newton_identity",
       [](const VerifyConfig& c, Rng&) {
         Checker k("newton_identity");
         for (int n = 0; n <= 2 * c.n_max; ++n)
           k.check(verify_newton_identity(n), [&] { return describe("n=", n); });
         return k.result();
       }},
  };
}

// ---------------------------------------------------------------- cartan
inline std::vector<Property> cartan_properties() {
  return {
      {"cell_volume_matches_coset_count",
       [](const VerifyConfig& c, Rng&) {
         Checker k("cell_volume_matches_coset_count");
         for (long p : c.primes) {
           if (p > 5) continue;
           for (int n = 1; n <= std::min(3, c.n_max); ++n)
             for_each_partition(n, 0, 3, [&](const SignedPartition& l) {
               if (l[0] != 0) return;
               k.check(cell_volume(l).evaluate(p) == Rational(Integer(std::to_string(count_cosets_oracle(l, static_cast<int>(p))))),
                       [&] { return describe("lambda=", join(l.entries()), ",p=", p); });
             });
         }
         return k.result();
       }},
      {"cell_volume_central_shift",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("cell_volume_central_shift");
         for (int n = 1; n <= c.n_max; ++n)
           for_each_partition(n, -2, 2, [&](const SignedPartition& l) {
             const int s = static_cast<int>(uniform_int(rng, -5, 5));
             k.check(cell_volume(l) == cell_volume(l.shifted(s)),
                     [&] { return describe("lambda=", join(l.entries()), ",c=", s); });
           });
         return k.result();
       }},
      {"cell_volume_is_polynomial",
       [](const VerifyConfig& c, Rng&) {
         Checker k("cell_volume_is_polynomial");
         for (int n = 1; n <= c.n_max; ++n)
           for_each_partition(n, 0, 3, [&](const SignedPartition& l) {
             k.check(cell_volume(l).is_polynomial(), [&] { return describe("lambda=", join(l.entries())); });
           });
         return k.result();
       }},
      {"first_segment_factorization",
       [](const VerifyConfig& c, Rng&) {
         Checker k("first_segment_factorization");
         for (int n = 2; n <= c.n_max; ++n)
           for_each_partition(n, -1, 2, [&](const SignedPartition& l) {
             const int beta = type_of(l).lengths.front();
             if (beta == n) return;
             const SignedPartition flat(std::vector<int>(l.entries().begin() + beta, l.entries().end()));
             const RationalFunctionQ rhs = mu_gl(beta) * mu_gl(n - beta) / mu_gl(n) *
                                           RationalFunctionQ::q_power(-beta * (n - beta) * l[0]) *
                                           RationalFunctionQ::q_power(static_cast<int>(beta * flat.total())) *
                                           cell_volume(flat);
             k.check(cell_volume(l) == rhs, [&] { return describe("lambda=", join(l.entries())); });
           });
         return k.result();
       }},
  };
}

// ---------------------------------------------------------------- volumes
inline std::vector<Property> volumes_properties() {
  return {
      {"triple_agreement",
       [](const VerifyConfig& c, Rng&) {
         Checker k("triple_agreement");
         VolumeTable t;
         for (int n = 0; n <= c.n_max; ++n)
           for (int a = -3; a <= 3; ++a)
             for (int x = 0; x <= c.x_max; ++x) {
               const RationalFunctionQ d = vol_direct({n, a, x});
               k.check(d == vol_recur({n, a, x}) && d == t(n, a, x),
                       [&] { return describe("n=", n, ",alpha=", a, ",x=", x); });
             }
         return k.result();
       }},
      {"functional_equation",
       [](const VerifyConfig& c, Rng&) {
         Checker k("functional_equation");
         VolumeTable t;
         for (int n = 0; n <= c.n_max; ++n)
           for (int a = -3; a <= 3; ++a)
             for (int x = 0; x <= c.x_max; ++x)
               k.check(t(n, a, x) == RationalFunctionQ::q_power(n * a * x) * t(n, -a, x),
                       [&] { return describe("n=", n, ",alpha=", a, ",x=", x); });
         return k.result();
       }},
      {"germ_constant_term_is_A",
       [](const VerifyConfig& c, Rng&) {
         Checker k("germ_constant_term_is_A");
         for (int n = 0; n <= c.n_max; ++n)
           for (int a = 1; a <= 3; ++a)
             k.check(germ_of_vol(n, a).coeff(0, 0) == const_term_A(n, a),
                     [&] { return describe("n=", n, ",alpha=", a); });
         return k.result();
       }},
      {"germ_linear_coefficient_is_B",
       [](const VerifyConfig& c, Rng&) {
         Checker k("germ_linear_coefficient_is_B");
         for (int n = 1; n <= c.n_max; ++n)
           k.check(germ_of_vol(n, 0).coeff(0, 1) == linear_coeff_B(n), [&] { return describe("n=", n); });
         return k.result();
       }},
      {"qbinomial_constant_term_identity",
       [](const VerifyConfig& c, Rng&) {
         Checker k("qbinomial_constant_term_identity");
         for (int n = 0; n <= c.n_max + 1; ++n)
           for (int a = 1; a <= 6; ++a)
             k.check(check_constant_term_identity(n, a), [&] { return describe("n=", n, ",alpha=", a); });
         return k.result();
       }},
  };
}

// ---------------------------------------------------------------- germs
inline std::vector<Property> germs_properties() {
  return {
      {"fit_is_unique",
       [](const VerifyConfig& c, Rng&) {
         Checker k("fit_is_unique");
         for (int n = 0; n <= c.n_max; ++n)
           for (int a = -2; a <= 2; ++a) {
             VolumeTable t;
             const Sampler s = [&](int x) { return t(n, a, x); };
             const GermSupport tight = vol_support(n, a);
             k.guard([&] { return describe("n=", n, ",alpha=", a); },
                     [&] {
                       k.check(fit_germ(s, tight, 1) == fit_germ(s, tight.widened(), 1),
                               [&] { return describe("n=", n, ",alpha=", a); });
                     });
           }
         return k.result();
       }},
      {"positive_weight_exponents",
       [](const VerifyConfig& c, Rng&) {
         Checker k("positive_weight_exponents");
         for (int n = 0; n <= c.n_max; ++n)
           for (int a = 1; a <= 3; ++a) {
             const GermExpansion g = germ_of_vol(n, a);
             bool ok = g.coeff(0, 0) == const_term_A(n, a);
             for (const auto& [key, coeff] : g.terms()) ok &= key.first >= 1 || key == GermExpansion::Key{0, 0};
             k.check(ok, [&] { return describe("n=", n, ",alpha=", a); });
           }
         return k.result();
       }},
      {"round_trip",
       [](const VerifyConfig& c, Rng&) {
         Checker k("round_trip");
         for (int n = 0; n <= c.n_max; ++n)
           for (int a = -3; a <= 3; ++a) {
             const GermExpansion g = germ_of_vol(n, a);
             VolumeTable t;
             for (int x = 1; x <= c.x_max; ++x)
               k.check(g.eval(x) == t(n, a, x), [&] { return describe("n=", n, ",alpha=", a, ",x=", x); });
           }
         return k.result();
       }},
      {"functional_equation_transport",
       [](const VerifyConfig& c, Rng&) {
         Checker k("functional_equation_transport");
         for (int n = 0; n <= std::min(3, c.n_max); ++n)
           for (int a = -2; a <= 2; ++a)
             k.check(germ_of_vol(n, a).shift_exponent(-n * a) == germ_of_vol(n, -a),
                     [&] { return describe("n=", n, ",alpha=", a); });
         return k.result();
       }},
  };
}

// ---------------------------------------------------------------- orbital
inline std::vector<Property> orbital_properties() {
  return {
      {"germ_matches_direct_sum",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("germ_matches_direct_sum");
         for (int n = 1; n <= std::min(3, c.n_max); ++n)
           for (int N = 0; N <= 2; ++N)
             for (int s = 0; s < c.seeds; ++s) {
               const OrbitalProfile phi = random_profile(n, N, 6, rng);
               const GermExpansion g = orbital_germ(phi);
               for (int x = 2 * N + 2; x <= 2 * N + c.x_max; ++x)
                 k.check(g.eval(x) == orbital_direct(phi, x),
                         [&] { return describe("n=", n, ",N=", N, ",seed=", s, ",x=", x); });
             }
         return k.result();
       }},
      {"linear_term",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("linear_term");
         for (int n = 1; n <= std::min(3, c.n_max); ++n)
           for (int N = 0; N <= 2; ++N)
             for (int s = 0; s < c.seeds; ++s)
               k.check(check_linear_term(random_profile(n, N, 6, rng)),
                       [&] { return describe("n=", n, ",N=", N, ",seed=", s); });
         return k.result();
       }},
      {"linearity",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("linearity");
         for (int s = 0; s < c.seeds; ++s) {
           const int n = static_cast<int>(uniform_int(rng, 1, std::min(3, c.n_max)));
           const int N = static_cast<int>(uniform_int(rng, 0, 2));
           const OrbitalProfile f = random_profile(n, N, 5, rng), g = random_profile(n, N, 5, rng);
           const Rational a = uniform_rational(rng, 5, 3), b = uniform_rational(rng, 5, 3);
           const OrbitalProfile h = f.scaled(a) + g.scaled(b);
           const int x = static_cast<int>(uniform_int(rng, 0, c.x_max));
           bool ok = orbital_direct(h, x) ==
                     RationalFunctionQ(a) * orbital_direct(f, x) + RationalFunctionQ(b) * orbital_direct(g, x);
           const auto cf = orbital_coeffs(f).coeffs, cg = orbital_coeffs(g).coeffs, ch = orbital_coeffs(h).coeffs;
           std::set<BlockClass> keys;
           for (const auto* m : {&cf, &cg, &ch})
             for (const auto& kv : *m) keys.insert(kv.first);
           auto get = [](const auto& m, const BlockClass& key) {
             auto it = m.find(key);
             return it == m.end() ? RationalFunctionQ() : it->second;
           };
           for (const auto& key : keys)
             ok &= get(ch, key) == RationalFunctionQ(a) * get(cf, key) + RationalFunctionQ(b) * get(cg, key);
           k.check(ok, [&] { return describe("seed=", s, ",n=", n, ",N=", N); });
         }
         return k.result();
       }},
      {"nonvanishing_when_phi0_nonzero",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("nonvanishing_when_phi0_nonzero");
         for (int n = 1; n <= std::min(3, c.n_max); ++n)
           for (int s = 0; s < c.seeds; ++s) {
             const int N = static_cast<int>(uniform_int(rng, 0, 2));
             const OrbitalProfile phi = random_profile(n, N, 5, rng);
             if (phi.phi0() == 0) continue;
             const GermExpansion g = orbital_germ(phi);
             k.check(!g.coeff(0, 1).is_zero() && !orbital_direct(phi, 2 * N + 2 + c.x_max).is_zero(),
                     [&] { return describe("n=", n, ",N=", N, ",seed=", s); });
           }
         return k.result();
       }},
  };
}

// ---------------------------------------------------------------- lfactors
inline std::vector<Property> lfactors_properties() {
  return {
      {"tate_identity",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("tate_identity");
         for (int s = 0; s < 2 * c.seeds; ++s) {
           UnramifiedTorusData t;
           const long r = uniform_int(rng, 1, 4);
           for (long i = 0; i < r; ++i)
             t.factors.emplace_back(static_cast<int>(uniform_int(rng, 1, 3)), uniform_int(rng, 0, 1) ? 1 : -1);
           const auto [direct, closed] = tate_series(t, 8);
           k.check(direct == closed, [&] { return describe("seed=", s); });
         }
         return k.result();
       }},
      {"sign_twist_symmetry",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("sign_twist_symmetry");
         for (int s = 0; s < c.seeds; ++s) {
           SatakeData d;
           const long m = uniform_int(rng, 1, 4);
           for (long i = 0; i < m; ++i) d.params.push_back(uniform_rational(rng, 5, 4, true));
           SatakeData neg = d;
           for (auto& a : neg.params) a = -a;
           k.check(std_lfactor(neg, 1, 6) == std_lfactor(d, -1, 6), [&] { return describe("seed=", s); });
         }
         return k.result();
       }},
      {"ext_sq_shift",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("ext_sq_shift");
         for (int s = 0; s < 2 * c.seeds; ++s) {
           SatakeData d;
           const long m = uniform_int(rng, 2, 4);
           for (long i = 0; i < m; ++i) d.params.push_back(uniform_rational(rng, 5, 4, true));
           d.q_val = c.primes[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(c.primes.size()) - 1))];
           for (int a = -2; a <= 2; ++a)
             k.check(check_ext_sq_shift(d, a, 6), [&] { return describe("seed=", s, ",a=", a); });
         }
         return k.result();
       }},
      {"bump_friedberg_rank_one",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("bump_friedberg_rank_one");
         for (int s = 0; s < c.seeds; ++s) {
           const long p = c.primes[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(c.primes.size()) - 1))];
           SatakeData d{{uniform_rational(rng, 5, 4, true), uniform_rational(rng, 5, 4, true)}, Rational(p * p)};
           const int e1 = uniform_int(rng, 0, 1) ? 1 : -1, e0 = uniform_int(rng, 0, 1) ? 1 : -1;
           k.check(bf_unramified_check(d, e1, e0, 6), [&] { return describe("seed=", s); });
         }
         return k.result();
       }},
      {"distinct_pairs_square_ordered",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("distinct_pairs_square_ordered");
         for (int s = 0; s < c.seeds; ++s) {
           SatakeData d;
           const long m = uniform_int(rng, 2, 4);
           for (long i = 0; i < m; ++i) d.params.push_back(uniform_rational(rng, 5, 4, true));
           const TruncatedSeries o = ext_sq_lfactor(d, 1, 6, Pairs::Ordered);
           k.check(ext_sq_lfactor(d, 1, 6, Pairs::Distinct) == o * o, [&] { return describe("seed=", s); });
         }
         return k.result();
       }},
  };
}

// ---------------------------------------------------------------- invariants
inline TransferSigns random_signs(Rng& rng) {
  auto pick = [&] { return uniform_int(rng, 0, 1) ? CharacterKind::UnramifiedQuadratic : CharacterKind::Trivial; };
  TransferSigns s;
  s.eta0 = pick();
  s.eta1 = pick();
  s.eta2 = pick();
  return s;
}

inline std::vector<Property> invariants_properties() {
  auto ranks = [](const VerifyConfig& c) { return std::min(2, c.n_max); };
  return {
      {"transfer_factor_cocycle",
       [ranks](const VerifyConfig& c, Rng& rng) {
         Checker k("transfer_factor_cocycle");
         for (long p : c.primes)
           for (int n = 1; n <= ranks(c); ++n)
             for (int s = 0; s < 2 * c.seeds; ++s) {
               const auto [g, w] = random_regular_pair(rng, n, p);
               const BlockPair h1{random_invertible(rng, n, 4), random_invertible(rng, n, 4)};
               const BlockPair h2{random_invertible(rng, n, 4), random_invertible(rng, n, 4)};
               const TransferSigns sg = random_signs(rng);
               auto input = [&] { return describe("p=", p, ",n=", n, ",gamma=", g.to_string()); };
               k.guard(input, [&] { k.check(check_equivariance(g, w, h1, h2, sg, p), input); });
             }
         return k.result();
       }},
      {"transfer_factor_is_sign",
       [ranks](const VerifyConfig& c, Rng& rng) {
         Checker k("transfer_factor_is_sign");
         for (long p : c.primes)
           for (int n = 1; n <= ranks(c); ++n)
             for (int s = 0; s < c.seeds; ++s) {
               const auto [g, w] = random_regular_pair(rng, n, p);
               const int o = transfer_factor(g, w, random_signs(rng), p);
               k.check(o == 1 || o == -1, [&] { return describe("p=", p, ",gamma=", g.to_string()); });
             }
         return k.result();
       }},
      {"car_lin_orbit_invariant",
       [ranks](const VerifyConfig& c, Rng& rng) {
         Checker k("car_lin_orbit_invariant");
         for (int n = 1; n <= ranks(c); ++n)
           for (int s = 0; s < 2 * c.seeds; ++s) {
             const auto [g, w] = random_regular_pair(rng, n, 3);
             const BlockPair h1{random_invertible(rng, n, 4), random_invertible(rng, n, 4)};
             const BlockPair h2{random_invertible(rng, n, 4), random_invertible(rng, n, 4)};
             const Matrix moved = h1.full().inverse() * g * h2.full();
             k.check(car_lin(project_sym(moved, 3)) == car_lin(project_sym(g, 3)),
                     [&] { return describe("n=", n, ",gamma=", g.to_string()); });
           }
         return k.result();
       }},
      {"projection_equivariance",
       [ranks](const VerifyConfig& c, Rng& rng) {
         Checker k("projection_equivariance");
         for (int n = 1; n <= ranks(c) + 1; ++n)
           for (int s = 0; s < c.seeds; ++s) {
             const Matrix g = random_invertible(rng, 2 * n, 3);
             const Matrix a = random_invertible(rng, n, 3), b = random_invertible(rng, n, 3);
             k.check(project_sym(Matrix::block_diag(a, b) * g, 3) == project_sym(g, 3).acted(a, b),
                     [&] { return describe("n=", n, ",gamma=", g.to_string()); });
           }
         return k.result();
       }},
  };
}

// ---------------------------------------------------------------- branching
inline std::vector<Property> branching_properties() {
  auto max_len = [](const VerifyConfig& c) { return 2 * std::min(3, c.n_max); };
  return {
      {"multiplicity_iff_self_associate",
       [max_len](const VerifyConfig& c, Rng&) {
         Checker k("multiplicity_iff_self_associate");
         for (int len = 2; len <= max_len(c); len += 2)
           for_each_dominant(len, -3, 3, [&](const DominantWeight& l) {
             auto input = [&] { return describe("lambda=", join(l.entries())); };
             k.guard(input, [&] {
               const std::uint64_t m = branching_multiplicity(l);
               k.check(m <= 1 && (m == 1) == self_associate(l) && branching_gamma_sum(l) == m, input);
             });
           });
         return k.result();
       }},
      {"oracle_shift_consistency",
       [max_len](const VerifyConfig& c, Rng&) {
         Checker k("oracle_shift_consistency");
         for (int len = 2; len <= max_len(c); len += 2)
           for_each_dominant(len, -3, 3, [&](const DominantWeight& l) {
             const int m = std::max(0, -l[l.size() - 1]);
             k.check(branching_lr_oracle(l, m) == branching_lr_oracle(l, m + 1),
                     [&] { return describe("lambda=", join(l.entries())); });
           });
         return k.result();
       }},
      {"lr_symmetry",
       [](const VerifyConfig& c, Rng& rng) {
         Checker k("lr_symmetry");
         for (int s = 0; s < 10 * c.seeds; ++s) {
           const PartitionNN mu = random_partition(rng, 3, 3), nu = random_partition(rng, 3, 3);
           const PartitionNN lambda = random_partition(rng, 5, 4);
           k.check(lr_coeff(lambda, mu, nu) == lr_coeff(lambda, nu, mu),
                   [&] { return describe("lambda=", join(lambda.entries()), ",mu=", join(mu.entries()), ",nu=",
                                         join(nu.entries())); });
         }
         return k.result();
       }},
      {"nonnegative_weights",
       [max_len](const VerifyConfig& c, Rng&) {
         Checker k("nonnegative_weights");
         for (int len = 2; len <= max_len(c); len += 2)
           for_each_dominant(len, 0, 3, [&](const DominantWeight& l) {
             const bool zero = std::all_of(l.entries().begin(), l.entries().end(), [](int v) { return v == 0; });
             k.check((branching_multiplicity(l) == 1) == zero, [&] { return describe("lambda=", join(l.entries())); });
           });
         return k.result();
       }},
  };
}

inline std::vector<Property> properties_of(const std::string& suite) {
  if (suite == "qring") return qring_properties();
  if (suite == "cartan") return cartan_properties();
  if (suite == "volumes") return volumes_properties();
  if (suite == "germs") return germs_properties();
  if (suite == "orbital") return orbital_properties();
  if (suite == "lfactors") return lfactors_properties();
  if (suite == "invariants") return invariants_properties();
  if (suite == "branching") return branching_properties();
  throw ConfigError("unknown suite '" + suite + "'");
}

inline SuiteReport run_suite(const std::string& suite, const VerifyConfig& c) {
  SuiteReport report{suite, {}};
  for (const auto& prop : properties_of(suite)) {
    Rng rng = substream(c.rng_seed, suite + "/" + prop.name);
    try {
      report.properties.push_back(prop.run(c, rng));
    } catch (const std::exception& e) {
      report.properties.push_back({prop.name, 1, 1, std::string("threw: ") + e.what()});
    }
  }
  return report;
}

}  // namespace detail

/// Runs the selected suites concurrently; the report lists suites in the
/// canonical order regardless of completion order.
inline VerifyReport run_verify(const VerifyConfig& c) {
  c.validate();
  std::vector<std::string> ordered;
  for (const auto& s : all_suites())
    if (std::find(c.suites.begin(), c.suites.end(), s) != c.suites.end()) ordered.push_back(s);
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& s : ordered) jobs.push_back(std::async(std::launch::async, detail::run_suite, s, c));
  VerifyReport report;
  for (auto& j : jobs) report.suites.push_back(j.get());
  return report;
}

}  // namespace padicvol
