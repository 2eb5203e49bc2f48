#pragma once

// Exact arithmetic in Q(q): Laurent polynomials and reduced rational
// functions in the formal residue-cardinality variable q, together with the
// q-combinatorial constants (q-binomials, mu(GL_n)) used by every other
// module. No floating point anywhere.

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padicvol/errors.hpp"
#include "padicvol/rational.hpp"

namespace padicvol {

namespace detail {

/// Dense univariate polynomial; index i holds the coefficient of q^i.
using Coeffs = std::vector<Rational>;
using ZCoeffs = std::vector<Integer>;

inline void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

inline int degree(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

inline bool is_one(const Coeffs& c) { return c.size() == 1 && c[0] == 1; }

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  Coeffs r(a.size() + b.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      t = a[i] * b[j];
      r[i + j] += t;
    }
  }
  trim(r);
  return r;
}

inline Coeffs scale(Coeffs a, const Rational& s) {
  if (s == 0) return {};
  for (auto& x : a) x *= s;
  return a;
}

/// Euclidean division a = quot*b + rem with deg rem < deg b.
inline std::pair<Coeffs, Coeffs> divmod(Coeffs a, const Coeffs& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {Coeffs{}, std::move(a)};
  Coeffs quot(a.size() - b.size() + 1);
  const Rational lead_inv = 1 / b.back();
  Rational f, t;
  for (int i = degree(a); i >= degree(b); --i) {
    if (a[i] == 0) continue;
    f = a[i] * lead_inv;
    const int shift = i - degree(b);
    quot[shift] = f;
    for (int j = 0; j <= degree(b); ++j) {
      t = f * b[j];
      a[shift + j] -= t;
    }
  }
  trim(a);
  trim(quot);
  return {std::move(quot), std::move(a)};
}

inline Coeffs exact_div(const Coeffs& a, const Coeffs& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.empty()) throw std::logic_error("inexact polynomial division");
  return quot;
}

inline void make_primitive(ZCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) return;
  Integer g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (c.back() < 0) g = -g;
  if (g != 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

inline ZCoeffs to_primitive_integer(const Coeffs& c) {
  Integer l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZCoeffs z(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) z[i] = c[i].get_num() * (l / c[i].get_den());
  make_primitive(z);
  return z;
}

/// Pseudo-remainder of a by b over Z, followed by content removal.
inline ZCoeffs primitive_prem(ZCoeffs a, const ZCoeffs& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Integer& lb = b.back();
  Integer la, t;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    la = a.back();
    const int shift = da - db;
    for (auto& x : a) x *= lb;
    for (int j = 0; j <= db; ++j) {
      t = la * b[j];
      a[shift + j] -= t;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    make_primitive(a);
  }
  return a;
}

/// Monic gcd over Q, computed with the primitive polynomial remainder sequence over Z.
inline Coeffs gcd(const Coeffs& a, const Coeffs& b) {
  if (a.empty() && b.empty()) return {};
  if (a.empty()) return scale(b, 1 / b.back());
  if (b.empty()) return scale(a, 1 / a.back());
  if (a.size() == 1 || b.size() == 1) return {Rational(1)};
  ZCoeffs x = to_primitive_integer(a);
  ZCoeffs y = to_primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return {Rational(1)};
    ZCoeffs r = primitive_prem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  Coeffs g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = Rational(x[i], x.back());
  for (auto& v : g) v.canonicalize();
  return g;
}

inline Rational evaluate(const Coeffs& c, const Rational& x) {
  Rational acc = 0;
  for (int i = degree(c); i >= 0; --i) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

inline Coeffs derivative(const Coeffs& c) {
  if (c.size() <= 1) return {};
  Coeffs d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
  trim(d);
  return d;
}

}  // namespace detail

/// Finitely supported Laurent polynomial sum_k c_k q^k with rational c_k.
/// Stored densely from the lowest nonzero exponent; no stored coefficient
/// at either end is zero.
class LaurentPolyQ {
 public:
  LaurentPolyQ() = default;
  LaurentPolyQ(long c) : LaurentPolyQ(Rational(c)) {}  // NOLINT(implicit)
  LaurentPolyQ(const Rational& c) {                    // NOLINT(implicit)
    if (c != 0) coeffs_.push_back(c);
  }

  static LaurentPolyQ monomial(const Rational& c, int exponent) {
    LaurentPolyQ p(c);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
  }

  /// q^low * (c[0] + c[1] q + ...), normalized.
  static LaurentPolyQ from_dense(int low, detail::Coeffs c) {
    LaurentPolyQ p;
    p.low_ = low;
    p.coeffs_ = std::move(c);
    p.normalize();
    return p;
  }

  static LaurentPolyQ from_terms(const std::map<int, Rational>& terms) {
    if (terms.empty()) return {};
    const int lo = terms.begin()->first;
    detail::Coeffs c(terms.rbegin()->first - lo + 1);
    for (const auto& [e, v] : terms) c[e - lo] += v;
    return from_dense(lo, std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const detail::Coeffs& dense() const { return coeffs_; }

  Rational coeff(int exponent) const {
    const int i = exponent - low_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
  }

  std::map<int, Rational> terms() const {
    std::map<int, Rational> m;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) m.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    return m;
  }

  /// Multiplication by q^k.
  LaurentPolyQ shifted(int k) const {
    LaurentPolyQ p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
  }

  Rational evaluate(const Rational& q) const {
    if (is_zero()) return 0;
    if (q == 0) {
      if (low_ < 0) throw DomainError("Laurent polynomial with negative powers evaluated at q=0");
      return low_ == 0 ? coeffs_[0] : Rational(0);
    }
    return detail::evaluate(coeffs_, q) * pow(q, low_);
  }

  LaurentPolyQ operator-() const {
    LaurentPolyQ p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend LaurentPolyQ operator+(const LaurentPolyQ& a, const LaurentPolyQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int lo = std::min(a.low_, b.low_);
    const int hi = std::max(a.high(), b.high());
    detail::Coeffs c(hi - lo + 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[a.low_ - lo + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[b.low_ - lo + i] += b.coeffs_[i];
    return from_dense(lo, std::move(c));
  }

  friend LaurentPolyQ operator-(const LaurentPolyQ& a, const LaurentPolyQ& b) { return a + (-b); }

  friend LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return from_dense(a.low_ + b.low_, detail::mul(a.coeffs_, b.coeffs_));
  }

  LaurentPolyQ& operator+=(const LaurentPolyQ& o) { return *this = *this + o; }
  LaurentPolyQ& operator*=(const LaurentPolyQ& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPolyQ& a, const LaurentPolyQ& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    detail::trim(coeffs_);
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      low_ += static_cast<int>(lead);
    }
  }

  int low_ = 0;
  detail::Coeffs coeffs_;
};

/// Element of Q(q) kept in canonical reduced form num/den:
///  - den is a polynomial with nonzero constant term, monic in q;
///  - every power of q lives in the (Laurent) numerator;
///  - gcd(num, den) = 1.
/// Structural equality is therefore semantic equality.
class RationalFunctionQ {
 public:
  RationalFunctionQ() : den_{Rational(1)} {}
  RationalFunctionQ(long c) : num_(c), den_{Rational(1)} {}               // NOLINT(implicit)
  RationalFunctionQ(const Rational& c) : num_(c), den_{Rational(1)} {}    // NOLINT(implicit)
  RationalFunctionQ(LaurentPolyQ p) : num_(std::move(p)), den_{Rational(1)} {}  // NOLINT(implicit)

  RationalFunctionQ(const LaurentPolyQ& num, const LaurentPolyQ& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    assign_reduced(num.shifted(-den.low()), den.dense());
  }

  static RationalFunctionQ q_power(int k) { return LaurentPolyQ::monomial(1, k); }

  /// 1 - q^k.
  static RationalFunctionQ one_minus_q_power(int k) {
    return LaurentPolyQ(1) - LaurentPolyQ::monomial(1, k);
  }

  const LaurentPolyQ& numerator() const { return num_; }
  LaurentPolyQ denominator() const { return LaurentPolyQ::from_dense(0, den_); }

  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is 1 (possibly negative powers of q in the numerator).
  bool is_laurent() const { return detail::is_one(den_); }
  /// Genuine polynomial in q.
  bool is_polynomial() const { return is_laurent() && (num_.is_zero() || num_.low() >= 0); }

  Rational evaluate(const Rational& q) const {
    const Rational d = detail::evaluate(den_, q);
    if (d == 0) throw DomainError("evaluation at a root of the denominator");
    return num_.evaluate(q) / d;
  }

  RationalFunctionQ operator-() const {
    RationalFunctionQ r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_laurent() && b.is_laurent()) return RationalFunctionQ(a.num_ + b.num_);
    // Henrici: with g = gcd(b1, b2) only g can cancel against the new numerator.
    const detail::Coeffs g = detail::gcd(a.den_, b.den_);
    if (detail::is_one(g)) {
      RationalFunctionQ r;
      r.num_ = a.num_ * LaurentPolyQ::from_dense(0, b.den_) +
               b.num_ * LaurentPolyQ::from_dense(0, a.den_);
      r.den_ = r.num_.is_zero() ? detail::Coeffs{Rational(1)} : detail::mul(a.den_, b.den_);
      return r;
    }
    const detail::Coeffs a_cof = detail::exact_div(a.den_, g);
    const detail::Coeffs b_cof = detail::exact_div(b.den_, g);
    const LaurentPolyQ t =
        a.num_ * LaurentPolyQ::from_dense(0, b_cof) + b.num_ * LaurentPolyQ::from_dense(0, a_cof);
    if (t.is_zero()) return {};
    RationalFunctionQ r;
    r.assign_reduced(t, detail::mul(a_cof, b.den_));
    return r;
  }

  friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return a + (-b);
  }

  friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_laurent() && b.is_laurent()) return RationalFunctionQ(a.num_ * b.num_);
    // Cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den).
    const detail::Coeffs g1 = detail::gcd(a.num_.dense(), b.den_);
    const detail::Coeffs g2 = detail::gcd(b.num_.dense(), a.den_);
    const LaurentPolyQ an = LaurentPolyQ::from_dense(a.num_.low(), detail::exact_div(a.num_.dense(), g1));
    const LaurentPolyQ bn = LaurentPolyQ::from_dense(b.num_.low(), detail::exact_div(b.num_.dense(), g2));
    detail::Coeffs den = detail::mul(detail::exact_div(a.den_, g2), detail::exact_div(b.den_, g1));
    RationalFunctionQ r;
    r.num_ = an * bn;
    const Rational lead_inv = 1 / den.back();
    r.num_ = r.num_ * LaurentPolyQ(lead_inv);
    r.den_ = detail::scale(std::move(den), lead_inv);
    return r;
  }

  friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return a * b.inverse();
  }

  RationalFunctionQ inverse() const {
    if (is_zero()) throw DomainError("inverse of the zero rational function");
    RationalFunctionQ r;
    // den / num, where num = q^low * P with P(0) != 0 and gcd(P, den) = 1 already.
    const detail::Coeffs& p = num_.dense();
    const Rational lead_inv = 1 / p.back();
    r.num_ = LaurentPolyQ::from_dense(-num_.low(), detail::scale(den_, lead_inv));
    r.den_ = detail::scale(p, lead_inv);
    return r;
  }

  RationalFunctionQ pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunctionQ result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  RationalFunctionQ& operator+=(const RationalFunctionQ& o) { return *this = *this + o; }
  RationalFunctionQ& operator-=(const RationalFunctionQ& o) { return *this = *this - o; }
  RationalFunctionQ& operator*=(const RationalFunctionQ& o) { return *this = *this * o; }
  RationalFunctionQ& operator/=(const RationalFunctionQ& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunctionQ& a, const RationalFunctionQ& b) { return !(a == b); }

  /// Normalized fraction of integer-coefficient polynomials, e.g. "q/(q+1)"
  /// or "-2/(q-1)". Parentheses wrap multi-term parts only.
  std::string to_string() const;

  /// Inverse of to_string (also accepts "*" between coefficient and q).
  static RationalFunctionQ parse(std::string_view text);

 private:
  // num is Laurent, den any nonzero polynomial with den(0) possibly zero.
  void assign_reduced(const LaurentPolyQ& num, detail::Coeffs den) {
    detail::trim(den);
    std::size_t z = 0;
    while (den[z] == 0) ++z;
    LaurentPolyQ n = num.shifted(-static_cast<int>(z));
    if (z > 0) den.erase(den.begin(), den.begin() + static_cast<long>(z));
    if (n.is_zero()) {
      num_ = {};
      den_ = {Rational(1)};
      return;
    }
    const detail::Coeffs g = detail::gcd(n.dense(), den);
    if (!detail::is_one(g)) {
      n = LaurentPolyQ::from_dense(n.low(), detail::exact_div(n.dense(), g));
      den = detail::exact_div(den, g);
    }
    const Rational lead_inv = 1 / den.back();
    num_ = n * LaurentPolyQ(lead_inv);
    den_ = detail::scale(std::move(den), lead_inv);
  }

  LaurentPolyQ num_;
  detail::Coeffs den_;
};

namespace detail {

inline std::string format_integer_poly(const ZCoeffs& c) {
  std::string out;
  bool first = true;
  for (int e = static_cast<int>(c.size()) - 1; e >= 0; --e) {
    if (c[e] == 0) continue;
    Integer mag = abs(c[e]);
    if (c[e] < 0)
      out += "-";
    else if (!first)
      out += "+";
    if (e == 0 || mag != 1) out += mag.get_str();
    if (e >= 1) out += "q";
    if (e >= 2) out += "^" + std::to_string(e);
    first = false;
  }
  return out.empty() ? "0" : out;
}

inline int count_terms(const ZCoeffs& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; }));
}

struct PolyParser {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("cannot parse rational function '" + std::string(s) + "': " + msg);
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }

  long read_int() {
    std::size_t start = i;
    if (peek() == '-' || peek() == '+') ++i;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++i;
    if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) fail("expected integer");
    return std::stol(std::string(s.substr(start, i - start)));
  }

  Integer read_natural() {
    std::size_t start = i;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++i;
    return Integer(std::string(s.substr(start, i - start)));
  }

  // poly := term { (+|-) term }, stops at ')' '/' or end.
  LaurentPolyQ poly() {
    std::map<int, Rational> terms;
    bool first = true;
    while (!done() && peek() != ')' && peek() != '/') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        fail("expected + or -");
      }
      Integer coef = 1;
      bool has_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = read_natural();
        has_coef = true;
        if (peek() == '*') ++i;
      }
      int e = 0;
      if (peek() == 'q') {
        ++i;
        e = 1;
        if (peek() == '^') {
          ++i;
          e = static_cast<int>(read_int());
        }
      } else if (!has_coef) {
        fail("expected coefficient or q");
      }
      terms[e] += Rational(sign * coef);
      first = false;
    }
    if (first) fail("empty polynomial");
    return LaurentPolyQ::from_terms(terms);
  }

  LaurentPolyQ group() {
    if (peek() == '(') {
      ++i;
      LaurentPolyQ p = peek() == '(' ? product() : poly();
      if (peek() != ')') fail("missing ')'");
      ++i;
      return p;
    }
    return poly();
  }

  // product := group { ['*'] '(' poly ')' }
  LaurentPolyQ product() {
    LaurentPolyQ r = group();
    while (peek() == '(' || (peek() == '*' && i + 1 < s.size() && s[i + 1] == '(')) {
      if (peek() == '*') ++i;
      r = r * group();
    }
    return r;
  }
};

}  // namespace detail

inline std::string RationalFunctionQ::to_string() const {
  if (is_zero()) return "0";
  // Clear negative powers of q into the denominator, then clear rationals.
  detail::Coeffs num, den;
  const int lo = num_.low();
  if (lo < 0) {
    num = num_.dense();
    den.assign(static_cast<std::size_t>(-lo), Rational(0));
    den.insert(den.end(), den_.begin(), den_.end());
  } else {
    num.assign(static_cast<std::size_t>(lo), Rational(0));
    num.insert(num.end(), num_.dense().begin(), num_.dense().end());
    den = den_;
  }
  Integer l = 1;
  for (const auto& x : num) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& x : den) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  detail::ZCoeffs zn(num.size()), zd(den.size());
  Integer g = 0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    zn[i] = num[i].get_num() * (l / num[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zn[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < den.size(); ++i) {
    zd[i] = den[i].get_num() * (l / den[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zd[i].get_mpz_t());
  }
  for (auto& x : zn) x /= g;
  for (auto& x : zd) x /= g;
  const bool den_is_one = zd.size() == 1 && zd[0] == 1;
  std::string ns = detail::format_integer_poly(zn);
  if (den_is_one) return ns;
  if (detail::count_terms(zn) > 1) ns = "(" + ns + ")";
  std::string ds = detail::format_integer_poly(zd);
  if (detail::count_terms(zd) > 1) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

inline RationalFunctionQ RationalFunctionQ::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  detail::PolyParser p{compact};
  LaurentPolyQ num = p.product();
  LaurentPolyQ den(1);
  if (p.peek() == '/') {
    ++p.i;
    den = p.product();
  }
  if (!p.done()) p.fail("trailing characters");
  return RationalFunctionQ(num, den);
}

// ---------------------------------------------------------------------------
// q-combinatorics

/// Gaussian binomial [n choose beta]_q = [n]_q! / ([beta]_q! [n-beta]_q!),
/// from the product formula prod_{i=1}^{beta} (1-q^{n-beta+i})/(1-q^i).
inline RationalFunctionQ qbinom(int n, int beta) {
  if (n < 0 || beta < 0) throw DomainError("qbinom: negative argument");
  if (beta > n) throw DomainError("qbinom: beta > n");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, RationalFunctionQ> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, beta}); it != cache.end()) return it->second;
  }
  RationalFunctionQ r(1);
  for (int i = 1; i <= beta; ++i)
    r *= RationalFunctionQ::one_minus_q_power(n - beta + i) / RationalFunctionQ::one_minus_q_power(i);
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(n, beta), r);
  return r;
}

/// mu(GL_n) = prod_{i=1}^n (1-q^{-1})/(1-q^{-i}); mu(GL_0) = 1.
inline RationalFunctionQ mu_gl(int n) {
  if (n < 0) throw DomainError("mu_gl: negative rank");
  RationalFunctionQ r(1);
  const RationalFunctionQ top = RationalFunctionQ::one_minus_q_power(-1);
  for (int i = 1; i <= n; ++i) r *= top / RationalFunctionQ::one_minus_q_power(-i);
  return r;
}

/// Polynomial in an auxiliary variable X with coefficients in Q(q).
using PolyOverQq = std::vector<RationalFunctionQ>;

inline PolyOverQq mul(const PolyOverQq& a, const PolyOverQq& b) {
  if (a.empty() || b.empty()) return {};
  PolyOverQq r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Checks X^n = sum_{beta=0}^n [n choose beta]_q prod_{i<beta} (X - q^i)
/// coefficientwise in X over Q(q).
inline bool verify_newton_identity(int n) {
  if (n < 0) throw DomainError("verify_newton_identity: negative n");
  PolyOverQq rhs(static_cast<std::size_t>(n) + 1);
  PolyOverQq falling{RationalFunctionQ(1)};
  for (int beta = 0; beta <= n; ++beta) {
    const RationalFunctionQ c = qbinom(n, beta);
    for (std::size_t k = 0; k < falling.size(); ++k) rhs[k] += c * falling[k];
    falling = mul(falling, PolyOverQq{-RationalFunctionQ::q_power(beta), RationalFunctionQ(1)});
  }
  PolyOverQq lhs(static_cast<std::size_t>(n) + 1);
  lhs[static_cast<std::size_t>(n)] = 1;
  return lhs == rhs;
}

}  // namespace padicvol
