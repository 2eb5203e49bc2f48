#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "padicvol/errors.hpp"

namespace padicvol {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (surrounding blanks allowed) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw DomainError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find('-') != std::string::npos)
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  Rational r{Integer(num), Integer(den)};
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// r^e for any integer e; r must be nonzero when e < 0.
inline Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) throw DomainError("negative power of zero");
    Rational inv = 1 / r;
    return pow(inv, -e);
  }
  Rational result = 1;
  Rational base = r;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

/// p-adic valuation of a nonzero rational.
inline long valuation(const Rational& r, unsigned long p) {
  if (r == 0) throw DomainError("valuation of zero");
  long v = 0;
  Integer num = abs(r.get_num());
  Integer den = r.get_den();
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    num /= p;
    ++v;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    den /= p;
    --v;
  }
  return v;
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace padicvol
