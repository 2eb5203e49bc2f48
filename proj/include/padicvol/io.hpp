#pragma once

// JSON encodings used by the command-line tool. Requires nlohmann/json.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicvol/germs.hpp"
#include "padicvol/invariants.hpp"
#include "padicvol/lfactors.hpp"
#include "padicvol/orbital.hpp"
#include "padicvol/qring.hpp"
#include "padicvol/verify.hpp"

namespace padicvol::io {

using nlohmann::json;

inline json encode(const RationalFunctionQ& r) { return r.to_string(); }
inline json encode(const Rational& r) { return r.get_str(); }

inline json encode(const GermExpansion& g) {
  json terms = json::array();
  for (const auto& [k, c] : g.terms()) terms.push_back({{"a", k.first}, {"b", k.second}, {"coeff", c.to_string()}});
  return {{"terms", terms}, {"validity_from", g.validity_from()}};
}

inline json encode(const TruncatedSeries& s) {
  json c = json::array();
  for (const auto& v : s.coeffs()) c.push_back(v.get_str());
  return {{"coeffs", c}};
}

inline json encode(const OrbitalGermCoefficients& c) {
  json out = json::array();
  for (const auto& [k, v] : c.coeffs) out.push_back({{"class", {k[0], k[1], k[2]}}, {"coeff", v.to_string()}});
  return out;
}

/// A rational from a JSON integer or a "p/q" string.
inline Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw DomainError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline ClampedVector decode_clamped(const json& j) {
  if (!j.is_array()) throw DomainError("clamped vector must be an array");
  ClampedVector v;
  for (const auto& e : j) {
    if (e.is_string() && e.get<std::string>() == "inf")
      v.emplace_back(std::nullopt);
    else if (e.is_number_integer())
      v.emplace_back(e.get<int>());
    else
      throw DomainError("clamped entry must be an integer or \"inf\", got " + e.dump());
  }
  return v;
}

inline json encode(const ClampedVector& v) {
  json out = json::array();
  for (const auto& e : v) {
    if (e)
      out.push_back(*e);
    else
      out.push_back("inf");
  }
  return out;
}

/// {n, N, entries: [{first, second, value}]}
inline OrbitalProfile decode_profile(const json& j) {
  try {
    OrbitalProfile phi(j.at("n").get<int>(), j.at("N").get<int>());
    for (const auto& e : j.at("entries"))
      phi.set(decode_clamped(e.at("first")), decode_clamped(e.at("second")), decode_rational(e.at("value")));
    return phi;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed profile: ") + e.what());
  }
}

inline json encode(const OrbitalProfile& phi) {
  json entries = json::array();
  for (const auto& [k, v] : phi.values())
    entries.push_back({{"first", encode(k.first)}, {"second", encode(k.second)}, {"value", v.get_str()}});
  return {{"n", phi.n()}, {"N", phi.N()}, {"entries", entries}};
}

/// An array of rows, or an object holding one under "gamma".
inline Matrix decode_matrix(const json& j) {
  const json& rows = j.is_object() ? j.at("gamma") : j;
  if (!rows.is_array()) throw DomainError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    if (!row.is_array()) throw DomainError("matrix row must be an array");
    std::vector<Rational> v;
    for (const auto& e : row) v.push_back(decode_rational(e));
    r.push_back(std::move(v));
  }
  return Matrix::from_rows(r);
}

inline json encode(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

inline json encode(const VerifyReport& r) {
  json suites = json::object();
  for (const auto& s : r.suites) {
    json props = json::array();
    json counterexamples = json::array();
    for (const auto& p : s.properties) {
      props.push_back({{"name", p.name}, {"cases", p.cases}, {"failures", p.failures}});
      if (!p.ok()) counterexamples.push_back({{"property", p.name}, {"input", p.counterexample}});
    }
    suites[s.suite] = {{"passed", s.passed()}, {"failed", s.failed()}, {"properties", props},
                       {"counterexamples", counterexamples}};
  }
  return {{"suites", suites}, {"status", r.ok() ? "success" : "failure"}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace padicvol::io
