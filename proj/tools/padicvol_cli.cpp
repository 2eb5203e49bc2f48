// padicvol: command-line front end.
//
// Exit codes: 0 success, 1 a checked identity failed, 2 bad configuration or input.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padicvol/io.hpp"
#include "padicvol/padicvol.hpp"

using namespace padicvol;
using nlohmann::json;

namespace {

enum class Format { Json, Csv, Latex };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  json doc;
  Table table;
  int status = 0;
};

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

void emit(const Output& out, Format f) {
  if (f == Format::Json) {
    std::cout << out.doc.dump(2) << "\n";
    return;
  }
  if (out.table.header.empty()) throw ConfigError("this command has no table form; use --format json");
  if (f == Format::Csv) {
    auto line = [](const std::vector<std::string>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const bool quote = v[i].find(',') != std::string::npos;
        s += (i ? "," : "") + (quote ? "\"" + v[i] + "\"" : v[i]);
      }
      return s;
    };
    std::cout << line(out.table.header) << "\n";
    for (const auto& r : out.table.rows) std::cout << line(r) << "\n";
    return;
  }
  std::cout << "\\begin{tabular}{" << std::string(out.table.header.size(), 'l') << "}\n";
  auto line = [](const std::vector<std::string>& v, bool math) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? " & " : "") + (math ? "$" + v[i] + "$" : latex_escape(v[i]));
    return s + " \\\\\n";
  };
  std::cout << line(out.table.header, false) << "\\hline\n";
  for (const auto& r : out.table.rows) std::cout << line(r, true);
  std::cout << "\\end{tabular}\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  for (const auto& t : split(s, ',')) {
    const Rational r = parse_rational(t);
    if (r.get_den() != 1 || !r.get_num().fits_sint_p()) throw DomainError("expected integers, got '" + s + "'");
    v.push_back(static_cast<int>(r.get_num().get_si()));
  }
  return v;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> v;
  for (const auto& t : split(s, ',')) v.push_back(parse_rational(t));
  return v;
}

json encode_ints(const std::vector<int>& v) { return json(v); }

Table series_table(const TruncatedSeries& s) {
  Table t{{"degree", "coeff"}, {}};
  for (int k = 0; k <= s.order(); ++k) t.rows.push_back({std::to_string(k), s[k].get_str()});
  return t;
}

Table germ_table(const GermExpansion& g) {
  Table t{{"a", "b", "coeff"}, {}};
  for (const auto& [k, c] : g.terms()) t.rows.push_back({std::to_string(k.first), std::to_string(k.second), c.to_string()});
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-adic volumes, germ expansions, local L-factors, transfer factors and branching"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::uint64_t seed = VerifyConfig{}.rng_seed;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "latex"}));
  app.add_option("--seed", seed, "Random seed for verify");

  // cell
  auto* cell = app.add_subcommand("cell", "Volume of the Cartan cell K w^lambda K (lambda increasing)");
  std::string cell_lambda;
  bool cell_oracle = false;
  int cell_p = 3;
  cell->add_option("--lambda", cell_lambda, "Comma-separated weakly increasing entries")->required();
  cell->add_flag("--oracle", cell_oracle, "Also count cosets by brute force");
  cell->add_option("-p", cell_p, "Prime for the oracle");

  // vol
  auto* vol = app.add_subcommand("vol", "Weighted volume vol_{n,alpha}(x)");
  int vol_n = 0, vol_a = 0, vol_x = 0;
  std::string vol_method = "recur2";
  bool vol_table = false;
  vol->add_option("-n", vol_n, "Rank")->required();
  vol->add_option("-a", vol_a, "Weight exponent alpha")->required();
  vol->add_option("-x", vol_x, "Box bound")->required();
  vol->add_option("--method", vol_method, "direct|recur|recur2")->check(CLI::IsMember({"direct", "recur", "recur2"}));
  vol->add_flag("--table", vol_table, "All values for 0..x");

  // germ
  auto* germ = app.add_subcommand("germ", "Germ expansion of a sequence");
  bool germ_vol = false;
  int germ_n = 0, germ_a = 0;
  germ->add_flag("--vol", germ_vol, "Expand vol_{n,alpha}")->required();
  germ->add_option("-n", germ_n, "Rank")->required();
  germ->add_option("-a", germ_a, "Weight exponent alpha")->required();

  // orbital
  auto* orb = app.add_subcommand("orbital", "Contracted orbital integral of a profile");
  std::string orb_file;
  int orb_x = 0;
  bool orb_germ = false;
  orb->add_option("--profile", orb_file, "Profile JSON file")->required();
  orb->add_option("-x", orb_x, "Valuation of t")->required();
  orb->add_flag("--germ", orb_germ, "Also report the germ expansion and block coefficients");

  // lfactor
  auto* lf = app.add_subcommand("lfactor", "Unramified local L-factors");
  std::string lf_kind, lf_satake, lf_torus, lf_pairs = "ordered";
  std::string lf_q = "3";
  int lf_eta = 1, lf_eta0 = 1, lf_D = 6;
  int lf_shift = 0;
  bool lf_has_shift = false;
  lf->add_option("kind", lf_kind, "std|extsq|tate|bf")->required()->check(CLI::IsMember({"std", "extsq", "tate", "bf"}));
  lf->add_option("--satake", lf_satake, "Comma-separated Satake parameters");
  lf->add_option("-q,--q", lf_q, "Residue cardinality");
  lf->add_option("--eta", lf_eta, "Character sign (+1 or -1); eta_1 for bf");
  lf->add_option("--eta0", lf_eta0, "Second character sign for bf");
  lf->add_option("-D", lf_D, "Truncation degree");
  lf->add_option("--torus", lf_torus, "Torus factors d:sign, e.g. 2:+1,1:-1");
  lf->add_option("--pairs", lf_pairs, "ordered (i<j) or distinct (i!=j)")->check(CLI::IsMember({"ordered", "distinct"}));
  auto* shift_opt = lf->add_option("--shift", lf_shift, "extsq: check the shift identity for this a");

  // transfer
  auto* tr = app.add_subcommand("transfer", "Transfer factor Omega(gamma, w)");
  std::string tr_gamma, tr_w, tr_signs = "1,1,1";
  long tr_p = 3;
  tr->add_option("--gamma", tr_gamma, "JSON file with the 2n x 2n matrix")->required();
  tr->add_option("--w", tr_w, "Row vector w")->required();
  tr->add_option("--p", tr_p, "Prime");
  tr->add_option("--signs", tr_signs, "eta0,eta1,eta2 each 1 or q");

  // branch
  auto* br = app.add_subcommand("branch", "U(2n) to U(n) x U(n) multiplicity of the trivial representation");
  std::string br_weight;
  br->add_option("--weight", br_weight, "Weakly decreasing weight of even length")->required();

  // verify
  auto* ver = app.add_subcommand("verify", "Run the property suites");
  VerifyConfig cfg;
  std::string ver_suites = "all", ver_primes;
  ver->add_option("--suites", ver_suites, "Comma-separated suites or 'all'");
  ver->add_option("--n-max", cfg.n_max, "Largest rank");
  ver->add_option("--x-max", cfg.x_max, "Largest box bound");
  ver->add_option("--seeds", cfg.seeds, "Random cases per property (scale)");
  ver->add_option("--primes", ver_primes, "Comma-separated primes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Format fmt = format == "csv" ? Format::Csv : format == "latex" ? Format::Latex : Format::Json;
  lf_has_shift = shift_opt->count() > 0;

  try {
    Output out;
    if (*cell) {
      const SignedPartition lambda(parse_ints(cell_lambda));
      const RationalFunctionQ v = cell_volume(lambda);
      out.doc = {{"lambda", encode_ints(lambda.entries())}, {"volume", v.to_string()}};
      out.table = {{"lambda", "volume"}, {{cell_lambda, v.to_string()}}};
      if (cell_oracle) {
        const auto count = count_cosets_oracle(lambda, cell_p);
        out.doc["oracle_count"] = count;
        out.doc["p"] = cell_p;
        out.table.header.push_back("oracle_count");
        out.table.rows[0].push_back(std::to_string(count));
        if (v.evaluate(cell_p) != Rational(Integer(std::to_string(count)))) out.status = 1;
      }
    } else if (*vol) {
      auto compute = [&](int x) -> RationalFunctionQ {
        const VolParams p{vol_n, vol_a, x};
        if (vol_method == "direct") return vol_direct(p);
        if (vol_method == "recur") return vol_recur(p);
        return vol_recur2(p);
      };
      const json params = {{"n", vol_n}, {"alpha", vol_a}, {"x", vol_x}, {"method", vol_method}};
      out.table.header = {"n", "alpha", "x", "value"};
      if (vol_table) {
        json values = json::array();
        for (int x = 0; x <= vol_x; ++x) {
          const std::string v = compute(x).to_string();
          values.push_back({{"x", x}, {"value", v}});
          out.table.rows.push_back({std::to_string(vol_n), std::to_string(vol_a), std::to_string(x), v});
        }
        out.doc = {{"params", params}, {"values", values}};
      } else {
        const std::string v = compute(vol_x).to_string();
        out.doc = {{"params", params}, {"value", v}};
        out.table.rows.push_back({std::to_string(vol_n), std::to_string(vol_a), std::to_string(vol_x), v});
      }
    } else if (*germ) {
      const GermExpansion g = germ_of_vol(germ_n, germ_a);
      out.doc = io::encode(g);
      out.table = germ_table(g);
    } else if (*orb) {
      const OrbitalProfile phi = io::decode_profile(io::read_json_file(orb_file));
      const RationalFunctionQ v = orbital_direct(phi, orb_x);
      out.doc = {{"x", orb_x}, {"value", v.to_string()}};
      out.table = {{"x", "value"}, {{std::to_string(orb_x), v.to_string()}}};
      if (orb_germ) {
        const GermExpansion g = orbital_germ(phi);
        out.doc["germ"] = io::encode(g);
        out.doc["coefficients"] = io::encode(orbital_coeffs(phi));
        out.doc["linear_term_holds"] = check_linear_term(phi);
        out.table = germ_table(g);
        if (!check_linear_term(phi)) out.status = 1;
        if (orb_x >= g.validity_from() && g.eval(orb_x) != v) out.status = 1;
      }
    } else if (*lf) {
      SatakeData s{parse_rationals(lf_satake), parse_rational(lf_q)};
      if (lf_kind == "std") {
        const TruncatedSeries r = std_lfactor(s, lf_eta, lf_D);
        out.doc = io::encode(r);
        out.table = series_table(r);
      } else if (lf_kind == "extsq") {
        const TruncatedSeries r =
            ext_sq_lfactor(s, lf_eta, lf_D, lf_pairs == "distinct" ? Pairs::Distinct : Pairs::Ordered);
        out.doc = io::encode(r);
        out.table = series_table(r);
        if (lf_has_shift) {
          const bool ok = check_ext_sq_shift(s, lf_shift, lf_D);
          out.doc["shift"] = lf_shift;
          out.doc["shift_identity_holds"] = ok;
          if (!ok) out.status = 1;
        }
      } else if (lf_kind == "tate") {
        UnramifiedTorusData t;
        for (const auto& f : split(lf_torus, ',')) {
          const auto parts = split(f, ':');
          if (parts.size() != 2) throw DomainError("torus factor must be d:sign, got '" + f + "'");
          t.factors.emplace_back(parse_ints(parts[0]).at(0), parse_ints(parts[1]).at(0));
        }
        const auto [direct, closed] = tate_series(t, lf_D);
        out.doc = io::encode(closed);
        out.doc["direct"] = io::encode(direct)["coeffs"];
        out.doc["identity_holds"] = direct == closed;
        out.table = series_table(closed);
        if (!(direct == closed)) out.status = 1;
      } else {
        const bool ok = bf_unramified_check(s, lf_eta, lf_eta0, lf_D);
        out.doc = {{"holds", ok}, {"D", lf_D}};
        out.table = {{"holds"}, {{ok ? "true" : "false"}}};
        if (!ok) out.status = 1;
      }
    } else if (*tr) {
      const Matrix gamma = io::decode_matrix(io::read_json_file(tr_gamma));
      const std::vector<Rational> w = parse_rationals(tr_w);
      const auto sig = split(tr_signs, ',');
      if (sig.size() != 3) throw DomainError("--signs needs three entries eta0,eta1,eta2");
      const TransferSigns signs{parse_character(sig[0]), parse_character(sig[1]), parse_character(sig[2])};
      const SymmetricSpacePoint x = project_sym(gamma, tr_p);
      const int omega = transfer_factor(gamma, w, signs, tr_p);
      json cl = json::array();
      std::string cls;
      for (const auto& c : car_lin(x)) {
        cl.push_back(c.get_str());
        cls += (cls.empty() ? "" : " ") + c.get_str();
      }
      out.doc = {{"omega", omega}, {"car_lin", cl}, {"strongly_regular", is_strongly_regular(x, w)}};
      out.table = {{"omega", "car_lin"}, {{std::to_string(omega), cls}}};
    } else if (*br) {
      const DominantWeight w(parse_ints(br_weight));
      const auto m = branching_multiplicity(w);
      const bool sa = self_associate(w);
      out.doc = {{"weight", encode_ints(w.entries())}, {"multiplicity", m}, {"self_associate", sa}};
      out.table = {{"weight", "multiplicity", "self_associate"}, {{br_weight, std::to_string(m), sa ? "true" : "false"}}};
    } else if (*ver) {
      cfg.rng_seed = seed;
      if (ver_suites != "all") cfg.suites = split(ver_suites, ',');
      if (!ver_primes.empty()) {
        cfg.primes.clear();
        for (int p : parse_ints(ver_primes)) cfg.primes.push_back(p);
      }
      const VerifyReport report = run_verify(cfg);
      out.doc = io::encode(report);
      out.table.header = {"suite", "passed", "failed"};
      for (const auto& s : report.suites)
        out.table.rows.push_back({s.suite, std::to_string(s.passed()), std::to_string(s.failed())});
      out.status = report.exit_status();
    }
    emit(out, fmt);
    return out.status;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInputError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 2;
  } catch (const FitError& e) {
    std::cerr << "fit error: " << e.what() << "\n";
    return 1;
  }
}
