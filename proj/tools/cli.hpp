#pragma once

// Command implementations for the rootcomb executable. Each command returns an
// OutputEnvelope (JSON) plus an aligned-text rendering; main() picks one.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootcomb/golden_data.hpp"
#include "rootcomb/rootcomb.hpp"

namespace rootcomb::cli {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kFidelity = 3 };

struct CliError : Error {
  int code;
  std::string kind;
  CliError(int c, std::string k, const std::string& msg) : Error(msg), code(c), kind(std::move(k)) {}
};

struct CommandResult {
  int exit_code = kOk;
  json envelope;
  std::string text;
};

inline json big_to_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<long long>::max()) &&
      v >= BigInt(std::numeric_limits<long long>::min()))
    return static_cast<long long>(v);
  return v.str();
}

inline json weight_to_json(const Weight& w) { return w.coords(); }

inline json make_envelope(const std::string& command, const std::string& system, json parameters) {
  return json{{"command", command},
              {"root_system", system},
              {"parameters", std::move(parameters)},
              {"rows", json::array()},
              {"format_version", kFormatVersion}};
}

inline const RootSystem& parse_system(const std::string& spec) {
  try {
    return root_system(spec);
  } catch (const InvalidType& e) {
    throw CliError(kUsage, "usage", e.what());
  }
}

// Comma-separated integers in the fundamental-weight basis.
inline Weight parse_weight(const RootSystem& rs, const std::string& text) {
  std::vector<Int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw CliError(kUsage, "usage", "cannot parse weight coordinate '" + item + "'");
    coords.push_back(v);
  }
  if (coords.size() != rs.rank())
    throw CliError(kUsage, "usage",
                   "weight '" + text + "' has " + std::to_string(coords.size()) +
                       " coordinates but " + rs.name() + " has rank " + std::to_string(rs.rank()));
  return Weight(std::move(coords));
}

namespace detail {

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

inline std::string word_string(const std::optional<std::vector<std::size_t>>& w) {
  if (!w) return "?";
  if (w->empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w->size(); ++k) s += (k ? " " : "") + ("s" + std::to_string((*w)[k]));
  return s;
}

inline std::string fidelity_line(const TableDiff& d) {
  if (d.pass()) return "fidelity: PASS";
  std::string s = "fidelity: FAIL";
  for (const auto& m : d.missing) s += "\n  missing: " + m;
  for (const auto& e : d.extra) s += "\n  extra:   " + e;
  return s;
}

inline json diff_json(const TableDiff& d) {
  return json{{"pass", d.pass()}, {"missing", d.missing}, {"extra", d.extra}};
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline CommandResult cmd_info(const std::string& system) {
  const RootSystem& rs = parse_system(system);
  CommandResult res;
  res.envelope = make_envelope("info", rs.name(), json::object());
  const Int h = rs.coxeter_number();
  const Int r = static_cast<Int>(rs.rank());
  json minuscule = json::array();
  for (std::size_t i : rs.minuscule_indices()) minuscule.push_back(weight_to_json(Weight::fundamental(rs.rank(), i)));
  json cartan = json::array();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()(i, j));
    cartan.push_back(row);
  }
  res.envelope["rows"].push_back(json{
      {"rank", r},
      {"coxeter_number", h},
      {"positive_roots", rs.num_positive_roots()},
      {"cartan_determinant", rs.cartan_determinant()},
      {"fundamental_group_order", rs.fundamental_group_order()},
      {"J", rs.minuscule_indices()},
      {"marks", rs.marks()},
      {"minuscule_weights", minuscule},
      {"highest_short_root", rs.highest_short_root().root_coords},
      {"highest_long_root", rs.highest_long_root().root_coords},
      {"h_plus_1_times_rank", (h + 1) * r},
      {"cartan", cartan}});
  std::ostringstream os;
  os << "root system            " << rs.name() << "\n"
     << "rank                   " << r << "\n"
     << "Coxeter number h       " << h << "\n"
     << "|R+|                   " << rs.num_positive_roots() << "\n"
     << "det Cartan             " << rs.cartan_determinant() << "\n"
     << "J                      " << detail::join(rs.minuscule_indices()) << "\n"
     << "minuscule weights      ";
  if (rs.minuscule_indices().empty()) os << "none";
  for (std::size_t k = 0; k < rs.minuscule_indices().size(); ++k)
    os << (k ? ", " : "") << "w" << rs.minuscule_indices()[k];
  os << "\n(h+1) r                " << (h + 1) * r << "\n";
  res.text = os.str();
  return res;
}

inline CommandResult cmd_dim(const std::string& system, const std::string& coords, bool trace) {
  const RootSystem& rs = parse_system(system);
  const Weight lambda = parse_weight(rs, coords);
  if (!lambda.is_dominant())
    throw CliError(kDomain, "domain", "weight " + lambda.to_string() + " is not dominant");
  const DegreeValue d = weyl_degree(rs, lambda, trace);
  CommandResult res;
  res.envelope = make_envelope("dim", rs.name(), json{{"weight", weight_to_json(lambda)}, {"trace", trace}});
  json row{{"weight", weight_to_json(lambda)}, {"degree", big_to_json(d.value)}};
  std::ostringstream os;
  os << "d(" << lambda.to_string() << ") = " << d.value.str() << "\n";
  if (trace) {
    json factors = json::array();
    for (std::size_t k = 0; k < d.factor_trace->size(); ++k) {
      const auto [num, den] = (*d.factor_trace)[k];
      factors.push_back(json{{"root", rs.positive_roots()[k].root_coords}, {"numerator", num}, {"denominator", den}});
      os << "  alpha=" << Weight(rs.positive_roots()[k].root_coords) << "  " << num << "/" << den << "\n";
    }
    row["factor_trace"] = factors;
  }
  res.envelope["rows"].push_back(row);
  res.text = os.str();
  return res;
}

inline CommandResult cmd_reduce(const std::string& system, const std::string& coords, Int level,
                                bool extended, bool oracle) {
  const RootSystem& rs = parse_system(system);
  const Weight lambda = parse_weight(rs, coords);
  if (level <= rs.coxeter_number())
    throw CliError(kDomain, "domain",
                   "level " + std::to_string(level) + " violates the standing assumption l > h (h = " +
                       std::to_string(rs.coxeter_number()) + ")");
  const Reduction red = reduce_to_closed_alcove(rs, lambda, level);
  const bool plain = in_orbit_of_zero(rs, lambda, level, false);
  const bool ext = in_orbit_of_zero(rs, lambda, level, true);
  CommandResult res;
  res.envelope = make_envelope(
      "reduce", rs.name(),
      json{{"weight", weight_to_json(lambda)}, {"level", level}, {"extended", extended}, {"oracle", oracle}});
  json row{{"reduced", weight_to_json(red.weight)},
           {"position", to_string(alcove_position(rs, red.weight, level).position)},
           {"witness_steps", red.steps},
           {"witness_finite_word", red.witness.finite.word ? json(*red.witness.finite.word) : json(nullptr)},
           {"witness_translation", weight_to_json(red.witness.translation)},
           {"in_W_orbit_of_zero", plain}};
  if (extended) row["in_extended_orbit_of_zero"] = ext;
  std::ostringstream os;
  os << "reduced       " << red.weight.to_string() << "\n"
     << "witness       " << (red.steps.empty() ? std::string("identity") : "") ;
  for (std::size_t k = 0; k < red.steps.size(); ++k) os << (k ? " . " : "") << red.steps[red.steps.size() - 1 - k];
  os << "\n";
  os << "in W_" << level << ".0      " << (plain ? "true" : "false") << "\n";
  if (extended) os << "in W^_" << level << ".0     " << (ext ? "true" : "false") << "\n";
  if (oracle) {
    const bool plain_bfs = in_orbit_of_zero(rs, lambda, level, false, OrbitMethod::bfs);
    const bool ext_bfs = in_orbit_of_zero(rs, lambda, level, true, OrbitMethod::bfs);
    const bool agree = plain_bfs == plain && ext_bfs == ext;
    row["oracle"] = json{{"in_W_orbit_of_zero", plain_bfs}, {"in_extended_orbit_of_zero", ext_bfs}, {"agrees", agree}};
    os << "oracle        " << (agree ? "agrees" : "DISAGREES") << "\n";
    if (!agree) res.exit_code = kFidelity;
  }
  res.envelope["rows"].push_back(row);
  res.text = os.str();
  return res;
}

struct TablesOptions {
  std::string which;
  std::size_t max_rank = 8;
  Int max_level = 30;
  Int p = 5;
  std::optional<std::string> system;  // omega only
  std::optional<Int> level;           // omega only
  bool oracle = false;
};

inline CommandResult tables_minuscule(const TablesOptions& o) {
  CommandResult res;
  res.envelope = make_envelope("tables", "all", json{{"which", "minuscule"}, {"max_rank", o.max_rank}});
  const auto produced = minuscule_table(o.max_rank);
  const auto diff = diff_minuscule(produced, golden::expected_minuscule(golden::minuscule_table(), o.max_rank));
  std::ostringstream os;
  os << std::left << std::setw(6) << "R" << std::setw(5) << "h" << std::setw(14) << "J" << "d(w_i), i in J\n";
  for (const auto& m : produced) {
    json degs = json::array();
    std::string dtxt;
    for (std::size_t k = 0; k < m.degrees.size(); ++k) {
      degs.push_back(big_to_json(m.degrees[k]));
      dtxt += (k ? "," : "") + m.degrees[k].str();
    }
    res.envelope["rows"].push_back(json{{"system", m.type.name()}, {"h", m.h}, {"J", m.J}, {"degrees", degs},
                                        {"provenance", to_string(Provenance::minuscule_table)}});
    os << std::setw(6) << m.type.name() << std::setw(5) << m.h << std::setw(14) << detail::join(m.J) << dtxt
       << "\n";
  }
  res.envelope["fidelity"] = detail::diff_json(diff);
  os << detail::fidelity_line(diff) << "\n";
  if (!diff.pass()) res.exit_code = kFidelity;
  res.text = os.str();
  return res;
}

inline CommandResult tables_small(const TablesOptions& o) {
  CommandResult res;
  res.envelope = make_envelope("tables", "all",
                               json{{"which", "small"}, {"max_rank", o.max_rank}, {"max_level", o.max_level}});
  const auto r = small_degree_classification(o.max_rank, o.max_level, golden::small_degree_table());
  std::ostringstream os;
  os << std::left << std::setw(14) << "R" << std::setw(10) << "l" << std::setw(22) << "lambda"
     << "verified at levels\n";
  json families = json::array();
  for (const auto& f : r.families) {
    std::string levels;
    for (std::size_t k = 0; k < f.hit_levels.size(); ++k) levels += (k ? "," : "") + std::to_string(f.hit_levels[k]);
    families.push_back(json{{"R", f.R}, {"level", f.level}, {"lambda", f.lambda},
                            {"predicted_levels", f.predicted_levels}, {"hit_levels", f.hit_levels},
                            {"verified", f.verified}, {"inferred", true}});
    os << std::setw(14) << f.R << std::setw(10) << f.level << std::setw(22) << f.lambda
       << (f.verified ? "" : "[UNVERIFIED] ") << levels << "\n";
  }
  for (const auto& row : r.instances)
    res.envelope["rows"].push_back(json{{"system", row.system.name()},
                                        {"level", *row.level.value},
                                        {"level_constraint", row.level.tag},
                                        {"weight", weight_to_json(row.weight)},
                                        {"degree", big_to_json(row.degree)},
                                        {"provenance", to_string(row.provenance)},
                                        {"labels", row.labels},
                                        {"inferred", row.inferred}});
  json fid = detail::diff_json(r.diff);
  fid["failures"] = r.failures;
  fid["pass"] = r.pass();
  res.envelope["families"] = families;
  res.envelope["fidelity"] = fid;
  os << r.instances.size() << " instances found; level constraints inferred from hits\n";
  for (const auto& f : r.failures) os << "  failed: " << f << "\n";
  os << detail::fidelity_line(r.diff) << (r.pass() || !r.diff.pass() ? "" : " (claims failed)") << "\n";
  if (!r.pass()) res.exit_code = kFidelity;
  res.text = os.str();
  return res;
}

inline CommandResult tables_g1(const TablesOptions& o) {
  if (!is_prime(o.p) || o.p <= 2)
    throw CliError(kDomain, "domain", "--p must be an odd prime for the g1 table");
  CommandResult res;
  res.envelope = make_envelope("tables", "all", json{{"which", "g1"}, {"p", o.p}});
  const auto r = g1_table(o.p, golden::g1_table());
  std::ostringstream os;
  os << std::left << std::setw(6) << "R" << std::setw(30) << "lambda" << " " << std::setw(6) << "i(0)" << "V\n";
  for (const auto& row : r.rows) {
    json ws = json::array();
    std::string wtxt;
    for (std::size_t k = 0; k < row.weights.size(); ++k) {
      ws.push_back(weight_to_json(row.weights[k]));
      wtxt += (k ? " " : "") + row.weights[k].to_string();
    }
    res.envelope["rows"].push_back(json{{"system", row.type.name()}, {"weights", ws}, {"indices", row.indices},
                                        {"i0", row.i0}, {"degree", big_to_json(row.degree)}, {"V", row.V},
                                        {"labels", row.labels},
                                        {"provenance", to_string(Provenance::g1_table)}});
    os << std::setw(6) << row.type.name() << std::setw(30) << wtxt << " " << std::setw(6) << row.i0 << row.V << "\n";
  }
  json fid = detail::diff_json(r.diff);
  fid["failures"] = r.failures;
  fid["pass"] = r.pass();
  res.envelope["fidelity"] = fid;
  for (const auto& f : r.failures) os << "  failed: " << f << "\n";
  os << detail::fidelity_line(r.diff) << "\n";
  if (!r.pass()) res.exit_code = kFidelity;
  res.text = os.str();
  return res;
}

inline CommandResult tables_omega(const TablesOptions& o) {
  std::vector<RootSystemType> types;
  if (o.system) types.push_back(parse_system(*o.system).type());
  else types = all_types(o.max_rank);
  CommandResult res;
  json params{{"which", "omega"}, {"max_rank", o.max_rank}, {"oracle", o.oracle}};
  if (o.level) params["level"] = *o.level;
  res.envelope = make_envelope("tables", o.system ? parse_system(*o.system).name() : "all", params);
  std::ostringstream os;
  os << std::left << std::setw(6) << "R" << std::setw(5) << "l" << std::setw(5) << "i" << std::setw(22)
     << "gamma . 0" << "finite part w0 wi\n";
  TableDiff diff;
  for (const RootSystemType& t : types) {
    const RootSystem& rs = root_system(t);
    const Int l = o.level.value_or(rs.coxeter_number() + 1);
    if (l <= rs.coxeter_number()) {
      if (o.system)
        throw CliError(kDomain, "domain", "level must exceed h = " + std::to_string(rs.coxeter_number()));
      continue;
    }
    const auto omega = omega_elements(rs, l);
    if (static_cast<Int>(omega.size()) != rs.fundamental_group_order())
      diff.extra.push_back(rs.name() + ": |Omega| != |X/ZR|");
    const auto expected = extended_orbit_meets_alcove(rs, l);
    std::vector<Weight> images;
    for (std::size_t k = 0; k < omega.size(); ++k) {
      const std::size_t i = k == 0 ? 0 : rs.minuscule_indices()[k - 1];
      const Weight img = dot_apply(rs, omega[k], Weight(rs.rank()));
      images.push_back(img);
      if (k > 0 && img != (l - rs.coxeter_number()) * Weight::fundamental(rs.rank(), i))
        diff.extra.push_back(rs.name() + ": gamma_" + std::to_string(i) + ".0 != (l-h) w_i");
      res.envelope["rows"].push_back(json{{"system", rs.name()}, {"level", l}, {"index", i},
                                          {"image_of_zero", weight_to_json(img)},
                                          {"finite_word", omega[k].finite.word ? json(*omega[k].finite.word) : json(nullptr)},
                                          {"translation", weight_to_json(omega[k].translation)}});
      os << std::setw(6) << rs.name() << std::setw(5) << l << std::setw(5) << (k == 0 ? std::string("-") : std::to_string(i))
         << std::setw(22) << img.to_string() << detail::word_string(omega[k].finite.word) << "\n";
    }
    std::sort(images.begin(), images.end());
    if (images != expected) diff.extra.push_back(rs.name() + ": Omega . 0 differs from {0} u {(l-h) w_i}");
    if (o.oracle && rs.rank() <= 3) {
      std::vector<Weight> bfs;
      for (const Weight& w : bfs_dot_orbit_of_zero(rs, l, true, 4 * l))
        if (alcove_position(rs, w, l).in_open()) bfs.push_back(w);
      std::sort(bfs.begin(), bfs.end());
      if (bfs != expected) diff.missing.push_back(rs.name() + ": BFS orbit meets C_l differently");
    }
  }
  res.envelope["fidelity"] = detail::diff_json(diff);
  os << detail::fidelity_line(diff) << "\n";
  if (!diff.pass()) res.exit_code = kFidelity;
  res.text = os.str();
  return res;
}

inline std::vector<std::string> tables_warnings(const TablesOptions& o) {
  std::vector<std::string> w;
  if ((o.which == "minuscule" || o.which == "small") && o.max_rank < 8)
    w.push_back("--max-rank below the default 8: fidelity check is partial");
  if (o.which == "small" && o.max_level < 30)
    w.push_back("--max-level below the default 30: fidelity check is partial");
  return w;
}

inline CommandResult cmd_tables(const TablesOptions& o) {
  CommandResult res;
  if (o.which == "minuscule") res = tables_minuscule(o);
  else if (o.which == "small") res = tables_small(o);
  else if (o.which == "g1") res = tables_g1(o);
  else if (o.which == "omega") res = tables_omega(o);
  else throw CliError(kUsage, "usage", "--which must be one of minuscule, small, g1, omega");
  const auto warnings = tables_warnings(o);
  if (!warnings.empty()) {
    res.envelope["warnings"] = warnings;
    std::string prefix;
    for (const auto& w : warnings) prefix += "warning: " + w + "\n";
    res.text = prefix + res.text;
  }
  return res;
}

inline CommandResult cmd_steinberg(const std::string& system, const std::string& coords, Int p) {
  const RootSystem& rs = parse_system(system);
  const Weight lambda = parse_weight(rs, coords);
  if (p < 2) throw CliError(kDomain, "domain", "--p must be >= 2");
  if (!lambda.is_dominant())
    throw CliError(kDomain, "domain", "weight " + lambda.to_string() + " is not dominant");
  const SteinbergDigits d = steinberg_decompose(rs, lambda, p);
  CommandResult res;
  res.envelope = make_envelope("steinberg", rs.name(), json{{"weight", weight_to_json(lambda)}, {"p", p}});
  std::ostringstream os;
  os << lambda.to_string() << " =";
  if (d.digits.empty()) os << " 0";
  for (std::size_t k = 0; k < d.digits.size(); ++k) {
    res.envelope["rows"].push_back(json{{"index", k}, {"digit", weight_to_json(d.digits[k])}});
    os << (k ? " +" : "") << " " << p << "^" << k << "*(" << d.digits[k].to_string() << ")";
  }
  os << "\n";
  res.text = os.str();
  return res;
}

inline CommandResult cmd_primes(const std::string& system, Int p) {
  const RootSystem& rs = parse_system(system);
  if (!is_prime(p)) throw CliError(kDomain, "domain", std::to_string(p) + " is not prime");
  const PrimeVerdict v = rs.prime_class(p);
  CommandResult res;
  res.envelope = make_envelope("primes", rs.name(), json{{"p", p}});
  res.envelope["rows"].push_back(json{{"p", p}, {"class", to_string(v.cls)}, {"rule", v.rule}});
  res.text = rs.name() + " p=" + std::to_string(p) + ": " + to_string(v.cls) + " (" + v.rule + ")\n";
  return res;
}

}  // namespace rootcomb::cli
