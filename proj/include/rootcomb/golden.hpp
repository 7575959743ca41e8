#pragma once

// Instantiation of the reference tables stored under data/golden/.
//
// The golden files transcribe the published tables symbolically (formulas in r, i, l, p,
// see table_expr.hpp). Nothing here computes root-system data beyond the Coxeter number
// used by the "l = h+1" level condition; the tables are checked by comparing these
// instantiations with the searches in classify.hpp.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootcomb/root_system.hpp"
#include "rootcomb/table_expr.hpp"
#include "rootcomb/weight.hpp"

namespace rootcomb {

using BigInt = boost::multiprecision::cpp_int;
using json = nlohmann::json;

struct TypedWeight {
  RootSystemType type;
  Weight weight;

  std::string to_string() const { return type.name() + ":" + weight.to_string(); }
  friend bool operator==(const TypedWeight&, const TypedWeight&) = default;
  friend auto operator<=>(const TypedWeight& a, const TypedWeight& b) {
    if (auto c = a.type <=> b.type; c != 0) return c;
    return a.weight <=> b.weight;
  }
};

// Identifies the low-rank coincidences B_1 = C_1 = A_1 and B_2 = C_2; B_2 is mapped onto
// C_2 by exchanging the two nodes. Returns nullopt for ranks that name no type.
inline std::optional<TypedWeight> canonicalize(Family f, long long rank, const Weight& w) {
  if (rank < 1 || static_cast<long long>(w.rank()) != rank) return std::nullopt;
  const std::size_t r = static_cast<std::size_t>(rank);
  if ((f == Family::B || f == Family::C) && r == 1) return TypedWeight{{Family::A, 1}, w};
  if (f == Family::B && r == 2) return TypedWeight{{Family::C, 2}, Weight{w[1], w[0]}};
  try {
    return TypedWeight{RootSystemType(f, r), w};
  } catch (const InvalidType&) {
    return std::nullopt;
  }
}

inline TypedWeight canonicalize(const TypedWeight& tw) {
  auto c = canonicalize(tw.type.family, static_cast<long long>(tw.type.rank), tw.weight);
  ROOTCOMB_INVARIANT(c.has_value(), "buildable type failed to canonicalize");
  return *c;
}

namespace golden {

inline Family family_of(const json& row) {
  const std::string f = row.at("family").get<std::string>();
  if (f.size() != 1 || std::string_view("ABCDEFG").find(f[0]) == std::string_view::npos)
    throw Error("golden table: bad family '" + f + "'");
  return static_cast<Family>(std::string_view("ABCDEFG").find(f[0]));
}

// Weights of a row as lists of {index, coef} terms; nullopt if an index formula has no
// integer value or falls outside 1..rank.
inline std::optional<std::vector<Weight>> weights_of(const json& row, std::size_t rank,
                                                     const table_expr::Bindings& vars) {
  std::vector<Weight> out;
  for (const json& terms : row.at("weights")) {
    Weight w(rank);
    for (const json& t : terms) {
      long long idx = 0, coef = 0;
      if (!table_expr::try_evaluate_int(t.at("index").get<std::string>(), vars, idx) ||
          !table_expr::try_evaluate_int(t.at("coef").get<std::string>(), vars, coef))
        return std::nullopt;
      if (idx < 1 || idx > static_cast<long long>(rank)) return std::nullopt;
      w[static_cast<std::size_t>(idx - 1)] += coef;
    }
    out.push_back(std::move(w));
  }
  return out;
}

struct MinusculeRow {
  RootSystemType type;
  Int h = 0;
  std::vector<std::size_t> J;
  std::vector<BigInt> degrees;  // d(varpi_i) for i in J, same order

  friend bool operator==(const MinusculeRow&, const MinusculeRow&) = default;
};

// Rows of the minuscule table for every rank r <= max_rank the table covers.
inline std::vector<MinusculeRow> expected_minuscule(const json& table, std::size_t max_rank) {
  std::vector<MinusculeRow> out;
  for (const json& row : table.at("rows")) {
    const Family f = family_of(row);
    std::vector<std::size_t> ranks;
    if (row.contains("rank")) {
      ranks.push_back(row.at("rank").get<std::size_t>());
    } else {
      for (std::size_t r = row.at("rank_min").get<std::size_t>(); r <= max_rank; ++r)
        ranks.push_back(r);
    }
    for (std::size_t r : ranks) {
      if (r > max_rank) continue;
      table_expr::Bindings vars{{"r", static_cast<long long>(r)}};
      MinusculeRow m{RootSystemType(f, r), table_expr::evaluate_int(row.at("h").get<std::string>(), vars), {}, {}};
      if (row.contains("J_range")) {
        const long long lo = table_expr::evaluate_int(row["J_range"][0].get<std::string>(), vars);
        const long long hi = table_expr::evaluate_int(row["J_range"][1].get<std::string>(), vars);
        for (long long i = lo; i <= hi; ++i) {
          auto v = vars;
          v["i"] = i;
          m.J.push_back(static_cast<std::size_t>(i));
          m.degrees.push_back(table_expr::evaluate(row.at("degree_per_index").get<std::string>(), v));
        }
      } else {
        const json& js = row.at("J");
        const json& ds = row.at("degrees");
        if (js.size() != ds.size()) throw Error("golden minuscule row: J and degrees differ in length");
        for (std::size_t k = 0; k < js.size(); ++k) {
          m.J.push_back(static_cast<std::size_t>(table_expr::evaluate_int(js[k].get<std::string>(), vars)));
          m.degrees.push_back(table_expr::evaluate(ds[k].get<std::string>(), vars));
        }
      }
      out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MinusculeRow& a, const MinusculeRow& b) { return a.type < b.type; });
  return out;
}

// Level conditions: "any", "l odd", "l = h+1", "l = <N>" (and "p odd" for the g1 table).
inline bool level_condition_holds(const std::string& cond, Int level, Int h) {
  if (cond == "any" || cond.empty()) return true;
  if (cond == "l odd" || cond == "p odd") return level % 2 != 0;
  if (cond == "l = h+1") return level == h + 1;
  if (cond.rfind("l = ", 0) == 0) return level == std::stoll(cond.substr(4));
  throw Error("golden table: unknown level condition '" + cond + "'");
}

struct ExpectedInstance {
  std::size_t row = 0;  // index into the golden rows
  TypedWeight canonical;
  Int level = 0;
};

// Instances of the small-degree table for 3 <= l <= max_level with canonical rank
// <= max_rank, respecting l > h.
inline std::vector<ExpectedInstance> expected_small_degree(const json& table, std::size_t max_rank,
                                                           Int max_level) {
  std::vector<ExpectedInstance> out;
  const json& rows = table.at("rows");
  for (Int l = 3; l <= max_level; ++l)
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const json& row = rows[k];
      const table_expr::Bindings vars{{"l", l}};
      long long rank = 0;
      if (!table_expr::try_evaluate_int(row.at("rank").get<std::string>(), vars, rank) || rank < 1)
        continue;
      auto ws = weights_of(row, static_cast<std::size_t>(rank), vars);
      if (!ws) continue;
      for (const Weight& w : *ws) {
        auto c = canonicalize(family_of(row), rank, w);
        if (!c || c->type.rank > max_rank) continue;
        const Int h = root_system(c->type).coxeter_number();
        if (l <= h || !level_condition_holds(row.at("level").get<std::string>(), l, h)) continue;
        out.push_back({k, *c, l});
      }
    }
  return out;
}

struct G1Row {
  RootSystemType type;
  std::vector<Weight> weights;  // sorted, distinct
  Int i0 = 0;
  std::vector<std::string> labels;  // printed R entries that produce this row

  friend bool operator==(const G1Row& a, const G1Row& b) {
    return a.type == b.type && a.weights == b.weights && a.i0 == b.i0;
  }
};

// Rows of the G_1-cohomology table at the prime p, merged after canonicalization.
inline std::vector<G1Row> expected_g1(const json& table, Int p) {
  std::vector<G1Row> out;
  for (const json& row : table.at("rows")) {
    const table_expr::Bindings vars{{"p", p}};
    if (!level_condition_holds(row.at("condition").get<std::string>(), p, 0)) continue;
    long long rank = 0;
    if (!table_expr::try_evaluate_int(row.at("rank").get<std::string>(), vars, rank) || rank < 1)
      continue;
    auto ws = weights_of(row, static_cast<std::size_t>(rank), vars);
    if (!ws) continue;
    std::optional<RootSystemType> type;
    std::set<Weight> weights;
    for (const Weight& w : *ws) {
      auto c = canonicalize(family_of(row), rank, w);
      if (!c) break;
      type = c->type;
      weights.insert(c->weight);
    }
    if (!type || weights.size() == 0) continue;
    G1Row g{*type, {weights.begin(), weights.end()},
            table_expr::evaluate_int(row.at("i0").get<std::string>(), vars),
            {row.at("R").get<std::string>()}};
    auto same = std::find(out.begin(), out.end(), g);
    if (same != out.end()) {
      same->labels.push_back(g.labels.front());
    } else {
      out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), [](const G1Row& a, const G1Row& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.weights < b.weights;
  });
  return out;
}

}  // namespace golden
}  // namespace rootcomb
