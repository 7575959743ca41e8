#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

int emit_error(bool as_json, int code, const std::string& kind, const std::string& message) {
  if (as_json) {
    std::cerr << nlohmann::json{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}}.dump() << "\n";
  } else {
    std::string one_line = message;
    for (char& c : one_line)
      if (c == '\n') c = ' ';
    std::cerr << "error: " << kind << ": " << one_line << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rootcomb::cli;

  CLI::App app{"rootcomb: root systems, Weyl groups, Weyl degrees and alcoves"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the JSON envelope instead of text");

  std::string system, coords;
  bool trace = false, extended = false, oracle = false;
  long long level = 0, p = 0;
  TablesOptions topts;

  auto* info = app.add_subcommand("info", "Cartan data, Coxeter number, J, minuscule weights");
  info->add_option("system", system, "Root system, e.g. A3, E6")->required();

  auto* dim = app.add_subcommand("dim", "Weyl degree d(lambda) of a dominant weight");
  dim->add_option("system", system)->required();
  dim->add_option("weight", coords, "Comma-separated fundamental-weight coordinates")->required();
  dim->add_flag("--trace", trace, "Print the factor of each positive root");

  auto* reduce = app.add_subcommand("reduce", "Reduce a weight to the closed lowest alcove under W_l");
  reduce->add_option("system", system)->required();
  reduce->add_option("weight", coords)->required();
  reduce->add_option("--level", level, "Level l > h")->required();
  reduce->add_flag("--extended", extended, "Also test membership in the extended orbit of 0");
  reduce->add_flag("--oracle", oracle, "Cross-check orbit verdicts by breadth-first search");

  auto* tables = app.add_subcommand("tables", "Regenerate a classification table and diff it");
  tables->add_option("--which", topts.which, "minuscule | small | g1 | omega")
      ->required()
      ->check(CLI::IsMember({"minuscule", "small", "g1", "omega"}));
  tables->add_option("--max-rank", topts.max_rank, "Largest rank searched (default 8)");
  tables->add_option("--max-level", topts.max_level, "Largest level searched (default 30)");
  tables->add_option("--p", topts.p, "Prime for the g1 table (default 5)");
  tables->add_option("--system", topts.system, "Restrict the omega table to one root system");
  tables->add_option("--level", topts.level, "Level for the omega table (default h+1)");
  tables->add_flag("--oracle", topts.oracle, "Verify the omega table by breadth-first search (rank <= 3)");

  auto* stein = app.add_subcommand("steinberg", "Base-p Steinberg digits of a dominant weight");
  stein->add_option("system", system)->required();
  stein->add_option("weight", coords)->required();
  stein->add_option("--p", p, "Prime p")->required();

  auto* primes = app.add_subcommand("primes", "Classify p as bad, good or very good");
  primes->add_option("system", system)->required();
  primes->add_option("--p", p, "Prime p")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(as_json, kUsage, "usage", e.what());
  }

  try {
    CommandResult res;
    if (*info) res = cmd_info(system);
    else if (*dim) res = cmd_dim(system, coords, trace);
    else if (*reduce) res = cmd_reduce(system, coords, level, extended, oracle);
    else if (*tables) res = cmd_tables(topts);
    else if (*stein) res = cmd_steinberg(system, coords, p);
    else if (*primes) res = cmd_primes(system, p);
    if (as_json) std::cout << res.envelope.dump(2) << "\n";
    else std::cout << res.text;
    return res.exit_code;
  } catch (const CliError& e) {
    return emit_error(as_json, e.code, e.kind, e.what());
  } catch (const rootcomb::DomainError& e) {
    return emit_error(as_json, kDomain, "domain", e.what());
  } catch (const rootcomb::Error& e) {
    return emit_error(as_json, kUsage, "usage", e.what());
  }
}
