// Copyright 2026 The pigame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef PIGAME_SYSTEM_CLI11
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "pigame/allocation.hpp"
#include "pigame/core_geometry.hpp"
#include "pigame/errors.hpp"
#include "pigame/game.hpp"
#include "pigame/instance_io.hpp"
#include "pigame/report.hpp"
#include "pigame/selftest.hpp"

namespace {

using pigame::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string instance_path;
  std::string builtin;
  std::string config_path;
  bool override_caps = false;
  std::optional<std::size_t> player_cap;
  std::optional<std::size_t> vertex_cap;
  std::optional<std::size_t> predicate_cap;
  std::optional<std::size_t> budget;
  bool dual_prices = false;
  std::string lambda;
  std::vector<std::string> lambdas;
  std::string allocation;
  std::string rule = "omega";
  bool json = false;
  bool verbose = false;
};

struct Limits {
  std::size_t player_cap = pigame::GameTable::kDefaultPlayerCap;
  std::size_t vertex_cap = pigame::kDefaultVertexCap;
  std::size_t predicate_cap = pigame::kDefaultPredicateCap;
  std::size_t walk_budget = pigame::kDefaultWalkBudget;
};

struct LoadedGame {
  pigame::GameTable game;
  std::optional<std::string> name;
};

std::optional<std::size_t> config_size(const nlohmann::json& config, const char* key) {
  if (!config.contains(key)) return std::nullopt;
  const auto& v = config.at(key);
  if (!v.is_number_unsigned()) {
    throw pigame::ValidationError(std::string("config field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Limits resolve_limits(const Options& opt) {
  Limits limits;
  bool acknowledged = opt.override_caps;
  Options merged = opt;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw pigame::ValidationError("cannot open config file '" + opt.config_path + "'");
    nlohmann::json config;
    try {
      config = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw pigame::ValidationError("config file '" + opt.config_path + "': " + e.what());
    }
    if (!config.is_object()) throw pigame::ValidationError("config file must hold a JSON object");
    for (const auto& [key, value] : config.items()) {
      if (key != "player_cap" && key != "vertex_cap" && key != "predicate_cap" && key != "walk_budget" &&
          key != "override_caps") {
        throw pigame::ValidationError("config file has unknown field '" + key + "'");
      }
    }
    if (config.contains("override_caps")) {
      if (!config["override_caps"].is_boolean()) {
        throw pigame::ValidationError("config field 'override_caps' must be a boolean");
      }
      acknowledged = acknowledged || config["override_caps"].get<bool>();
    }
    if (!merged.player_cap) merged.player_cap = config_size(config, "player_cap");
    if (!merged.vertex_cap) merged.vertex_cap = config_size(config, "vertex_cap");
    if (!merged.predicate_cap) merged.predicate_cap = config_size(config, "predicate_cap");
    if (!merged.budget) merged.budget = config_size(config, "walk_budget");
  }
  auto apply = [&](const std::optional<std::size_t>& requested, std::size_t& target, const char* what) {
    if (!requested) return;
    if (*requested > target && !acknowledged) {
      throw pigame::ValidationError(std::string("raising the ") + what + " above " + std::to_string(target) +
                                    " requires --override-caps");
    }
    target = *requested;
  };
  apply(merged.player_cap, limits.player_cap, "player cap");
  apply(merged.vertex_cap, limits.vertex_cap, "vertex-enumeration cap");
  apply(merged.predicate_cap, limits.predicate_cap, "predicate cap");
  apply(merged.budget, limits.walk_budget, "walk budget");
  if (limits.player_cap > pigame::kMaxPlayers) {
    throw pigame::ValidationError("player cap cannot exceed " + std::to_string(pigame::kMaxPlayers));
  }
  return limits;
}

LoadedGame load_game(const Options& opt, const Limits& limits) {
  if (opt.instance_path.empty() == opt.builtin.empty()) {
    throw pigame::ValidationError("exactly one of --instance or --builtin is required");
  }
  std::optional<std::string> name;
  std::optional<pigame::PIInstance> inst;
  if (!opt.builtin.empty()) {
    inst = pigame::builtin_instance(opt.builtin);
    name = opt.builtin;
  } else {
    pigame::InstanceFile file = pigame::load_instance_file(opt.instance_path);
    name = file.name ? file.name : std::optional<std::string>(opt.instance_path);
    inst = std::move(file.instance);
  }
  for (const auto& w : inst->warnings()) std::cerr << "warning: " << w << "\n";
  return {pigame::GameTable(std::move(*inst), limits.player_cap), name};
}

pigame::Allocation parse_allocation(const std::string& text, std::size_t players) {
  pigame::Allocation x(pigame::parse_rational_list(text));
  if (x.size() != players) {
    throw pigame::ValidationError("allocation has " + std::to_string(x.size()) + " entries but the game has " +
                                  std::to_string(players) + " players");
  }
  return x;
}

pigame::Allocation rule_allocation(const pigame::GameTable& game, const std::string& rule) {
  if (rule == "owen") return pigame::owen_point(game);
  if (rule == "omega") return pigame::omega_point(game).omega;
  if (rule == "solomonic") return pigame::solomonic(game);
  if (rule == "shapley") return pigame::shapley(game);
  if (rule == "nucleolus") return pigame::nucleolus(game);
  throw pigame::ValidationError("unknown rule '" + rule + "'");
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

int run_selftest(const Options& opt) {
  bool all = true;
  Json criteria = Json::array();
  pigame::run_acceptance_criteria([&](const pigame::CriterionResult& r) {
    all = all && r.passed();
    if (!opt.json) {
      pigame::print_criterion(r, std::cout, opt.verbose);
      return;
    }
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    criteria.push_back(Json{{"number", r.number}, {"title", r.title}, {"passed", r.passed()}, {"checks", checks}});
  });
  if (opt.json) {
    Json out;
    out["schema_version"] = pigame::kReportSchemaVersion;
    out["command"] = "selftest";
    out["passed"] = all;
    out["criteria"] = std::move(criteria);
    emit(out);
  } else {
    std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  }
  return all ? kExitOk : kExitFailure;
}

int run_command(const std::string& command, const Options& opt) {
  if (command == "selftest") return run_selftest(opt);
  const Limits limits = resolve_limits(opt);
  LoadedGame loaded = load_game(opt, limits);
  const pigame::GameTable& game = loaded.game;
  Json report = pigame::report_header(command, game, loaded.name);
  int code = kExitOk;
  if (command == "table") {
    report["table"] = pigame::table_section(game, opt.dual_prices);
  } else if (command == "owen") {
    report["owen"] = pigame::owen_section(game);
  } else if (command == "omega") {
    report["omega"] = pigame::omega_section(game);
  } else if (command == "qpq") {
    const pigame::Rational lambda = pigame::parse_rational(opt.lambda);
    if (lambda < 0 || lambda > 1) {
      throw pigame::ValidationError("lambda must lie in [0, 1]; got " + pigame::to_string(lambda));
    }
    report["qpq"] = pigame::qpq_section(game, {lambda});
  } else if (command == "shapley") {
    report["shapley"] = pigame::shapley_section(game);
  } else if (command == "nucleolus") {
    report["nucleolus"] = pigame::nucleolus_section(game);
  } else if (command == "core-check") {
    report["core_check"] = pigame::core_check_section(game, parse_allocation(opt.allocation, game.players()));
  } else if (command == "extremes") {
    bool truncated = false;
    report["extremes"] = pigame::extremes_section(game, limits.walk_budget, truncated);
    if (truncated) code = kExitCap;
  } else if (command == "vertices") {
    report["vertices"] = pigame::vertices_section(game, limits.vertex_cap);
  } else if (command == "predicates") {
    report["predicates"] = pigame::predicates_section(game, limits.predicate_cap);
  } else if (command == "axioms") {
    if (!opt.allocation.empty()) {
      report["axioms"] = pigame::axioms_section(game, parse_allocation(opt.allocation, game.players()), "custom");
    } else {
      report["axioms"] = pigame::axioms_section(game, rule_allocation(game, opt.rule), opt.rule);
    }
  } else if (command == "analyze") {
    pigame::ReportOptions options;
    options.include_dual_prices = opt.dual_prices;
    if (!opt.lambdas.empty()) {
      options.lambdas.clear();
      for (const auto& text : opt.lambdas) {
        const pigame::Rational lambda = pigame::parse_rational(text);
        if (lambda < 0 || lambda > 1) {
          throw pigame::ValidationError("lambda must lie in [0, 1]; got " + pigame::to_string(lambda));
        }
        options.lambdas.push_back(lambda);
      }
    }
    options.walk_budget = limits.walk_budget;
    options.vertex_cap = limits.vertex_cap;
    options.predicate_cap = limits.predicate_cap;
    report = pigame::analyze_report(game, loaded.name, options);
    if (report["extremes"]["truncated"].get<bool>()) code = kExitCap;
  }
  emit(report);
  return code;
}

void add_input_options(CLI::App* sub, Options& opt) {
  auto* instance = sub->add_option("--instance", opt.instance_path, "Instance JSON file");
  auto* builtin = sub->add_option("--builtin", opt.builtin, "Bundled instance: example1, example3, example4, expfamily:n");
  instance->excludes(builtin);
  sub->add_option("--config", opt.config_path, "JSON file with cap settings");
  sub->add_flag("--override-caps", opt.override_caps, "Acknowledge raising a default cap");
  sub->add_option("--player-cap", opt.player_cap, "Maximum number of players for the game table");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of production-inventory cost games", "pigame"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"table", "Characteristic cost of every coalition"},
      {"owen", "Owen point from grand-coalition dual prices"},
      {"omega", "Omega point and its per-period decomposition"},
      {"qpq", "Point on the segment from the Owen point to the Omega point"},
      {"shapley", "Shapley value"},
      {"nucleolus", "Nucleolus by successive linear programs"},
      {"core-check", "Exact core membership of an allocation"},
      {"extremes", "Points generated from the Owen point by extreme functions"},
      {"vertices", "Brute-force enumeration of core vertices"},
      {"predicates", "Concavity, PS-game and Solomonic condition checks"},
      {"axioms", "Axiom checks for an allocation"},
      {"analyze", "Full analysis report"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_input_options(sub, opt);
    const std::string name = c.name;
    if (name == "table" || name == "analyze") {
      sub->add_flag("--dual-prices", opt.dual_prices, "Include dual prices for every coalition");
    }
    if (name == "qpq") sub->add_option("--lambda", opt.lambda, "Weight in [0, 1] as p/q")->required();
    if (name == "analyze") sub->add_option("--lambdas", opt.lambdas, "Weights for the QPQ samples")->delimiter(',');
    if (name == "core-check") {
      sub->add_option("--allocation", opt.allocation, "Comma-separated rationals")->required();
    }
    if (name == "axioms") {
      auto* alloc = sub->add_option("--allocation", opt.allocation, "Comma-separated rationals");
      sub->add_option("--rule", opt.rule, "owen, omega, solomonic, shapley or nucleolus")->excludes(alloc);
    }
    if (name == "extremes" || name == "analyze") {
      sub->add_option("--budget", opt.budget, "Maximum extreme-function evaluations");
    }
    if (name == "vertices" || name == "analyze") {
      sub->add_option("--vertex-cap", opt.vertex_cap, "Maximum players for vertex enumeration");
    }
    if (name == "predicates" || name == "analyze") {
      sub->add_option("--predicate-cap", opt.predicate_cap, "Maximum players for predicate checks");
    }
  }
  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest->add_flag("--json", opt.json, "Emit a JSON report");
  selftest->add_flag("-v,--verbose", opt.verbose, "List passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run_command(command, opt);
  } catch (const pigame::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const pigame::CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}
