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

#ifndef PIGAME_REPORT_HPP
#define PIGAME_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pigame/allocation.hpp"
#include "pigame/core_geometry.hpp"
#include "pigame/game.hpp"

namespace pigame {

/// Bumped whenever a report field is renamed or changes meaning.
inline constexpr const char* kReportSchemaVersion = "1.0";

using Json = nlohmann::ordered_json;

// Every number in a report is an exact rational string; coalitions carry
// both their mask and their one-based member list.
Json rational_json(const Rational& r);
Json allocation_json(const Allocation& x);
Json coalition_json(Coalition s);
Json pair_json(EssentialFanPair p);

struct ReportOptions {
  bool include_dual_prices = false;
  std::vector<Rational> lambdas{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  std::size_t walk_budget = kDefaultWalkBudget;
  std::size_t vertex_cap = kDefaultVertexCap;
  std::size_t predicate_cap = kDefaultPredicateCap;
};

/// Envelope shared by every command: schema version, command, instance summary.
Json report_header(const std::string& command, const GameTable& game,
                   const std::optional<std::string>& instance_name);

Json table_section(const GameTable& game, bool include_dual_prices);
Json owen_section(const GameTable& game);
Json omega_section(const GameTable& game);
Json qpq_section(const GameTable& game, const std::vector<Rational>& lambdas);
Json shapley_section(const GameTable& game);
Json nucleolus_section(const GameTable& game);
Json core_check_section(const GameTable& game, const Allocation& x);
Json structure_section(const GameTable& game);
/// Sets `truncated` in the returned section when the budget ran out.
Json extremes_section(const GameTable& game, std::size_t budget, bool& truncated);
/// Throws CapExceeded above the cap.
Json vertices_section(const GameTable& game, std::size_t cap);
Json predicates_section(const GameTable& game, std::size_t cap);
Json axioms_section(const GameTable& game, const Allocation& x, const std::string& label);

/// Everything at once. Sections whose caps are exceeded are reported as
/// refused instead of failing the whole report.
Json analyze_report(const GameTable& game, const std::optional<std::string>& instance_name,
                    const ReportOptions& options);

}  // namespace pigame

#endif  // PIGAME_REPORT_HPP
