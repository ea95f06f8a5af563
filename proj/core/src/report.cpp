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

#include "pigame/report.hpp"

#include <utility>

#include "pigame/errors.hpp"

namespace pigame {

Json rational_json(const Rational& r) { return to_string(r); }

Json allocation_json(const Allocation& x) {
  Json out = Json::array();
  for (const auto& v : x.shares) out.push_back(rational_json(v));
  return out;
}

Json coalition_json(Coalition s) {
  Json members = Json::array();
  for (const auto i : s.members()) members.push_back(i + 1);
  return Json{{"mask", s.mask()}, {"members", std::move(members)}};
}

Json pair_json(EssentialFanPair p) {
  return Json{{"essential", p.essential + 1}, {"fan", p.fan + 1}};
}

namespace {

Json vertex_set_json(const VertexSet& points) {
  Json out = Json::array();
  for (const auto& x : points) out.push_back(allocation_json(x));
  return out;
}

Json bools(const std::vector<bool>& v) {
  Json out = Json::array();
  for (const bool b : v) out.push_back(b);
  return out;
}

Json matrix_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(allocation_json(Allocation(row)));
  return out;
}

}  // namespace

Json report_header(const std::string& command, const GameTable& game,
                   const std::optional<std::string>& instance_name) {
  Json out;
  out["schema_version"] = kReportSchemaVersion;
  out["command"] = command;
  Json inst;
  if (instance_name) inst["name"] = *instance_name;
  inst["players"] = game.players();
  inst["periods"] = game.periods();
  out["instance"] = std::move(inst);
  return out;
}

Json table_section(const GameTable& game, bool include_dual_prices) {
  Json rows = Json::array();
  for (Coalition::Mask m = 1; m <= game.grand().mask(); ++m) {
    const Coalition s(m);
    Json row = coalition_json(s);
    row["cost"] = rational_json(game.value(s));
    if (include_dual_prices) {
      row["dual_prices"] = allocation_json(Allocation(dual_prices(game.instance(), s).prices));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json owen_section(const GameTable& game) {
  return Json{{"shares", allocation_json(owen_point(game))},
              {"grand_prices", allocation_json(Allocation(game.grand_prices().prices))}};
}

Json omega_section(const GameTable& game) {
  const OmegaDecomposition d = omega_point(game);
  Json out;
  out["shares"] = allocation_json(d.omega);
  out["transfers"] = allocation_json(Allocation(d.transfers));
  out["period_transfers"] = matrix_json(d.period_transfers);
  out["period_shares"] = matrix_json(d.per_period);
  return out;
}

Json qpq_section(const GameTable& game, const std::vector<Rational>& lambdas) {
  const Allocation o = owen_point(game);
  const Allocation w = omega_point(game).omega;
  Json out = Json::array();
  for (const auto& lambda : lambdas) {
    out.push_back(Json{{"lambda", rational_json(lambda)}, {"shares", allocation_json(qpq(o, w, lambda))}});
  }
  return out;
}

Json shapley_section(const GameTable& game) { return Json{{"shares", allocation_json(shapley(game))}}; }

Json nucleolus_section(const GameTable& game) {
  return Json{{"shares", allocation_json(nucleolus(game))}};
}

Json core_check_section(const GameTable& game, const Allocation& x) {
  const CoreCheck check = is_core_member(game, x);
  Json out;
  out["allocation"] = allocation_json(x);
  out["member"] = check.member;
  out["witness"] = check.violation ? coalition_json(*check.violation) : Json(nullptr);
  return out;
}

Json structure_section(const GameTable& game) {
  const EssentialPlayers e = essential_players(game);
  Json out;
  out["essential"] = coalition_json(e.all);
  Json per_period = Json::array();
  for (const auto s : e.per_period) per_period.push_back(coalition_json(s));
  out["essential_per_period"] = std::move(per_period);
  Json fans = Json::array();
  for (const auto i : e.all.members()) {
    const FanSet f = fan_set(game, i);
    Json entry{{"player", i + 1}, {"fans", coalition_json(f.all)}};
    Json fp = Json::array();
    for (const auto s : f.per_period) fp.push_back(coalition_json(s));
    entry["fans_per_period"] = std::move(fp);
    fans.push_back(std::move(entry));
  }
  out["fan_sets"] = std::move(fans);
  const Allocation o = owen_point(game);
  Json pairs = Json::array();
  for (const auto& p : pair_set(game)) {
    const TransferResult t = transferred_cost(game, p, o);
    Json entry = pair_json(p);
    entry["alpha_at_owen"] = rational_json(t.alpha);
    entry["witness"] = coalition_json(t.witness);
    entry["image_of_owen"] = allocation_json(extreme_function(game, p, o));
    pairs.push_back(std::move(entry));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

Json extremes_section(const GameTable& game, std::size_t budget, bool& truncated) {
  const WalkEnumeration walk = generate_extremes_from_owen(game, budget);
  truncated = walk.truncated;
  const bool single = essential_players(game).all.size() == 1;
  Json out;
  // Extremality of walk images is only established with a single essential player.
  out["classification"] = single ? "extreme points" : "core boundary points";
  out["count"] = walk.points.size();
  out["points"] = vertex_set_json(walk.points);
  out["truncated"] = walk.truncated;
  out["steps"] = walk.steps;
  out["budget"] = budget;
  return out;
}

Json vertices_section(const GameTable& game, std::size_t cap) {
  const VertexSet v = enumerate_core_vertices(game, cap);
  return Json{{"count", v.size()}, {"points", vertex_set_json(v)}};
}

Json predicates_section(const GameTable& game, std::size_t cap) {
  Json out;
  const ConcavityResult concave = is_concave(game, cap);
  Json c{{"concave", concave.concave}};
  if (concave.counterexample) {
    const auto& ce = *concave.counterexample;
    c["counterexample"] = Json{{"player", ce.player + 1},
                               {"smaller", coalition_json(ce.smaller)},
                               {"larger", coalition_json(ce.larger)}};
  }
  out["concavity"] = std::move(c);

  const PSWitness ps = is_ps_game(game, cap);
  Json p{{"is_ps", ps.is_ps}};
  if (ps.is_ps) {
    p["constants"] = allocation_json(Allocation(ps.constants));
  } else if (ps.counterexample) {
    p["counterexample"] = Json{{"player", ps.counterexample->first + 1},
                               {"coalition", coalition_json(ps.counterexample->second)}};
  }
  out["ps_game"] = std::move(p);

  const SolomonicConditions cond = check_solomonic_conditions(game);
  out["solomonic_conditions"] = Json{{"single_essential", bools(cond.single_essential)},
                                     {"essential_price", bools(cond.essential_price)},
                                     {"outsider_price", bools(cond.outsider_price)},
                                     {"holds", cond.holds}};

  const CoincidenceReport r = coincidence_report(game, cap);
  out["coincidence"] = Json{{"solomonic", allocation_json(r.solomonic)},
                            {"shapley", allocation_json(r.shapley)},
                            {"nucleolus", allocation_json(r.nucleolus)},
                            {"solomonic_equals_shapley", r.solomonic_equals_shapley},
                            {"shapley_equals_nucleolus", r.shapley_equals_nucleolus},
                            {"solomonic_equals_nucleolus", r.solomonic_equals_nucleolus},
                            {"all_coincide", r.all_coincide},
                            {"conditions_consistent", r.conditions_consistent}};
  return out;
}

Json axioms_section(const GameTable& game, const Allocation& x, const std::string& label) {
  const AxiomReport a = check_axioms(game, x);
  Json out;
  out["allocation"] = label;
  out["shares"] = allocation_json(x);
  out["efficiency"] = a.efficiency;
  out["nonemptiness"] = a.nonemptiness;
  Json bounds = Json::array();
  for (const auto& b : a.ibc_bounds) bounds.push_back(b ? rational_json(*b) : Json(nullptr));
  out["inessential_bounded_cost"] = Json{{"holds", a.inessential_bounded_cost}, {"bounds", std::move(bounds)}};
  out["tyranny"] = to_string(a.tyranny);
  Json comps = Json::array();
  for (const auto& z : a.period_components) comps.push_back(allocation_json(z));
  out["additivity"] = Json{{"rule", "omega"},
                           {"note", "evaluated for the Omega rule; additivity is a property of rules, "
                                    "not of a single allocation"},
                           {"rule_additive", a.omega_additive},
                           {"period_components", std::move(comps)},
                           {"allocation_matches_decomposition", a.allocation_matches_omega_decomposition}};
  return out;
}

Json analyze_report(const GameTable& game, const std::optional<std::string>& instance_name,
                    const ReportOptions& options) {
  Json out = report_header("analyze", game, instance_name);
  out["table"] = table_section(game, options.include_dual_prices);
  out["owen"] = owen_section(game);
  out["omega"] = omega_section(game);
  out["qpq"] = qpq_section(game, options.lambdas);
  out["shapley"] = shapley_section(game);
  out["nucleolus"] = nucleolus_section(game);
  out["structure"] = structure_section(game);
  bool truncated = false;
  out["extremes"] = extremes_section(game, options.walk_budget, truncated);
  try {
    out["vertices"] = vertices_section(game, options.vertex_cap);
  } catch (const CapExceeded& e) {
    out["vertices"] = Json{{"status", "refused"}, {"reason", e.what()}};
  }
  try {
    out["predicates"] = predicates_section(game, options.predicate_cap);
  } catch (const CapExceeded& e) {
    out["predicates"] = Json{{"status", "refused"}, {"reason", e.what()}};
  }
  out["axioms"] = axioms_section(game, omega_point(game).omega, "omega");
  return out;
}

}  // namespace pigame
