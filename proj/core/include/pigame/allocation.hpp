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

#ifndef PIGAME_ALLOCATION_HPP
#define PIGAME_ALLOCATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pigame/coalition.hpp"
#include "pigame/core_geometry.hpp"
#include "pigame/game.hpp"

namespace pigame {

/// q_t(i, j) = (y*_t(N \ {i}) - y*_t(N)) * d_t^j for i != j, and 0 on the
/// diagonal. Zero-based period and players.
Rational cost_reduction_q(const GameTable& game, std::size_t t, Player i, Player j);

struct OmegaDecomposition {
  Allocation omega;
  RationalMatrix per_period;            // [t][i] = omega_i^t
  std::vector<RationalMatrix> q;        // [t][i][j] = q_t(i, j)
  RationalMatrix period_transfers;      // [t][i] = Q_i^t
  RationalVector transfers;             // Q_i = sum_t Q_i^t
};

/// In every period with exactly one essential player k, k is rebated the
/// price gap y*_t(N \ {k}) - y*_t(N) on each fan's demand and the fans pay
/// it; every other period charges Owen shares.
OmegaDecomposition omega_point(const GameTable& game);

/// a(lambda) = lambda * omega + (1 - lambda) * owen, lambda in [0, 1].
Allocation qpq(const GameTable& game, const Rational& lambda);
Allocation qpq(const Allocation& owen, const Allocation& omega, const Rational& lambda);

/// a(1/2).
Allocation solomonic(const GameTable& game);

/// Shapley value by the exact subset formula with weights s!(n-s-1)!/n!.
Allocation shapley(const GameTable& game);

/// Nucleolus of the cost game (excess e(S, x) = x_S - c(S)), computed by
/// successive linear programs. A constraint is frozen only when an auxiliary
/// LP proves its slack is zero in every optimum of the current stage.
/// Requires a nonempty core, which every game built from a PIInstance has.
Allocation nucleolus(const GameTable& game);

inline constexpr std::size_t kDefaultPredicateCap = 12;

struct ConcavityCounterexample {
  Player player = 0;
  Coalition smaller;
  Coalition larger;
};

struct ConcavityResult {
  bool concave = true;
  std::optional<ConcavityCounterexample> counterexample;
};

/// c(S) - c(S \ {i}) >= c(T) - c(T \ {i}) for every i in S, S subset of T.
/// Scans i ascending, then S by mask, then supersets T by mask.
/// Throws CapExceeded for n > cap.
ConcavityResult is_concave(const GameTable& game, std::size_t cap = kDefaultPredicateCap);

struct PSWitness {
  bool is_ps = true;
  RationalVector constants;  // c_i, filled when is_ps
  std::optional<std::pair<Player, Coalition>> counterexample;
};

/// Checks that Delta_i(S) + Delta_i(N \ (S + i)) is the same for every
/// S subset of N \ {i}, for every player i.
PSWitness is_ps_game(const GameTable& game, std::size_t cap = kDefaultPredicateCap);

/// Per-period conditions under which the Solomonic allocation, the Shapley
/// value and the nucleolus coincide:
///   (i)   |E^t| <= 1
///   (ii)  y*_t(E^t) == y*_t(N) when E^t is nonempty
///   (iii) y*_t(N \ E^t) == y*_t({i}) for every i outside E^t
struct SolomonicConditions {
  std::vector<bool> single_essential;
  std::vector<bool> essential_price;
  std::vector<bool> outsider_price;
  bool holds = true;
};

SolomonicConditions check_solomonic_conditions(const GameTable& game);

enum class Applicability { holds, fails, not_applicable };

const char* to_string(Applicability a);

struct AxiomReport {
  bool efficiency = false;
  bool nonemptiness = true;
  bool inessential_bounded_cost = false;
  /// Upper bound sum_t y*_t(N \ E^t) d_t^i for inessential players; empty
  /// optional for essential players.
  std::vector<std::optional<Rational>> ibc_bounds;
  Applicability tyranny = Applicability::not_applicable;
  /// Additivity is a property of the Omega rule: the rule evaluated on each
  /// single-period situation (Owen shares when a period has two or more
  /// essentials) must sum to the rule on the whole situation.
  bool omega_additive = false;
  std::vector<Allocation> period_components;
  /// Whether x itself equals that per-period sum.
  bool allocation_matches_omega_decomposition = false;
};

AxiomReport check_axioms(const GameTable& game, const Allocation& x);

struct CoincidenceReport {
  Allocation solomonic;
  Allocation shapley;
  Allocation nucleolus;
  bool solomonic_equals_shapley = false;
  bool shapley_equals_nucleolus = false;
  bool solomonic_equals_nucleolus = false;
  bool all_coincide = false;
  SolomonicConditions conditions;
  ConcavityResult concavity;
  PSWitness ps;
  /// False only when the conditions hold but the three allocations differ.
  bool conditions_consistent = true;
};

CoincidenceReport coincidence_report(const GameTable& game, std::size_t cap = kDefaultPredicateCap);

}  // namespace pigame

#endif  // PIGAME_ALLOCATION_HPP
