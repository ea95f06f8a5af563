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

#ifndef PIGAME_CORE_GEOMETRY_HPP
#define PIGAME_CORE_GEOMETRY_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pigame/coalition.hpp"
#include "pigame/game.hpp"

namespace pigame {

struct CoreCheck {
  bool member = false;
  /// First coalition in increasing mask order whose constraint fails. The
  /// grand coalition is reported only when efficiency is the sole failure.
  std::optional<Coalition> violation;
};

/// Exact exponential scan of all 2^n - 1 core constraints.
/// Throws ValidationError on a length mismatch.
CoreCheck is_core_member(const GameTable& game, const Allocation& x);

/// Players whose removal raises some period's price while the rest of the
/// grand coalition still has demand there. per_period[t] holds E^t.
/// A single player is never essential.
struct EssentialPlayers {
  Coalition all;
  std::vector<Coalition> per_period;
};

EssentialPlayers essential_players(const GameTable& game);

/// Fans of an essential player i: players j != i with demand in some period
/// whose price rises when i leaves. per_period[t] lists the fans in period t.
struct FanSet {
  Coalition all;
  std::vector<Coalition> per_period;
};

/// Throws ValidationError when i is not essential.
FanSet fan_set(const GameTable& game, Player i);

struct EssentialFanPair {
  Player essential = 0;
  Player fan = 0;

  friend auto operator<=>(const EssentialFanPair&, const EssentialFanPair&) = default;
};

/// All (essential, fan) pairs, essential ascending then fan ascending.
std::vector<EssentialFanPair> pair_set(const GameTable& game);

struct TransferResult {
  Rational alpha;
  Coalition witness;
};

/// alpha_p(x) = min { c(R) - x_R : R excludes p.essential, contains p.fan }.
/// The witness is the minimizer of smallest size, then smallest mask.
TransferResult transferred_cost(const GameTable& game, EssentialFanPair p, const Allocation& x);

/// Moves alpha_p(x) from the essential player onto the fan.
Allocation extreme_function(const GameTable& game, EssentialFanPair p, const Allocation& x);

/// Applies extreme_function for sigma[0], sigma[1], ... in order.
/// sigma must have exactly |pair_set| entries (ValidationError otherwise).
Allocation composite_walk(const GameTable& game, std::span<const EssentialFanPair> sigma,
                          const Allocation& x);

/// Deduplicated set of allocations, ordered lexicographically.
using VertexSet = std::set<Allocation>;

struct WalkEnumeration {
  VertexSet points;
  bool truncated = false;
  std::size_t steps = 0;  // extreme-function evaluations performed
};

inline constexpr std::size_t kDefaultWalkBudget = 1'000'000;

/// {o} together with F_sigma(o) for every sigma of length |P|. Sequences are
/// explored depth-first; a step with zero transfer leaves the point unchanged
/// and is not expanded, and a point already expanded with at least as many
/// remaining steps is skipped. Stops with truncated = true once `budget`
/// extreme-function evaluations have been spent.
WalkEnumeration generate_extremes_from_owen(const GameTable& game,
                                            std::size_t budget = kDefaultWalkBudget);

inline constexpr std::size_t kDefaultVertexCap = 6;

/// Brute-force vertex oracle: every choice of n-1 coalition constraints plus
/// efficiency that is linearly independent is solved exactly, and feasible
/// solutions are kept. Throws CapExceeded for n > cap.
VertexSet enumerate_core_vertices(const GameTable& game, std::size_t cap = kDefaultVertexCap);

/// True iff some nonempty proper coalition constraint is tight at x.
/// Throws ValidationError when x is not a core member.
bool is_boundary_point(const GameTable& game, const Allocation& x);

}  // namespace pigame

#endif  // PIGAME_CORE_GEOMETRY_HPP
