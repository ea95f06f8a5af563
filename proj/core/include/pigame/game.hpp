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

#ifndef PIGAME_GAME_HPP
#define PIGAME_GAME_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pigame/coalition.hpp"
#include "pigame/instance.hpp"
#include "pigame/rational.hpp"

namespace pigame {

/// A cost-share vector, one entry per player.
struct Allocation {
  RationalVector shares;

  Allocation() = default;
  explicit Allocation(std::size_t n) : shares(n) {}
  explicit Allocation(RationalVector values) : shares(std::move(values)) {}
  Allocation(std::initializer_list<Rational> values) : shares(values) {}

  std::size_t size() const { return shares.size(); }
  Rational& operator[](Player i) { return shares[i]; }
  const Rational& operator[](Player i) const { return shares[i]; }

  /// x_S, the total charged to the members of s.
  Rational sum(Coalition s) const;
  Rational total() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend bool operator<(const Allocation& a, const Allocation& b) { return a.shares < b.shares; }
};

std::string to_string(const Allocation& x);

/// Characteristic function of the cost game induced by a PIInstance:
/// c(S) = sum_t d_t^S * y*_t(S), with c(empty) = 0.
///
/// Up to kEagerLimit players every coalition is evaluated at construction.
/// Larger games are filled lazily under a mutex, so concurrent readers always
/// observe the same pure function. Construction refuses games with more than
/// `player_cap` players.
class GameTable {
 public:
  static constexpr std::size_t kEagerLimit = 16;
  static constexpr std::size_t kDefaultPlayerCap = 20;

  explicit GameTable(PIInstance instance, std::size_t player_cap = kDefaultPlayerCap);

  GameTable(const GameTable&) = delete;
  GameTable& operator=(const GameTable&) = delete;
  GameTable(GameTable&&) = default;
  GameTable& operator=(GameTable&&) = default;

  const PIInstance& instance() const { return instance_; }
  std::size_t players() const { return instance_.players(); }
  std::size_t periods() const { return instance_.periods(); }
  Coalition grand() const { return Coalition::grand(players()); }
  bool is_eager() const { return !lazy_; }

  /// c(S). Returned by value so lazily filled entries stay safe to share.
  Rational value(Coalition s) const;

  /// y*(N), computed once.
  const DualPriceVector& grand_prices() const { return grand_prices_; }
  /// y*(N \ {i}); only defined for n >= 2.
  const DualPriceVector& prices_without(Player i) const { return leave_one_out_.at(i); }

 private:
  Rational compute(Coalition s) const;

  PIInstance instance_;
  DualPriceVector grand_prices_;
  std::vector<DualPriceVector> leave_one_out_;
  std::vector<Rational> eager_;
  bool lazy_ = false;
  struct LazyCache {
    std::mutex mutex;
    std::unordered_map<Coalition::Mask, Rational> values;
  };
  std::unique_ptr<LazyCache> lazy_cache_;
};

/// c(S) through the closed form (memoized in the table).
Rational characteristic_value(const GameTable& game, Coalition s);

/// c(S) as the optimum of the dual lot-sizing LP
///   max sum_t d_t^S y_t  s.t.  y_t <= p_t^S,  y_{t+1} - y_t <= h_t^S,  y_t - y_{t+1} <= b_t^S
/// solved with the exact simplex. Independent of the closed form.
Rational characteristic_value_lp_oracle(const PIInstance& inst, Coalition s);

/// o_i = sum_t d_t^i y*_t(N).
Allocation owen_point(const GameTable& game);

}  // namespace pigame

#endif  // PIGAME_GAME_HPP
