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

#ifndef PIGAME_INSTANCE_HPP
#define PIGAME_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pigame/coalition.hpp"
#include "pigame/rational.hpp"

namespace pigame {

using Demand = std::int64_t;
using DemandMatrix = std::vector<std::vector<Demand>>;

/// A production-inventory situation: n players facing demand over T periods,
/// each with unit production, holding and backlog costs. Matrices are
/// row-per-player; periods are zero-based.
///
/// Holding and backlog rows carry T-1 entries (only transitions between
/// consecutive periods are priced). Rows of length T are accepted and their
/// last entry is dropped; a warning is recorded.
class PIInstance {
 public:
  PIInstance(DemandMatrix demand, RationalMatrix production, RationalMatrix holding,
             RationalMatrix backlog);

  std::size_t players() const { return demand_.size(); }
  std::size_t periods() const { return periods_; }

  Demand demand(Player i, std::size_t t) const { return demand_[i][t]; }
  const Rational& production(Player i, std::size_t t) const { return production_[i][t]; }
  const Rational& holding(Player i, std::size_t t) const { return holding_[i][t]; }
  const Rational& backlog(Player i, std::size_t t) const { return backlog_[i][t]; }

  const DemandMatrix& demand_matrix() const { return demand_; }
  const RationalMatrix& production_matrix() const { return production_; }
  const RationalMatrix& holding_matrix() const { return holding_; }
  const RationalMatrix& backlog_matrix() const { return backlog_; }

  const std::vector<std::string>& warnings() const { return warnings_; }

  friend bool operator==(const PIInstance& a, const PIInstance& b) {
    return a.demand_ == b.demand_ && a.production_ == b.production_ &&
           a.holding_ == b.holding_ && a.backlog_ == b.backlog_;
  }

 private:
  std::size_t periods_ = 0;
  DemandMatrix demand_;
  RationalMatrix production_;
  RationalMatrix holding_;
  RationalMatrix backlog_;
  std::vector<std::string> warnings_;
};

/// Pooled parameters of a coalition in one period: cheapest member costs and
/// total member demand. holding/backlog are absent in the last period.
struct CoalitionParams {
  Rational production;
  std::optional<Rational> holding;
  std::optional<Rational> backlog;
  Demand demand = 0;
};

CoalitionParams coalition_params(const PIInstance& inst, Coalition s, std::size_t t);

/// Total demand of s in period t.
Demand coalition_demand(const PIInstance& inst, Coalition s, std::size_t t);

/// Optimal dual prices y*(S) of the coalition's lot-sizing problem.
struct DualPriceVector {
  RationalVector prices;

  const Rational& operator[](std::size_t t) const { return prices[t]; }
  std::size_t size() const { return prices.size(); }
  friend bool operator==(const DualPriceVector&, const DualPriceVector&) = default;
};

/// Closed-form optimal duals: for each period t, the cheapest of producing in
/// t, producing in an earlier period k and carrying stock forward (holding
/// chain h_k + ... + h_{t-1}), or producing in a later period k and
/// backlogging (backlog chain b_t + ... + b_{k-1}). O(T) per coalition.
DualPriceVector dual_prices(const PIInstance& inst, Coalition s);

/// Same situation with demand restricted to period t (zero elsewhere).
PIInstance per_period_instance(const PIInstance& inst, std::size_t t);

}  // namespace pigame

#endif  // PIGAME_INSTANCE_HPP
