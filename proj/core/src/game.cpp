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

#include "pigame/game.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "pigame/errors.hpp"
#include "pigame/lp.hpp"

namespace pigame {

Rational Allocation::sum(Coalition s) const {
  Rational total = 0;
  for (const auto i : s.members()) total += shares.at(i);
  return total;
}

Rational Allocation::total() const {
  Rational t = 0;
  for (const auto& v : shares) t += v;
  return t;
}

std::string to_string(const Allocation& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(x[i]);
  }
  return out + ")";
}

GameTable::GameTable(PIInstance instance, std::size_t player_cap) : instance_(std::move(instance)) {
  const std::size_t n = instance_.players();
  if (n > player_cap) {
    throw CapExceeded("game has " + std::to_string(n) + " players; the configured cap is " +
                      std::to_string(player_cap));
  }
  grand_prices_ = dual_prices(instance_, grand());
  if (n >= 2) {
    leave_one_out_.reserve(n);
    for (Player i = 0; i < n; ++i) leave_one_out_.push_back(dual_prices(instance_, grand().without(i)));
  }
  if (n <= kEagerLimit) {
    eager_.resize(std::size_t{1} << n);
    for (Coalition::Mask m = 1; m < eager_.size(); ++m) eager_[m] = compute(Coalition(m));
  } else {
    lazy_ = true;
    lazy_cache_ = std::make_unique<LazyCache>();
  }
}

Rational GameTable::compute(Coalition s) const {
  if (s.empty()) return 0;
  const DualPriceVector y = dual_prices(instance_, s);
  Rational total = 0;
  for (std::size_t t = 0; t < periods(); ++t) {
    const Demand d = coalition_demand(instance_, s, t);
    if (d != 0) total += y[t] * d;
  }
  return total;
}

Rational GameTable::value(Coalition s) const {
  if (!s.subset_of(grand())) {
    throw ValidationError("coalition " + to_string(s) + " names players outside the game");
  }
  if (!lazy_) return eager_[s.mask()];
  if (s.empty()) return 0;
  {
    std::lock_guard lock(lazy_cache_->mutex);
    if (auto it = lazy_cache_->values.find(s.mask()); it != lazy_cache_->values.end()) return it->second;
  }
  Rational v = compute(s);
  std::lock_guard lock(lazy_cache_->mutex);
  return lazy_cache_->values.emplace(s.mask(), std::move(v)).first->second;
}

Rational characteristic_value(const GameTable& game, Coalition s) { return game.value(s); }

Rational characteristic_value_lp_oracle(const PIInstance& inst, Coalition s) {
  const std::size_t periods = inst.periods();
  LPProblem lp(periods);
  for (std::size_t t = 0; t < periods; ++t) {
    const CoalitionParams params = coalition_params(inst, s, t);
    lp.objective[t] = -Rational(params.demand);

    RationalVector cap(periods);
    cap[t] = 1;
    lp.add_inequality(std::move(cap), params.production);
    if (t + 1 < periods) {
      RationalVector hold(periods), back(periods);
      hold[t + 1] = 1;
      hold[t] = -1;
      back[t] = 1;
      back[t + 1] = -1;
      lp.add_inequality(std::move(hold), *params.holding);
      lp.add_inequality(std::move(back), *params.backlog);
    }
  }
  const LPSolution sol = solve_lp(lp);
  if (sol.status != LPStatus::optimal) {
    throw std::logic_error(std::string("dual lot-sizing LP is ") + to_string(sol.status) + " for " +
                           to_string(s));
  }
  return -sol.value;
}

Allocation owen_point(const GameTable& game) {
  const auto& inst = game.instance();
  const auto& y = game.grand_prices();
  Allocation o(game.players());
  for (Player i = 0; i < game.players(); ++i) {
    for (std::size_t t = 0; t < game.periods(); ++t) {
      if (inst.demand(i, t) != 0) o[i] += y[t] * inst.demand(i, t);
    }
  }
  return o;
}

}  // namespace pigame
