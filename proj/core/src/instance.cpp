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

#include "pigame/instance.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pigame/errors.hpp"

namespace pigame {

std::string to_string(Coalition s) {
  std::string out = "{";
  bool first = true;
  for (const auto i : s.members()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

namespace {

void check_cost_matrix(RationalMatrix& m, const char* name, std::size_t players,
                       std::size_t width, std::size_t alt_width,
                       std::vector<std::string>& warnings) {
  if (m.size() != players) {
    throw ValidationError(std::string(name) + ": expected " + std::to_string(players) +
                          " rows, got " + std::to_string(m.size()));
  }
  bool trimmed = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto& row = m[i];
    if (row.size() == alt_width && alt_width != width) {
      row.pop_back();
      trimmed = true;
    } else if (row.size() != width) {
      throw ValidationError(std::string(name) + "[" + std::to_string(i) + "]: expected " +
                            std::to_string(width) + " entries, got " + std::to_string(row.size()));
    }
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (row[t] < 0) {
        throw ValidationError(std::string(name) + "[" + std::to_string(i) + "][" +
                              std::to_string(t) + "]: cost must be non-negative");
      }
    }
  }
  if (trimmed) {
    warnings.push_back(std::string(name) + ": last-period entries are not used and were ignored");
  }
}

}  // namespace

PIInstance::PIInstance(DemandMatrix demand, RationalMatrix production, RationalMatrix holding,
                       RationalMatrix backlog)
    : demand_(std::move(demand)),
      production_(std::move(production)),
      holding_(std::move(holding)),
      backlog_(std::move(backlog)) {
  if (demand_.empty()) throw ValidationError("demand: at least one player is required");
  if (demand_.size() > kMaxPlayers) {
    throw ValidationError("demand: at most " + std::to_string(kMaxPlayers) + " players are supported");
  }
  periods_ = demand_.front().size();
  if (periods_ == 0) throw ValidationError("demand: at least one period is required");
  for (std::size_t i = 0; i < demand_.size(); ++i) {
    if (demand_[i].size() != periods_) {
      throw ValidationError("demand[" + std::to_string(i) + "]: expected " + std::to_string(periods_) +
                            " entries, got " + std::to_string(demand_[i].size()));
    }
    for (std::size_t t = 0; t < periods_; ++t) {
      if (demand_[i][t] < 0) {
        throw ValidationError("demand[" + std::to_string(i) + "][" + std::to_string(t) +
                              "]: demand must be non-negative");
      }
    }
  }
  const std::size_t n = demand_.size();
  check_cost_matrix(production_, "production", n, periods_, periods_, warnings_);
  check_cost_matrix(holding_, "holding", n, periods_ - 1, periods_, warnings_);
  check_cost_matrix(backlog_, "backlog", n, periods_ - 1, periods_, warnings_);
}

Demand coalition_demand(const PIInstance& inst, Coalition s, std::size_t t) {
  Demand total = 0;
  for (const auto i : s.members()) total += inst.demand(i, t);
  return total;
}

namespace {

void check_coalition(const PIInstance& inst, Coalition s) {
  if (s.empty()) throw ValidationError("coalition must be nonempty");
  if (!s.subset_of(Coalition::grand(inst.players()))) {
    throw ValidationError("coalition " + to_string(s) + " names players outside the instance");
  }
}

}  // namespace

CoalitionParams coalition_params(const PIInstance& inst, Coalition s, std::size_t t) {
  check_coalition(inst, s);
  if (t >= inst.periods()) {
    throw ValidationError("period " + std::to_string(t + 1) + " is out of range 1.." +
                          std::to_string(inst.periods()));
  }
  const auto members = s.members();
  CoalitionParams params;
  params.production = inst.production(members.front(), t);
  for (const auto i : members) params.production = std::min(params.production, inst.production(i, t));
  if (t + 1 < inst.periods()) {
    Rational h = inst.holding(members.front(), t);
    Rational b = inst.backlog(members.front(), t);
    for (const auto i : members) {
      h = std::min(h, inst.holding(i, t));
      b = std::min(b, inst.backlog(i, t));
    }
    params.holding = std::move(h);
    params.backlog = std::move(b);
  }
  params.demand = coalition_demand(inst, s, t);
  return params;
}

DualPriceVector dual_prices(const PIInstance& inst, Coalition s) {
  check_coalition(inst, s);
  const std::size_t periods = inst.periods();
  const auto members = s.members();
  auto pooled = [&](const RationalMatrix& m, std::size_t t) {
    Rational best = m[members.front()][t];
    for (const auto i : members) best = std::min(best, m[i][t]);
    return best;
  };
  RationalVector p(periods), h(periods - 1), b(periods - 1);
  for (std::size_t t = 0; t < periods; ++t) p[t] = pooled(inst.production_matrix(), t);
  for (std::size_t t = 0; t + 1 < periods; ++t) {
    h[t] = pooled(inst.holding_matrix(), t);
    b[t] = pooled(inst.backlog_matrix(), t);
  }

  // forward[t]  = min over k <= t of p_k + h_k + ... + h_{t-1}
  // backward[t] = min over k >= t of p_k + b_t + ... + b_{k-1}
  RationalVector forward(p), backward(p);
  for (std::size_t t = 1; t < periods; ++t) {
    forward[t] = std::min(forward[t], Rational(forward[t - 1] + h[t - 1]));
  }
  for (std::size_t t = periods - 1; t-- > 0;) {
    backward[t] = std::min(backward[t], Rational(backward[t + 1] + b[t]));
  }
  DualPriceVector y;
  y.prices.resize(periods);
  for (std::size_t t = 0; t < periods; ++t) y.prices[t] = std::min(forward[t], backward[t]);
  return y;
}

PIInstance per_period_instance(const PIInstance& inst, std::size_t t) {
  if (t >= inst.periods()) {
    throw ValidationError("period " + std::to_string(t + 1) + " is out of range 1.." +
                          std::to_string(inst.periods()));
  }
  DemandMatrix demand(inst.players(), std::vector<Demand>(inst.periods(), 0));
  for (Player i = 0; i < inst.players(); ++i) demand[i][t] = inst.demand(i, t);
  return PIInstance(std::move(demand), inst.production_matrix(), inst.holding_matrix(),
                    inst.backlog_matrix());
}

}  // namespace pigame
