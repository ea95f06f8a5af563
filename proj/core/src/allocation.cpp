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

#include "pigame/allocation.hpp"

#include <string>
#include <utility>

#include "pigame/errors.hpp"

namespace pigame {

Rational cost_reduction_q(const GameTable& game, std::size_t t, Player i, Player j) {
  if (t >= game.periods() || i >= game.players() || j >= game.players()) {
    throw ValidationError("cost_reduction_q: index out of range");
  }
  if (i == j) return 0;
  const Rational gap = game.prices_without(i)[t] - game.grand_prices()[t];
  return gap * game.instance().demand(j, t);
}

OmegaDecomposition omega_point(const GameTable& game) {
  const std::size_t n = game.players();
  const std::size_t periods = game.periods();
  const auto& inst = game.instance();
  const auto& y = game.grand_prices();
  const EssentialPlayers essentials = essential_players(game);

  OmegaDecomposition out;
  out.omega = Allocation(n);
  out.per_period.assign(periods, RationalVector(n));
  out.q.assign(periods, RationalMatrix(n, RationalVector(n)));
  out.period_transfers.assign(periods, RationalVector(n));
  out.transfers.assign(n, Rational(0));

  for (std::size_t t = 0; t < periods; ++t) {
    if (n >= 2) {
      for (Player i = 0; i < n; ++i) {
        for (Player j = 0; j < n; ++j) out.q[t][i][j] = cost_reduction_q(game, t, i, j);
      }
    }
    auto& transfer = out.period_transfers[t];
    if (essentials.per_period[t].size() == 1) {
      const Player k = essentials.per_period[t].members().front();
      for (Player j = 0; j < n; ++j) {
        if (j == k) continue;
        transfer[j] += out.q[t][k][j];
        transfer[k] -= out.q[t][k][j];
      }
    }
    for (Player i = 0; i < n; ++i) {
      out.per_period[t][i] = y[t] * inst.demand(i, t) + transfer[i];
      out.omega[i] += out.per_period[t][i];
      out.transfers[i] += transfer[i];
    }
  }
  return out;
}

Allocation qpq(const Allocation& owen, const Allocation& omega, const Rational& lambda) {
  if (lambda < 0 || lambda > 1) {
    throw ValidationError("lambda " + to_string(lambda) + " is outside [0, 1]");
  }
  if (owen.size() != omega.size()) throw ValidationError("qpq: allocation sizes differ");
  Allocation a(owen.size());
  const Rational rest = 1 - lambda;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = lambda * omega[i] + rest * owen[i];
  return a;
}

Allocation qpq(const GameTable& game, const Rational& lambda) {
  return qpq(owen_point(game), omega_point(game).omega, lambda);
}

Allocation solomonic(const GameTable& game) { return qpq(game, Rational(1, 2)); }

Allocation shapley(const GameTable& game) {
  const std::size_t n = game.players();
  std::vector<BigInt> factorial(n + 1, BigInt(1));
  for (std::size_t k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * static_cast<unsigned>(k);
  RationalVector weight(n);
  for (std::size_t s = 0; s < n; ++s) {
    weight[s] = Rational(BigInt(factorial[s] * factorial[n - s - 1]), factorial[n]);
  }

  Allocation phi(n);
  for (Player i = 0; i < n; ++i) {
    const Coalition::Mask others = game.grand().without(i).mask();
    Rational total = 0;
    Coalition::Mask sub = 0;
    for (;;) {
      const Coalition s(sub);
      const Rational marginal = game.value(s.with(i)) - game.value(s);
      if (marginal != 0) total += weight[s.size()] * marginal;
      if (sub == others) break;
      sub = (sub - others) & others;
    }
    phi[i] = std::move(total);
  }
  return phi;
}

ConcavityResult is_concave(const GameTable& game, std::size_t cap) {
  const std::size_t n = game.players();
  if (n > cap) {
    throw CapExceeded("concavity scan is limited to " + std::to_string(cap) + " players");
  }
  const Coalition::Mask full = game.grand().mask();
  for (Player i = 0; i < n; ++i) {
    for (Coalition::Mask m = 1; m <= full; ++m) {
      const Coalition s(m);
      if (!s.contains(i)) continue;
      const Rational lhs = game.value(s) - game.value(s.without(i));
      const Coalition::Mask outside = s.complement(n).mask();
      Coalition::Mask sub = 0;
      for (;;) {
        const Coalition t = s | Coalition(sub);
        if (lhs < game.value(t) - game.value(t.without(i))) {
          return {false, ConcavityCounterexample{i, s, t}};
        }
        if (sub == outside) break;
        sub = (sub - outside) & outside;
      }
    }
  }
  return {};
}

PSWitness is_ps_game(const GameTable& game, std::size_t cap) {
  const std::size_t n = game.players();
  if (n > cap) {
    throw CapExceeded("PS-game scan is limited to " + std::to_string(cap) + " players");
  }
  const Coalition grand = game.grand();
  auto delta = [&](Player i, Coalition s) { return Rational(game.value(s.with(i)) - game.value(s)); };
  PSWitness out;
  for (Player i = 0; i < n; ++i) {
    const Coalition others = grand.without(i);
    const Rational constant = delta(i, Coalition()) + delta(i, others);
    Coalition::Mask sub = 0;
    for (;;) {
      const Coalition s(sub);
      if (delta(i, s) + delta(i, others - s) != constant) {
        out.is_ps = false;
        out.constants.clear();
        out.counterexample = std::make_pair(i, s);
        return out;
      }
      if (sub == others.mask()) break;
      sub = (sub - others.mask()) & others.mask();
    }
    out.constants.push_back(constant);
  }
  return out;
}

SolomonicConditions check_solomonic_conditions(const GameTable& game) {
  const std::size_t periods = game.periods();
  const auto& inst = game.instance();
  const auto& y_grand = game.grand_prices();
  const EssentialPlayers essentials = essential_players(game);

  SolomonicConditions out;
  out.single_essential.assign(periods, true);
  out.essential_price.assign(periods, true);
  out.outsider_price.assign(periods, true);
  for (std::size_t t = 0; t < periods; ++t) {
    const Coalition e = essentials.per_period[t];
    out.single_essential[t] = e.size() <= 1;
    if (!e.empty()) out.essential_price[t] = dual_prices(inst, e)[t] == y_grand[t];
    const Coalition rest = game.grand() - e;
    if (!rest.empty()) {
      const Rational y_rest = dual_prices(inst, rest)[t];
      for (const auto i : rest.members()) {
        if (dual_prices(inst, Coalition::singleton(i))[t] != y_rest) {
          out.outsider_price[t] = false;
          break;
        }
      }
    }
    out.holds = out.holds && out.single_essential[t] && out.essential_price[t] && out.outsider_price[t];
  }
  return out;
}

const char* to_string(Applicability a) {
  switch (a) {
    case Applicability::holds:
      return "holds";
    case Applicability::fails:
      return "fails";
    case Applicability::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

AxiomReport check_axioms(const GameTable& game, const Allocation& x) {
  const std::size_t n = game.players();
  if (x.size() != n) {
    throw ValidationError("allocation has " + std::to_string(x.size()) + " entries but the game has " +
                          std::to_string(n) + " players");
  }
  const auto& inst = game.instance();
  const EssentialPlayers essentials = essential_players(game);

  AxiomReport report;
  report.efficiency = x.total() == game.value(game.grand());
  report.nonemptiness = true;

  std::vector<DualPriceVector> remaining_prices;
  for (std::size_t t = 0; t < game.periods(); ++t) {
    const Coalition rest = game.grand() - essentials.per_period[t];
    // An inessential player belongs to every N \ E^t, so rest is nonempty
    // whenever the bound is actually needed.
    remaining_prices.push_back(rest.empty() ? DualPriceVector{} : dual_prices(inst, rest));
  }
  report.inessential_bounded_cost = true;
  report.ibc_bounds.assign(n, std::nullopt);
  for (Player i = 0; i < n; ++i) {
    if (essentials.all.contains(i)) continue;
    Rational bound = 0;
    for (std::size_t t = 0; t < game.periods(); ++t) bound += remaining_prices[t][t] * inst.demand(i, t);
    if (x[i] > bound) report.inessential_bounded_cost = false;
    report.ibc_bounds[i] = std::move(bound);
  }

  if (essentials.all.size() == 1) {
    const Player k = essentials.all.members().front();
    const Coalition others = game.grand().without(k);
    report.tyranny = x.sum(others) == game.value(others) ? Applicability::holds : Applicability::fails;
  }

  Allocation combined(n);
  for (std::size_t t = 0; t < game.periods(); ++t) {
    const GameTable period_game(per_period_instance(inst, t), n);
    Allocation component = essentials.per_period[t].size() <= 1 ? omega_point(period_game).omega
                                                                 : owen_point(period_game);
    for (Player i = 0; i < n; ++i) combined[i] += component[i];
    report.period_components.push_back(std::move(component));
  }
  report.omega_additive = combined == omega_point(game).omega;
  report.allocation_matches_omega_decomposition = combined == x;
  return report;
}

CoincidenceReport coincidence_report(const GameTable& game, std::size_t cap) {
  CoincidenceReport r;
  r.solomonic = solomonic(game);
  r.shapley = shapley(game);
  r.nucleolus = nucleolus(game);
  r.solomonic_equals_shapley = r.solomonic == r.shapley;
  r.shapley_equals_nucleolus = r.shapley == r.nucleolus;
  r.solomonic_equals_nucleolus = r.solomonic == r.nucleolus;
  r.all_coincide = r.solomonic_equals_shapley && r.shapley_equals_nucleolus;
  r.conditions = check_solomonic_conditions(game);
  r.concavity = is_concave(game, cap);
  r.ps = is_ps_game(game, cap);
  r.conditions_consistent = !r.conditions.holds || r.all_coincide;
  return r;
}

}  // namespace pigame
