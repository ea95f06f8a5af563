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

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pigame/allocation.hpp"
#include "pigame/lp.hpp"

namespace pigame {
namespace {

RationalVector indicator_row(Coalition s, std::size_t width) {
  RationalVector row(width);
  for (const auto i : s.members()) row[i] = 1;
  return row;
}

// Rows that pin x down: efficiency plus frozen coalitions, kept linearly
// independent so that rank n means the point is unique.
class PinnedRows {
 public:
  explicit PinnedRows(std::size_t n) : n_(n) {}

  bool independent_of(const RationalVector& row) const {
    RationalMatrix m = rows_;
    m.push_back(row);
    return matrix_rank(std::move(m)) > rows_.size();
  }

  void add(RationalVector row, Rational rhs) {
    if (!independent_of(row)) return;
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
  }

  bool complete() const { return rows_.size() == n_; }

  RationalVector solve() const {
    auto x = solve_linear_system(rows_, rhs_);
    if (!x) throw std::logic_error("nucleolus: pinned rows are singular");
    return *x;
  }

 private:
  std::size_t n_;
  RationalMatrix rows_;
  RationalVector rhs_;
};

struct FrozenConstraint {
  Coalition coalition;
  Rational excess;
};

}  // namespace

Allocation nucleolus(const GameTable& game) {
  const std::size_t n = game.players();
  const Coalition grand = game.grand();
  const Rational grand_cost = game.value(grand);

  PinnedRows pinned(n);
  pinned.add(indicator_row(grand, n), grand_cost);

  std::vector<FrozenConstraint> frozen;
  std::vector<Coalition> active;
  for (Coalition::Mask m = 1; m < grand.mask(); ++m) active.emplace_back(m);

  // Variables: x_0 .. x_{n-1}, then epsilon.
  const std::size_t width = n + 1;
  auto base_problem = [&]() {
    LPProblem lp(width);
    RationalVector eff = indicator_row(grand, width);
    lp.add_equality(std::move(eff), grand_cost);
    for (const auto& f : frozen) {
      lp.add_equality(indicator_row(f.coalition, width), game.value(f.coalition) + f.excess);
    }
    return lp;
  };

  while (!pinned.complete()) {
    if (active.empty()) throw std::logic_error("nucleolus: no active constraints left");

    LPProblem stage = base_problem();
    stage.objective[n] = 1;
    for (const auto s : active) {
      RationalVector row = indicator_row(s, width);
      row[n] = -1;
      stage.add_inequality(std::move(row), game.value(s));
    }
    const LPSolution sol = solve_lp(stage);
    if (sol.status != LPStatus::optimal) {
      throw std::logic_error(std::string("nucleolus stage LP is ") + to_string(sol.status));
    }
    const Rational epsilon = sol.value;

    // Among the tight rows, find those whose excess equals epsilon in every
    // optimum: maximize the total slack t_S (each capped at 1) and discard
    // rows that can be slack, until the maximum slack is zero.
    std::vector<Coalition> to_freeze;
    for (const auto row : sol.tight_inequalities) to_freeze.push_back(active[row]);
    while (!to_freeze.empty()) {
      const std::size_t k = to_freeze.size();
      LPProblem probe(n + k);
      probe.add_equality(indicator_row(grand, n + k), grand_cost);
      for (const auto& f : frozen) {
        probe.add_equality(indicator_row(f.coalition, n + k), game.value(f.coalition) + f.excess);
      }
      for (const auto other : active) {
        if (std::find(to_freeze.begin(), to_freeze.end(), other) != to_freeze.end()) continue;
        probe.add_inequality(indicator_row(other, n + k), game.value(other) + epsilon);
      }
      for (std::size_t j = 0; j < k; ++j) {
        RationalVector row = indicator_row(to_freeze[j], n + k);
        row[n + j] = 1;
        probe.add_inequality(std::move(row), game.value(to_freeze[j]) + epsilon);
        RationalVector upper(n + k);
        upper[n + j] = 1;
        probe.add_inequality(upper, Rational(1));
        upper[n + j] = -1;
        probe.add_inequality(std::move(upper), Rational(0));
        probe.objective[n + j] = -1;
      }
      const LPSolution slack = solve_lp(probe);
      if (slack.status != LPStatus::optimal) {
        throw std::logic_error(std::string("nucleolus probe LP is ") + to_string(slack.status));
      }
      if (slack.value == 0) break;
      std::vector<Coalition> fixed;
      for (std::size_t j = 0; j < k; ++j) {
        if (slack.point[n + j] == 0) fixed.push_back(to_freeze[j]);
      }
      to_freeze = std::move(fixed);
    }
    if (to_freeze.empty()) throw std::logic_error("nucleolus: stage froze no constraint");

    for (const auto s : to_freeze) {
      frozen.push_back({s, epsilon});
      pinned.add(indicator_row(s, n), game.value(s) + epsilon);
    }
    std::vector<Coalition> still_active;
    for (const auto s : active) {
      bool is_frozen = false;
      for (const auto f : to_freeze) is_frozen = is_frozen || f == s;
      if (is_frozen) continue;
      // Excesses already determined by the pinned rows are constant from here on.
      if (!pinned.independent_of(indicator_row(s, n))) continue;
      still_active.push_back(s);
    }
    active = std::move(still_active);
  }
  return Allocation(pinned.solve());
}

}  // namespace pigame
