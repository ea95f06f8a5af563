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

#include "pigame/selftest.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <utility>

#include "pigame/allocation.hpp"
#include "pigame/core_geometry.hpp"
#include "pigame/errors.hpp"
#include "pigame/game.hpp"
#include "pigame/instance_io.hpp"

namespace pigame {

bool CriterionResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed; });
}

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

Allocation alloc(std::initializer_list<Rational> v) { return Allocation(v); }

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  void check(std::string name, bool ok, std::string detail = {}) {
    r_.checks.push_back({std::move(name), ok, std::move(detail)});
  }

  void equal(std::string name, const Rational& actual, const Rational& expected) {
    check(std::move(name), actual == expected, "got " + to_string(actual) + ", expected " + to_string(expected));
  }

  void equal(std::string name, const Allocation& actual, const Allocation& expected) {
    check(std::move(name), actual == expected, "got " + to_string(actual) + ", expected " + to_string(expected));
  }

  // Runs body; an escaping exception becomes a failed sub-check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("threw: ") + e.what());
    }
  }

 private:
  CriterionResult& r_;
};

// Three-player coalitions by size, then by members.
const Coalition kThreePlayerOrder[] = {Coalition::of({0}),    Coalition::of({1}),    Coalition::of({2}),
                                       Coalition::of({0, 1}), Coalition::of({0, 2}), Coalition::of({1, 2}),
                                       Coalition::of({0, 1, 2})};

CriterionResult criterion_example1_table() {
  CriterionResult r{1, "Example 1 characteristic table", {}};
  Recorder rec(r);
  rec.guarded("table", [&] {
    const GameTable g(builtin_instance("example1"));
    const long expected[] = {35, 36, 25, 51, 38, 53, 64};
    for (std::size_t k = 0; k < 7; ++k) {
      rec.equal("c" + to_string(kThreePlayerOrder[k]), g.value(kThreePlayerOrder[k]), q(expected[k]));
    }
  });
  return r;
}

CriterionResult criterion_example1_allocations() {
  CriterionResult r{2, "Example 1 Owen point, transfers, extreme images, Omega point", {}};
  Recorder rec(r);
  rec.guarded("allocations", [&] {
    const GameTable g(builtin_instance("example1"));
    const Allocation o = owen_point(g);
    rec.equal("owen", o, alloc({25, 26, 13}));
    const EssentialFanPair p12{0, 1}, p13{0, 2};
    rec.equal("alpha_(1,2)(o)", transferred_cost(g, p12, o).alpha, q(10));
    rec.equal("alpha_(1,3)(o)", transferred_cost(g, p13, o).alpha, q(12));
    rec.equal("f_(1,2)(o)", extreme_function(g, p12, o), alloc({15, 36, 13}));
    rec.equal("f_(1,3)(o)", extreme_function(g, p13, o), alloc({13, 26, 25}));
    const OmegaDecomposition w = omega_point(g);
    rec.equal("omega", w.omega, alloc({11, 34, 19}));
    rec.equal("Q", Allocation(w.transfers), alloc({-14, 8, 6}));
  });
  return r;
}

CriterionResult criterion_example3() {
  CriterionResult r{3, "Example 3 Owen, Omega, QPQ segment, Shapley = nucleolus = Solomonic", {}};
  Recorder rec(r);
  rec.guarded("example3", [&] {
    const GameTable g(builtin_instance("example3"));
    rec.equal("owen", owen_point(g), alloc({7, 7, 7, 6}));
    const OmegaDecomposition w = omega_point(g);
    rec.equal("omega", w.omega, alloc({6, 9, 8, 4}));
    const Allocation expected_q[] = {alloc({-6, 2, 2, 2}), alloc({1, -3, 1, 1}), alloc({2, 1, -4, 1}),
                                     alloc({2, 2, 2, -6})};
    for (std::size_t t = 0; t < 4; ++t) {
      rec.equal("Q^" + std::to_string(t + 1), Allocation(w.period_transfers[t]), expected_q[t]);
    }
    for (const Rational& lambda : {q(0), q(1, 2), q(1)}) {
      const Allocation expected{7 - lambda, 7 + 2 * lambda, 7 + lambda, 6 - 2 * lambda};
      rec.equal("qpq(" + to_string(lambda) + ")", qpq(g, lambda), expected);
    }
    const Allocation target = alloc({q(13, 2), 8, q(15, 2), 5});
    rec.equal("shapley", shapley(g), target);
    rec.equal("nucleolus", nucleolus(g), target);
    rec.equal("solomonic", solomonic(g), target);
  });
  return r;
}

CriterionResult criterion_example4() {
  CriterionResult r{4, "Example 4 table, Shapley, nucleolus, Solomonic, concavity, condition (iii), PS", {}};
  Recorder rec(r);
  rec.guarded("example4", [&] {
    const GameTable g(builtin_instance("example4"));
    const long expected[] = {45, 50, 70, 70, 75, 80, 85};
    for (std::size_t k = 0; k < 7; ++k) {
      rec.equal("c" + to_string(kThreePlayerOrder[k]), g.value(kThreePlayerOrder[k]), q(expected[k]));
    }
    rec.equal("shapley", shapley(g), alloc({q(125, 6), q(155, 6), q(115, 3)}));
    rec.equal("nucleolus", nucleolus(g), alloc({q(70, 3), q(85, 3), q(100, 3)}));
    rec.equal("solomonic", solomonic(g), alloc({q(55, 2), 30, q(55, 2)}));
    rec.check("concave", is_concave(g).concave);
    const SolomonicConditions cond = check_solomonic_conditions(g);
    rec.check("condition (iii) fails at t=1", !cond.outsider_price[0]);
    const auto& inst = g.instance();
    rec.equal("y_1*({2,3})", dual_prices(inst, Coalition::of({1, 2})).prices[0], q(2));
    rec.equal("y_1*({3})", dual_prices(inst, Coalition::of({2})).prices[0], q(3));
    rec.check("not a PS-game", !is_ps_game(g).is_ps);
  });
  return r;
}

CriterionResult criterion_exponential_family() {
  CriterionResult r{5, "Exponential family: closed-form game, walk images, vertex count", {}};
  Recorder rec(r);
  rec.guarded("expfamily", [&] {
    for (std::size_t n = 3; n <= 5; ++n) {
      const std::string tag = "n=" + std::to_string(n) + " ";
      const GameTable g(builtin_instance("expfamily:" + std::to_string(n)));
      bool formula = true;
      for (Coalition::Mask m = 1; m <= g.grand().mask(); ++m) {
        const Coalition s(m);
        const Rational expected = s.contains(0) ? q(static_cast<long>(s.size()))
                                                : q(static_cast<long>(n * s.size()));
        formula = formula && g.value(s) == expected;
      }
      rec.check(tag + "c(S) closed form", formula);
      const Allocation o = owen_point(g);
      rec.equal(tag + "owen", o, Allocation(RationalVector(n, Rational(1))));
      const long ln = static_cast<long>(n);
      bool one_step = true;
      bool two_steps = true;
      for (Player i = 1; i < n; ++i) {
        const Allocation x = extreme_function(g, {0, i}, o);
        Allocation expected(RationalVector(n, Rational(1)));
        expected[0] = 2 - ln;
        expected[i] = ln;
        one_step = one_step && x == expected;
        for (Player k = 1; k < n; ++k) {
          if (k == i) continue;
          Allocation e2 = expected;
          e2[0] = 3 - 2 * ln;
          e2[k] = ln;
          two_steps = two_steps && extreme_function(g, {0, k}, x) == e2;
        }
      }
      rec.check(tag + "one step gives 2-n at player 1", one_step);
      rec.check(tag + "two distinct steps give 3-2n at player 1", two_steps);
    }
    for (std::size_t n = 2; n <= 4; ++n) {
      const std::string tag = "n=" + std::to_string(n) + " ";
      const GameTable g(builtin_instance("expfamily:" + std::to_string(n)));
      const VertexSet vertices = enumerate_core_vertices(g);
      const std::size_t power = std::size_t{1} << (n - 1);
      rec.check(tag + "vertex count 2^(n-1)", vertices.size() == power,
                "got " + std::to_string(vertices.size()) + ", expected " + std::to_string(power));
      rec.check(tag + "vertex count differs from 2^(n-1)+1", vertices.size() != power + 1);
      const WalkEnumeration walk = generate_extremes_from_owen(g);
      rec.check(tag + "walk set equals vertex set", !walk.truncated && walk.points == vertices);
    }
  });
  return r;
}

CriterionResult criterion_oracle_equivalence() {
  CriterionResult r{6, "Closed-form c(S) equals the dual LP optimum", {}};
  Recorder rec(r);
  rec.guarded("oracle", [&] {
    for (const char* name : {"example1", "example3", "example4", "expfamily:4"}) {
      const GameTable g(builtin_instance(name));
      std::string mismatch;
      for (Coalition::Mask m = 1; m <= g.grand().mask() && mismatch.empty(); ++m) {
        const Rational lp = characteristic_value_lp_oracle(g.instance(), Coalition(m));
        if (lp != g.value(Coalition(m))) {
          mismatch = to_string(Coalition(m)) + ": closed form " + to_string(g.value(Coalition(m))) + ", LP " +
                     to_string(lp);
        }
      }
      rec.check(std::string(name) + " all coalitions", mismatch.empty(), mismatch);
    }
  });
  return r;
}

// Bundled instances used for the property sweep.
std::vector<std::string> bundled_instances() {
  std::vector<std::string> names{"example1", "example3", "example4"};
  for (int n = 2; n <= 8; ++n) names.push_back("expfamily:" + std::to_string(n));
  return names;
}

Allocation random_core_point(const std::vector<Allocation>& vertices, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> weight(0, 9);
  std::vector<long> w(vertices.size());
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& v : w) total += (v = weight(rng));
  }
  Allocation x(vertices.front().size());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (w[k] == 0) continue;
    const Rational lambda(w[k], total);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += lambda * vertices[k][i];
  }
  return x;
}

CriterionResult criterion_properties() {
  CriterionResult r{7, "Property suites over bundled instances", {}};
  Recorder rec(r);
  std::mt19937_64 rng(20260417);
  for (const auto& name : bundled_instances()) {
    rec.guarded(name, [&] {
      const GameTable g(builtin_instance(name));
      const auto& inst = g.instance();
      const std::size_t n = g.players();
      const Coalition::Mask full = g.grand().mask();

      bool monotone = true;
      std::vector<DualPriceVector> prices(std::size_t{full} + 1);
      for (Coalition::Mask m = 1; m <= full; ++m) prices[m] = dual_prices(inst, Coalition(m));
      for (Coalition::Mask big = 1; big <= full && monotone; ++big) {
        for (Coalition::Mask small = big; small != 0 && monotone; small = (small - 1) & big) {
          for (std::size_t t = 0; t < g.periods(); ++t) monotone = monotone && prices[small].prices[t] >= prices[big].prices[t];
        }
      }
      rec.check(name + " dual monotonicity", monotone);

      const Allocation o = owen_point(g);
      const OmegaDecomposition w = omega_point(g);
      bool members = is_core_member(g, o).member && is_core_member(g, w.omega).member;
      for (const Rational& lambda : {q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}) {
        members = members && is_core_member(g, qpq(o, w.omega, lambda)).member;
      }
      rec.check(name + " Owen, Omega, QPQ samples in core", members);
      rec.equal(name + " sum of Q", Allocation(w.transfers).total(), q(0));

      const auto pairs = pair_set(g);
      bool positive = true;
      for (const auto& p : pairs) positive = positive && transferred_cost(g, p, o).alpha > 0;
      rec.check(name + " alpha_p(o) > 0", positive);

      if (n <= kDefaultVertexCap && !pairs.empty()) {
        const VertexSet vs = enumerate_core_vertices(g);
        const std::vector<Allocation> vertices(vs.begin(), vs.end());
        bool closed = true;
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        for (int k = 0; k < 1000 && closed; ++k) {
          const Allocation x = random_core_point(vertices, rng);
          const Allocation y = extreme_function(g, pairs[pick(rng)], x);
          closed = is_core_member(g, y).member && is_boundary_point(g, y);
        }
        rec.check(name + " f_p maps 1000 random core points to the boundary", closed);
      }

      const Allocation phi = shapley(g);
      const Allocation eta = nucleolus(g);
      rec.check(name + " Shapley efficient", phi.total() == g.value(g.grand()));
      rec.check(name + " nucleolus in core", is_core_member(g, eta).member);
      const PSWitness ps = is_ps_game(g);
      rec.check(name + " PS => Shapley = nucleolus", !ps.is_ps || phi == eta);
      const SolomonicConditions cond = check_solomonic_conditions(g);
      const Allocation sigma = solomonic(g);
      rec.check(name + " conditions => Solomonic = Shapley = nucleolus",
                !cond.holds || (sigma == phi && phi == eta));
      rec.check(name + " conditions => concave", !cond.holds || is_concave(g).concave);
    });
  }
  return r;
}

CriterionResult criterion_player_cap() {
  CriterionResult r{8, "Exact exponential core scan with the 20-player cap enforced", {}};
  Recorder rec(r);
  rec.guarded("cap", [&] {
    auto clones = [](std::size_t n) {
      return PIInstance(DemandMatrix(n, std::vector<Demand>{1, 1}), RationalMatrix(n, RationalVector{1, 2}),
                        RationalMatrix(n, RationalVector{1}), RationalMatrix(n, RationalVector{1}));
    };
    bool refused = false;
    try {
      const GameTable g(clones(GameTable::kDefaultPlayerCap + 1));
    } catch (const CapExceeded&) {
      refused = true;
    }
    rec.check("21 players refused", refused);

    const GameTable g20(clones(GameTable::kDefaultPlayerCap));
    rec.check("20 players accepted (lazy table)", !g20.is_eager() && g20.value(g20.grand()) == q(60));

    // A violation hidden in one large coalition is found only by the full scan.
    const GameTable g(clones(17));
    Allocation x = owen_point(g);
    rec.check("17-player Owen point passes the exhaustive scan", is_core_member(g, x).member);
    x[0] += 1;
    x[16] -= 1;
    const CoreCheck bad = is_core_member(g, x);
    rec.check("first violating coalition found", !bad.member && bad.violation == Coalition::of({0}));
  });
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria(const std::function<void(const CriterionResult&)>& on_done) {
  using Criterion = CriterionResult (*)();
  const Criterion criteria[] = {criterion_example1_table, criterion_example1_allocations,
                                criterion_example3,        criterion_example4,
                                criterion_exponential_family, criterion_oracle_equivalence,
                                criterion_properties,      criterion_player_cap};
  std::vector<CriterionResult> results;
  for (const Criterion run : criteria) {
    results.push_back(run());
    if (on_done) on_done(results.back());
  }
  return results;
}

void print_criterion(const CriterionResult& r, std::ostream& out, bool verbose) {
  out << (r.passed() ? "PASS" : "FAIL") << "  criterion " << r.number << ": " << r.title << "\n";
  for (const auto& c : r.checks) {
    if (c.passed && !verbose) continue;
    out << "        " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  out.flush();
}

bool print_acceptance_summary(const std::vector<CriterionResult>& results, std::ostream& out, bool verbose) {
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    print_criterion(r, out, verbose);
  }
  return all;
}

}  // namespace pigame
