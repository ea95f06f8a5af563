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

#include <gtest/gtest.h>

#include "pigame/allocation.hpp"
#include "pigame/errors.hpp"
#include "pigame/instance_io.hpp"
#include "test_util.hpp"

namespace pigame {
namespace {

using test::alloc;
using test::q;

const char* const kInstances[] = {"example1",    "example3",    "example4",   "expfamily:2",
                                  "expfamily:3", "expfamily:5", "expfamily:7"};

TEST(CostReduction, Examples) {
  const GameTable e1(builtin_instance("example1"));
  EXPECT_EQ(cost_reduction_q(e1, 0, 0, 1), 8);
  EXPECT_EQ(cost_reduction_q(e1, 0, 0, 2), 6);
  EXPECT_EQ(cost_reduction_q(e1, 0, 1, 1), 0);
  const GameTable e3(builtin_instance("example3"));
  for (Player j = 1; j < 4; ++j) EXPECT_EQ(cost_reduction_q(e3, 0, 0, j), 2);
}

TEST(Omega, Example1) {
  const OmegaDecomposition d = omega_point(GameTable(builtin_instance("example1")));
  EXPECT_EQ(d.omega, alloc({11, 34, 19}));
  EXPECT_EQ(d.transfers, (RationalVector{-14, 8, 6}));
}

TEST(Omega, Example3) {
  const OmegaDecomposition d = omega_point(GameTable(builtin_instance("example3")));
  EXPECT_EQ(d.omega, alloc({6, 9, 8, 4}));
  EXPECT_EQ(d.period_transfers, (RationalMatrix{{-6, 2, 2, 2}, {1, -3, 1, 1}, {2, 1, -4, 1}, {2, 2, 2, -6}}));
  EXPECT_EQ(d.transfers, (RationalVector{-1, 2, 1, -2}));
}

TEST(Omega, NoEssentialPlayersGivesOwen) {
  const GameTable g(test::clones(4));
  EXPECT_EQ(omega_point(g).omega, owen_point(g));
}

TEST(Omega, Invariants) {
  for (const char* name : kInstances) {
    const GameTable g(builtin_instance(name));
    const OmegaDecomposition d = omega_point(g);
    const Allocation o = owen_point(g);
    const EssentialPlayers e = essential_players(g);
    Rational balance = 0;
    for (Player i = 0; i < g.players(); ++i) {
      EXPECT_EQ(d.omega[i], o[i] + d.transfers[i]);
      balance += d.transfers[i];
      for (std::size_t t = 0; t < g.periods(); ++t) {
        if (d.period_transfers[t][i] < 0) {
          EXPECT_TRUE(e.per_period[t].contains(i)) << name;
        }
      }
    }
    EXPECT_EQ(balance, 0);
    EXPECT_TRUE(is_core_member(g, d.omega).member) << name;
  }
}

TEST(Qpq, Example3Segment) {
  const GameTable g(builtin_instance("example3"));
  for (const Rational& l : {q(0), q(1, 3), q(1, 2), q(5, 7), q(1)}) {
    EXPECT_EQ(qpq(g, l), (Allocation{7 - l, 7 + 2 * l, 7 + l, 6 - 2 * l}));
  }
  EXPECT_EQ(qpq(g, 0), owen_point(g));
  EXPECT_EQ(qpq(g, 1), omega_point(g).omega);
  EXPECT_THROW(qpq(g, q(-1, 2)), ValidationError);
  EXPECT_THROW(qpq(g, q(3, 2)), ValidationError);
}

TEST(Qpq, CoreMembership) {
  for (const char* name : kInstances) {
    const GameTable g(builtin_instance(name));
    for (const Rational& l : {q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}) {
      EXPECT_TRUE(is_core_member(g, qpq(g, l)).member) << name;
    }
  }
}

TEST(Solomonic, Examples) {
  EXPECT_EQ(solomonic(GameTable(builtin_instance("example3"))), alloc({q(13, 2), 8, q(15, 2), 5}));
  // o = (25, 30, 30) and w = (20, 30, 35) on this instance.
  EXPECT_EQ(solomonic(GameTable(builtin_instance("example4"))), alloc({q(45, 2), 30, q(65, 2)}));
  const GameTable same(test::clones(3));
  EXPECT_EQ(solomonic(same), owen_point(same));
}

TEST(Shapley, Examples) {
  EXPECT_EQ(shapley(GameTable(builtin_instance("example4"))), alloc({q(125, 6), q(155, 6), q(115, 3)}));
  EXPECT_EQ(shapley(GameTable(builtin_instance("example3"))), alloc({q(13, 2), 8, q(15, 2), 5}));
  EXPECT_EQ(shapley(GameTable(test::clones(4))), alloc({3, 3, 3, 3}));
}

TEST(Shapley, Efficiency) {
  for (const char* name : kInstances) {
    const GameTable g(builtin_instance(name));
    EXPECT_EQ(shapley(g).total(), g.value(g.grand()));
  }
}

TEST(Nucleolus, Examples) {
  EXPECT_EQ(nucleolus(GameTable(builtin_instance("example4"))), alloc({q(70, 3), q(85, 3), q(100, 3)}));
  EXPECT_EQ(nucleolus(GameTable(builtin_instance("example3"))), alloc({q(13, 2), 8, q(15, 2), 5}));
}

TEST(Nucleolus, TwoPlayerFormula) {
  const GameTable g(test::single_period({3, 5}));
  const Rational c1 = g.value(Coalition::of({0})), c2 = g.value(Coalition::of({1})), cn = g.value(g.grand());
  EXPECT_EQ(nucleolus(g), (Allocation{(c1 + cn - c2) / 2, (c2 + cn - c1) / 2}));
  EXPECT_EQ(nucleolus(g), alloc({2, 4}));
}

TEST(Nucleolus, CoreMembershipAndSymmetry) {
  for (const char* name : kInstances) {
    const GameTable g(builtin_instance(name));
    EXPECT_TRUE(is_core_member(g, nucleolus(g)).member) << name;
  }
  EXPECT_EQ(nucleolus(GameTable(test::clones(5))), alloc({3, 3, 3, 3, 3}));
  EXPECT_EQ(nucleolus(GameTable(test::single_period({q(7, 3)}))), alloc({q(7, 3)}));
}

TEST(Concavity, Examples) {
  EXPECT_TRUE(is_concave(GameTable(builtin_instance("example4"))).concave);
  EXPECT_TRUE(is_concave(GameTable(test::clones(4))).concave);
  const GameTable g(builtin_instance("example1"));
  const ConcavityResult r = is_concave(g);
  ASSERT_FALSE(r.concave);
  ASSERT_TRUE(r.counterexample);
  const auto& ce = *r.counterexample;
  EXPECT_TRUE(ce.smaller.subset_of(ce.larger));
  EXPECT_TRUE(ce.smaller.contains(ce.player));
  EXPECT_LT(g.value(ce.smaller) - g.value(ce.smaller.without(ce.player)),
            g.value(ce.larger) - g.value(ce.larger.without(ce.player)));
  EXPECT_THROW(is_concave(g, 2), CapExceeded);
}

TEST(PsGame, Examples) {
  const GameTable e3(builtin_instance("example3"));
  const PSWitness w = is_ps_game(e3);
  ASSERT_TRUE(w.is_ps);
  ASSERT_EQ(w.constants.size(), 4u);
  for (Player i = 0; i < 4; ++i) {
    const Coalition rest = e3.grand().without(i);
    for (Coalition::Mask m = 0; m <= rest.mask(); ++m) {
      const Coalition s(m);
      if (!s.subset_of(rest)) continue;
      const Coalition other = rest - s;
      const Rational sum = e3.value(s.with(i)) - e3.value(s) + e3.value(other.with(i)) - e3.value(other);
      EXPECT_EQ(sum, w.constants[i]);
    }
  }
  const PSWitness no = is_ps_game(GameTable(builtin_instance("example4")));
  EXPECT_FALSE(no.is_ps);
  EXPECT_TRUE(no.counterexample);
  EXPECT_TRUE(is_ps_game(GameTable(test::single_period({4}))).is_ps);
}

TEST(SolomonicConditions, Examples) {
  const SolomonicConditions e3 = check_solomonic_conditions(GameTable(builtin_instance("example3")));
  EXPECT_TRUE(e3.holds);
  for (std::size_t t = 0; t < 4; ++t) {
    EXPECT_TRUE(e3.single_essential[t]);
    EXPECT_TRUE(e3.essential_price[t]);
    EXPECT_TRUE(e3.outsider_price[t]);
  }
  const SolomonicConditions e4 = check_solomonic_conditions(GameTable(builtin_instance("example4")));
  EXPECT_FALSE(e4.holds);
  EXPECT_FALSE(e4.outsider_price[0]);
  EXPECT_TRUE(check_solomonic_conditions(GameTable(test::clones(3))).holds);
}

TEST(Axioms, Example1Omega) {
  const GameTable g(builtin_instance("example1"));
  const AxiomReport r = check_axioms(g, alloc({11, 34, 19}));
  EXPECT_TRUE(r.efficiency);
  EXPECT_TRUE(r.nonemptiness);
  EXPECT_TRUE(r.inessential_bounded_cost);
  EXPECT_EQ(r.tyranny, Applicability::holds);
  EXPECT_TRUE(r.omega_additive);
  EXPECT_TRUE(r.allocation_matches_omega_decomposition);
  ASSERT_EQ(r.ibc_bounds.size(), 3u);
  EXPECT_FALSE(r.ibc_bounds[0]);
  EXPECT_TRUE(r.ibc_bounds[1]);
}

TEST(Axioms, Example1OwenFailsTyranny) {
  const GameTable g(builtin_instance("example1"));
  const AxiomReport r = check_axioms(g, alloc({25, 26, 13}));
  EXPECT_TRUE(r.efficiency);
  EXPECT_TRUE(r.inessential_bounded_cost);
  EXPECT_EQ(r.tyranny, Applicability::fails);
  EXPECT_FALSE(r.allocation_matches_omega_decomposition);
}

TEST(Axioms, TyrannyNotApplicable) {
  const GameTable g(builtin_instance("example3"));
  EXPECT_EQ(check_axioms(g, omega_point(g).omega).tyranny, Applicability::not_applicable);
  const GameTable e1(builtin_instance("example1"));
  EXPECT_FALSE(check_axioms(e1, alloc({1, 1, 1})).efficiency);
  EXPECT_THROW(check_axioms(e1, alloc({1, 1})), ValidationError);
}

TEST(Coincidence, Examples) {
  const CoincidenceReport e3 = coincidence_report(GameTable(builtin_instance("example3")));
  EXPECT_TRUE(e3.all_coincide);
  EXPECT_TRUE(e3.conditions.holds);
  EXPECT_TRUE(e3.ps.is_ps);
  EXPECT_TRUE(e3.conditions_consistent);
  const CoincidenceReport e4 = coincidence_report(GameTable(builtin_instance("example4")));
  EXPECT_FALSE(e4.solomonic_equals_shapley);
  EXPECT_FALSE(e4.shapley_equals_nucleolus);
  EXPECT_FALSE(e4.conditions.holds);
  EXPECT_TRUE(e4.concavity.concave);
  const GameTable same(test::clones(3));
  const CoincidenceReport c = coincidence_report(same);
  EXPECT_TRUE(c.all_coincide);
  EXPECT_EQ(c.shapley, owen_point(same));
}

TEST(Soundness, PropertiesOverInstances) {
  for (const char* name : kInstances) {
    const GameTable g(builtin_instance(name));
    const Allocation phi = shapley(g);
    const Allocation eta = nucleolus(g);
    if (is_ps_game(g).is_ps) {
      EXPECT_EQ(phi, eta) << name;
    }
    if (check_solomonic_conditions(g).holds) {
      EXPECT_EQ(solomonic(g), phi) << name;
      EXPECT_EQ(phi, eta) << name;
      EXPECT_TRUE(is_concave(g).concave) << name;
    }
  }
}

}  // namespace
}  // namespace pigame
