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
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pigame/core_geometry.hpp"
#include "pigame/errors.hpp"
#include "pigame/instance_io.hpp"
#include "pigame/lp.hpp"
#include "test_util.hpp"

namespace pigame {
namespace {

using test::alloc;
using test::q;

TEST(CoreMembership, Example1) {
  const GameTable g(builtin_instance("example1"));
  EXPECT_TRUE(is_core_member(g, alloc({25, 26, 13})).member);
  const CoreCheck bad = is_core_member(g, alloc({64, 0, 0}));
  EXPECT_FALSE(bad.member);
  EXPECT_EQ(bad.violation, Coalition::of({0}));
  const CoreCheck inefficient = is_core_member(g, alloc({1, 1, 1}));
  EXPECT_FALSE(inefficient.member);
  EXPECT_EQ(inefficient.violation, g.grand());
  EXPECT_THROW(is_core_member(g, alloc({1, 1})), ValidationError);
}

TEST(EssentialPlayers, Examples) {
  const GameTable e1(builtin_instance("example1"));
  const EssentialPlayers a = essential_players(e1);
  EXPECT_EQ(a.all, Coalition::of({0}));
  EXPECT_EQ(a.per_period, (std::vector<Coalition>{Coalition::of({0}), Coalition(), Coalition()}));
  const GameTable e3(builtin_instance("example3"));
  EXPECT_EQ(essential_players(e3).all, Coalition::grand(4));
  const GameTable same(test::clones(4));
  EXPECT_TRUE(essential_players(same).all.empty());
  EXPECT_TRUE(pair_set(same).empty());
  const GameTable one(test::single_period({3}));
  EXPECT_TRUE(essential_players(one).all.empty());
}

TEST(FanSet, Examples) {
  const GameTable e1(builtin_instance("example1"));
  EXPECT_EQ(fan_set(e1, 0).all, Coalition::of({1, 2}));
  EXPECT_THROW(fan_set(e1, 1), ValidationError);
  const GameTable e3(builtin_instance("example3"));
  EXPECT_EQ(fan_set(e3, 0).per_period[0], Coalition::of({1, 2, 3}));
  const GameTable exp(builtin_instance("expfamily:5"));
  EXPECT_EQ(fan_set(exp, 0).all, Coalition::of({1, 2, 3, 4}));
}

TEST(PairSet, OrderedPairs) {
  const GameTable e1(builtin_instance("example1"));
  EXPECT_EQ(pair_set(e1), (std::vector<EssentialFanPair>{{0, 1}, {0, 2}}));
  const auto pairs = pair_set(GameTable(builtin_instance("example3")));
  EXPECT_EQ(pairs.size(), 12u);
  EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
  for (const auto& p : pairs) EXPECT_NE(p.essential, p.fan);
}

TEST(TransferredCost, Example1) {
  const GameTable g(builtin_instance("example1"));
  const Allocation o = owen_point(g);
  const TransferResult a13 = transferred_cost(g, {0, 2}, o);
  EXPECT_EQ(a13.alpha, 12);
  EXPECT_EQ(a13.witness, Coalition::of({2}));
  const TransferResult a12 = transferred_cost(g, {0, 1}, o);
  EXPECT_EQ(a12.alpha, 8);
  EXPECT_EQ(a12.witness, Coalition::of({1}));
}

TEST(TransferredCost, WitnessIsMinimalAndInDelta) {
  for (const char* name : {"example1", "example3", "example4"}) {
    const GameTable g(builtin_instance(name));
    const Allocation o = owen_point(g);
    for (const auto& p : pair_set(g)) {
      const TransferResult r = transferred_cost(g, p, o);
      EXPECT_FALSE(r.witness.contains(p.essential));
      EXPECT_TRUE(r.witness.contains(p.fan));
      EXPECT_EQ(r.alpha, g.value(r.witness) - o.sum(r.witness));
      EXPECT_GT(r.alpha, 0);
      for (Coalition::Mask m = 1; m <= g.grand().mask(); ++m) {
        const Coalition s(m);
        if (s.contains(p.essential) || !s.contains(p.fan)) continue;
        EXPECT_GE(g.value(s) - o.sum(s), r.alpha);
      }
    }
  }
}

TEST(TransferredCost, ExponentialFamily) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const GameTable g(builtin_instance("expfamily:" + std::to_string(n)));
    for (const auto& p : pair_set(g)) {
      EXPECT_EQ(transferred_cost(g, p, owen_point(g)).alpha, Rational(static_cast<long>(n) - 1));
    }
  }
}

TEST(ExtremeFunction, Example1) {
  const GameTable g(builtin_instance("example1"));
  const Allocation o = owen_point(g);
  EXPECT_EQ(extreme_function(g, {0, 1}, o), alloc({17, 34, 13}));
  EXPECT_EQ(extreme_function(g, {0, 2}, o), alloc({13, 26, 25}));
}

TEST(ExtremeFunction, FixedPointLaw) {
  for (const char* name : {"example1", "example3", "example4", "expfamily:4"}) {
    const GameTable g(builtin_instance(name));
    const Allocation o = owen_point(g);
    for (const auto& p : pair_set(g)) {
      const Allocation once = extreme_function(g, p, o);
      EXPECT_EQ(transferred_cost(g, p, once).alpha, 0);
      EXPECT_EQ(extreme_function(g, p, once), once);
      EXPECT_EQ(once.total(), g.value(g.grand()));
    }
  }
}

TEST(CompositeWalk, Example1) {
  const GameTable g(builtin_instance("example1"));
  const Allocation o = owen_point(g);
  const std::vector<EssentialFanPair> sigma{{0, 1}, {0, 2}};
  EXPECT_EQ(composite_walk(g, sigma, o), alloc({11, 34, 19}));
  const std::vector<EssentialFanPair> repeated{{0, 1}, {0, 1}};
  EXPECT_EQ(composite_walk(g, repeated, o), extreme_function(g, {0, 1}, o));
  const std::vector<EssentialFanPair> short_sigma{{0, 1}};
  EXPECT_THROW(composite_walk(g, short_sigma, o), ValidationError);
}

TEST(CompositeWalk, ExponentialFamily) {
  const GameTable g(builtin_instance("expfamily:3"));
  const std::vector<EssentialFanPair> sigma{{0, 1}, {0, 2}};
  EXPECT_EQ(composite_walk(g, sigma, owen_point(g)), alloc({-3, 3, 3}));
}

TEST(GenerateExtremes, Example1) {
  const GameTable g(builtin_instance("example1"));
  const WalkEnumeration w = generate_extremes_from_owen(g);
  EXPECT_FALSE(w.truncated);
  const VertexSet expected{alloc({25, 26, 13}), alloc({17, 34, 13}), alloc({13, 26, 25}), alloc({11, 34, 19}),
                           alloc({11, 28, 25})};
  EXPECT_EQ(w.points, expected);
  EXPECT_EQ(enumerate_core_vertices(g), expected);
}

TEST(GenerateExtremes, ExponentialFamilyAndEmptyPairs) {
  const GameTable g(builtin_instance("expfamily:3"));
  const VertexSet expected{alloc({1, 1, 1}), alloc({-1, 3, 1}), alloc({-1, 1, 3}), alloc({-3, 3, 3})};
  EXPECT_EQ(generate_extremes_from_owen(g).points, expected);
  const GameTable same(test::clones(3));
  EXPECT_EQ(generate_extremes_from_owen(same).points, VertexSet{owen_point(same)});
}

TEST(GenerateExtremes, BudgetTruncates) {
  const GameTable g(builtin_instance("example3"));
  const WalkEnumeration w = generate_extremes_from_owen(g, 5);
  EXPECT_TRUE(w.truncated);
  EXPECT_LE(w.steps, 5u);
  for (const auto& x : w.points) EXPECT_TRUE(is_core_member(g, x).member);
}

TEST(GenerateExtremes, SingleEssentialInclusion) {
  for (const char* name : {"example1", "expfamily:2", "expfamily:3", "expfamily:4", "expfamily:5"}) {
    const GameTable g(builtin_instance(name));
    ASSERT_EQ(essential_players(g).all.size(), 1u);
    const VertexSet vertices = enumerate_core_vertices(g);
    EXPECT_TRUE(vertices.contains(owen_point(g)));
    for (const auto& x : generate_extremes_from_owen(g).points) {
      EXPECT_TRUE(vertices.contains(x)) << name << " " << to_string(x);
      EXPECT_EQ(x.total(), g.value(g.grand()));
    }
  }
}

TEST(Vertices, SmallCases) {
  EXPECT_EQ(enumerate_core_vertices(GameTable(builtin_instance("expfamily:2"))),
            (VertexSet{alloc({1, 1}), alloc({0, 2})}));
  EXPECT_EQ(enumerate_core_vertices(GameTable(test::single_period({q(5, 2)}))), VertexSet{alloc({q(5, 2)})});
  EXPECT_THROW(enumerate_core_vertices(GameTable(builtin_instance("expfamily:7"))), CapExceeded);
  EXPECT_THROW(enumerate_core_vertices(GameTable(builtin_instance("example1")), 2), CapExceeded);
  EXPECT_EQ(enumerate_core_vertices(GameTable(builtin_instance("example1")), 3).size(), 5u);
}

TEST(Vertices, ExponentialCounts) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const GameTable g(builtin_instance("expfamily:" + std::to_string(n)));
    EXPECT_EQ(enumerate_core_vertices(g).size(), std::size_t{1} << (n - 1));
  }
}

TEST(Vertices, EachVertexHasFullRankTightSet) {
  for (const char* name : {"example1", "example3", "example4"}) {
    const GameTable g(builtin_instance(name));
    for (const auto& x : enumerate_core_vertices(g)) {
      EXPECT_TRUE(is_core_member(g, x).member);
      RationalMatrix tight;
      for (Coalition::Mask m = 1; m <= g.grand().mask(); ++m) {
        if (x.sum(Coalition(m)) != g.value(Coalition(m))) continue;
        RationalVector row(g.players());
        for (const auto i : Coalition(m).members()) row[i] = 1;
        tight.push_back(row);
      }
      EXPECT_EQ(matrix_rank(tight), g.players());
    }
  }
}

TEST(Boundary, Examples) {
  const GameTable g(builtin_instance("example1"));
  EXPECT_TRUE(is_boundary_point(g, alloc({17, 34, 13})));
  EXPECT_TRUE(is_boundary_point(g, alloc({25, 26, 13})));
  const GameTable two(builtin_instance("expfamily:2"));
  EXPECT_FALSE(is_boundary_point(two, alloc({q(1, 2), q(3, 2)})));
  EXPECT_THROW(is_boundary_point(g, alloc({64, 0, 0})), ValidationError);
}

TEST(Boundary, ExtremeImagesOfCorePoints) {
  const GameTable g(builtin_instance("example4"));
  const VertexSet vs = enumerate_core_vertices(g);
  const std::vector<Allocation> v(vs.begin(), vs.end());
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a; b < v.size(); ++b) {
      Allocation mid(3);
      for (std::size_t i = 0; i < 3; ++i) mid[i] = (v[a][i] + v[b][i]) / 2;
      for (const auto& p : pair_set(g)) {
        const Allocation y = extreme_function(g, p, mid);
        EXPECT_TRUE(is_core_member(g, y).member);
        EXPECT_TRUE(is_boundary_point(g, y));
      }
    }
  }
}

}  // namespace
}  // namespace pigame
