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

#include "pigame/errors.hpp"
#include "pigame/instance.hpp"
#include "pigame/instance_io.hpp"
#include "test_util.hpp"

namespace pigame {
namespace {

using test::q;

TEST(PIInstance, RejectsInvalidData) {
  EXPECT_THROW(PIInstance({}, {}, {}, {}), ValidationError);
  EXPECT_THROW(PIInstance({{-1}}, {{1}}, {{}}, {{}}), ValidationError);
  EXPECT_THROW(PIInstance({{1}}, {{-1}}, {{}}, {{}}), ValidationError);
  EXPECT_THROW(PIInstance({{1, 1}}, {{1}}, {{1}}, {{1}}), ValidationError);
  EXPECT_THROW(PIInstance({{1, 1}}, {{1, 1}}, {{-1}}, {{1}}), ValidationError);
  EXPECT_THROW(PIInstance({{1, 1}, {1}}, {{1, 1}, {1, 1}}, {{1}, {1}}, {{1}, {1}}), ValidationError);
  EXPECT_THROW(PIInstance({{1, 1, 1}}, {{1, 1, 1}}, {{1}}, {{1, 1}}), ValidationError);
}

TEST(PIInstance, TrimsTrailingHoldingColumn) {
  const PIInstance a({{1, 2}}, {{1, 1}}, {{3, 9}}, {{4}});
  EXPECT_EQ(a.holding_matrix(), (RationalMatrix{{3}}));
  EXPECT_EQ(a.warnings().size(), 1u);
  const PIInstance b({{1, 2}}, {{1, 1}}, {{3}}, {{4}});
  EXPECT_TRUE(b.warnings().empty());
  EXPECT_EQ(a, b);
}

TEST(CoalitionParams, Example1) {
  const PIInstance inst = builtin_instance("example1");
  const CoalitionParams all = coalition_params(inst, Coalition::grand(3), 0);
  EXPECT_EQ(all.production, 1);
  EXPECT_EQ(all.holding, q(1));
  EXPECT_EQ(all.backlog, q(1));
  EXPECT_EQ(all.demand, 24);
  const CoalitionParams pair = coalition_params(inst, Coalition::of({1, 2}), 0);
  EXPECT_EQ(pair.production, 2);
  EXPECT_EQ(pair.demand, 14);
  const CoalitionParams last = coalition_params(inst, Coalition::of({2}), 2);
  EXPECT_EQ(last.production, 1);
  EXPECT_FALSE(last.holding);
  EXPECT_FALSE(last.backlog);
}

TEST(CoalitionParams, SingletonIsOwnRow) {
  const PIInstance inst = builtin_instance("example4");
  for (Player i = 0; i < 3; ++i) {
    for (std::size_t t = 0; t < 3; ++t) {
      const CoalitionParams c = coalition_params(inst, Coalition::singleton(i), t);
      EXPECT_EQ(c.production, inst.production(i, t));
      EXPECT_EQ(c.demand, inst.demand(i, t));
    }
  }
}

TEST(CoalitionParams, RejectsEmptyAndOutOfRange) {
  const PIInstance inst = builtin_instance("example1");
  EXPECT_THROW(coalition_params(inst, Coalition(), 0), ValidationError);
  EXPECT_THROW(coalition_params(inst, Coalition::of({0}), 3), ValidationError);
  EXPECT_THROW(dual_prices(inst, Coalition()), ValidationError);
}

TEST(DualPrices, Example1) {
  const PIInstance inst = builtin_instance("example1");
  EXPECT_EQ(dual_prices(inst, Coalition::grand(3)).prices, (RationalVector{1, 1, 1}));
  EXPECT_EQ(dual_prices(inst, Coalition::of({1, 2})).prices, (RationalVector{2, 1, 1}));
}

TEST(DualPrices, SinglePeriod) {
  const PIInstance inst = test::single_period({q(7, 2), 5});
  EXPECT_EQ(dual_prices(inst, Coalition::of({0})).prices, (RationalVector{q(7, 2)}));
}

TEST(DualPrices, Example4PlayerTwo) {
  const PIInstance inst = builtin_instance("example4");
  EXPECT_EQ(dual_prices(inst, Coalition::of({1})).prices, (RationalVector{2, 1, 2}));
}

TEST(DualPrices, BoundsAndMonotonicity) {
  for (const char* name : {"example1", "example3", "example4"}) {
    const PIInstance inst = builtin_instance(name);
    const Coalition::Mask full = Coalition::grand(inst.players()).mask();
    for (Coalition::Mask big = 1; big <= full; ++big) {
      const DualPriceVector yb = dual_prices(inst, Coalition(big));
      for (std::size_t t = 0; t < inst.periods(); ++t) {
        EXPECT_GE(yb[t], 0);
        EXPECT_LE(yb[t], coalition_params(inst, Coalition(big), t).production);
      }
      for (Coalition::Mask small = big; small != 0; small = (small - 1) & big) {
        const DualPriceVector ys = dual_prices(inst, Coalition(small));
        for (std::size_t t = 0; t < inst.periods(); ++t) EXPECT_GE(ys[t], yb[t]) << name;
      }
    }
  }
}

TEST(PerPeriod, DemandDecomposition) {
  const PIInstance inst = builtin_instance("example1");
  DemandMatrix sum(3, std::vector<Demand>(3));
  for (std::size_t t = 0; t < 3; ++t) {
    const PIInstance part = per_period_instance(inst, t);
    for (Player i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) {
        if (k != t) {
          EXPECT_EQ(part.demand(i, k), 0);
        }
        sum[i][k] += part.demand(i, k);
      }
    }
    EXPECT_EQ(part.production_matrix(), inst.production_matrix());
  }
  EXPECT_EQ(sum, inst.demand_matrix());
  EXPECT_THROW(per_period_instance(inst, 3), ValidationError);
}

}  // namespace
}  // namespace pigame
