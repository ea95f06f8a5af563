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

#ifndef PIGAME_TEST_UTIL_HPP
#define PIGAME_TEST_UTIL_HPP

#include <initializer_list>
#include <vector>

#include "pigame/game.hpp"
#include "pigame/instance.hpp"
#include "pigame/rational.hpp"

namespace pigame::test {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline Allocation alloc(std::initializer_list<Rational> values) { return Allocation(values); }

// n players, one period each, with unit demand and the given production costs.
inline PIInstance single_period(const std::vector<Rational>& production) {
  DemandMatrix d;
  RationalMatrix p, h, b;
  for (const auto& c : production) {
    d.push_back({1});
    p.push_back({c});
    h.emplace_back();
    b.emplace_back();
  }
  return PIInstance(d, p, h, b);
}

// n identical players over two periods.
inline PIInstance clones(std::size_t n) {
  return PIInstance(DemandMatrix(n, std::vector<Demand>{1, 1}), RationalMatrix(n, RationalVector{1, 2}),
                    RationalMatrix(n, RationalVector{1}), RationalMatrix(n, RationalVector{1}));
}

}  // namespace pigame::test

#endif  // PIGAME_TEST_UTIL_HPP
