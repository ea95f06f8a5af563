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
#include "pigame/rational.hpp"
#include "test_util.hpp"

namespace pigame {
namespace {

using test::q;

TEST(Rational, CanonicalAfterArithmetic) {
  const Rational a = q(2, 4);
  EXPECT_EQ(a, q(1, 2));
  EXPECT_EQ(boost::multiprecision::numerator(a), 1);
  EXPECT_EQ(boost::multiprecision::denominator(a), 2);
  const Rational b = q(-3, 6) + q(1, 3);
  EXPECT_EQ(b, q(-1, 6));
  EXPECT_GT(boost::multiprecision::denominator(b), 0);
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), q(7));
  EXPECT_EQ(parse_rational("-7"), q(-7));
  EXPECT_EQ(parse_rational("+3/4"), q(3, 4));
  EXPECT_EQ(parse_rational("-125/6"), q(-125, 6));
  EXPECT_EQ(parse_rational("2/4"), q(1, 2));
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", " 1", "1/0", "1/-2", "abc", "1.5", "1/", "/2", "1//2", "--1", "1e3"}) {
    EXPECT_THROW(parse_rational(bad), ValidationError) << bad;
  }
}

TEST(Rational, CanonicalParseRejectsUnreducedForms) {
  EXPECT_EQ(parse_canonical_rational("3/4"), q(3, 4));
  EXPECT_THROW(parse_canonical_rational("2/4"), ValidationError);
  EXPECT_THROW(parse_canonical_rational("3/1"), ValidationError);
}

TEST(Rational, ToStringRoundTrips) {
  EXPECT_EQ(to_string(q(5)), "5");
  EXPECT_EQ(to_string(q(-70, 3)), "-70/3");
  for (const Rational& r : {q(0), q(1, 2), q(-125, 6), q(1000000007, 3)}) {
    EXPECT_EQ(parse_canonical_rational(to_string(r)), r);
  }
}

TEST(Rational, ListParsing) {
  const RationalVector v = parse_rational_list("64, 0,-1/2");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[2], q(-1, 2));
  EXPECT_THROW(parse_rational_list("1,,2"), ValidationError);
  EXPECT_THROW(parse_rational_list(""), ValidationError);
}

}  // namespace
}  // namespace pigame
