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

#ifndef PIGAME_RATIONAL_HPP
#define PIGAME_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pigame {

/// Arbitrary-precision rational. Always stored in canonical form
/// (positive denominator, coprime numerator and denominator).
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Parses "p", "-p", "+p" or "p/q" (q > 0). Whitespace is not allowed.
/// Throws ValidationError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Like parse_rational, but also rejects fractions not in lowest terms
/// (e.g. "2/4") and a redundant "/1".
Rational parse_canonical_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Parses a comma-separated list such as "25, 26, 13/2".
RationalVector parse_rational_list(std::string_view text);

}  // namespace pigame

#endif  // PIGAME_RATIONAL_HPP
