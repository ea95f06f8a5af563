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

#include "pigame/rational.hpp"

#include <algorithm>
#include <cctype>

#include "pigame/errors.hpp"

namespace pigame {
namespace {

bool is_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

struct Parts {
  bool negative = false;
  std::string_view numerator;
  std::string_view denominator;  // empty when absent
};

Parts split(std::string_view text) {
  Parts parts;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    parts.negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  parts.numerator = body.substr(0, slash);
  if (slash != std::string_view::npos) {
    parts.denominator = body.substr(slash + 1);
    if (!is_digits(parts.denominator)) {
      throw ValidationError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!is_digits(parts.numerator)) {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  return parts;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const Parts parts = split(text);
  BigInt num(std::string(parts.numerator));
  BigInt den(1);
  if (!parts.denominator.empty()) {
    den = BigInt(std::string(parts.denominator));
    if (den == 0) {
      throw ValidationError("zero denominator in '" + std::string(text) + "'");
    }
  }
  if (parts.negative) num = -num;
  return Rational(num, den);
}

Rational parse_canonical_rational(std::string_view text) {
  const Rational value = parse_rational(text);
  const Parts parts = split(text);
  if (!parts.denominator.empty()) {
    const BigInt num(std::string(parts.numerator));
    const BigInt den(std::string(parts.denominator));
    if (den == 1 || boost::multiprecision::gcd(num, den) != 1) {
      throw ValidationError("rational '" + std::string(text) + "' is not in lowest terms");
    }
  }
  return value;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    out.push_back(parse_rational(item));
    pos = comma + 1;
  }
  return out;
}

}  // namespace pigame
