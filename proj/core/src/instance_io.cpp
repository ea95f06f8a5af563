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

#include "pigame/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "pigame/errors.hpp"

namespace pigame {
namespace {

using nlohmann::json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string field(std::string_view name, std::size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

std::string field(std::string_view name, std::size_t i, std::size_t j) {
  return field(name, i) + "[" + std::to_string(j) + "]";
}

const json& require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ValidationError(std::string("missing required field '") + key + "'");
  return *it;
}

std::size_t read_count(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ValidationError(std::string(key) + ": expected a positive integer");
  }
  return v.get<std::size_t>();
}

const json& require_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ValidationError(where + ": expected an array");
  return v;
}

DemandMatrix read_demand(const json& doc) {
  const json& rows = require_array(require(doc, "demand"), "demand");
  DemandMatrix out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = require_array(rows[i], field("demand", i));
    std::vector<Demand> values;
    for (std::size_t t = 0; t < row.size(); ++t) {
      const json& v = row[t];
      if (!v.is_number_integer()) {
        throw ValidationError(field("demand", i, t) + ": expected a non-negative integer");
      }
      const auto d = v.get<long long>();
      if (d < 0 || (v.is_number_unsigned() && v.get<unsigned long long>() > 1ULL << 62)) {
        throw ValidationError(field("demand", i, t) + ": expected a non-negative integer");
      }
      values.push_back(d);
    }
    out.push_back(std::move(values));
  }
  return out;
}

RationalMatrix read_costs(const json& doc, const char* key) {
  const json& rows = require_array(require(doc, key), key);
  RationalMatrix out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = require_array(rows[i], field(key, i));
    RationalVector values;
    for (std::size_t t = 0; t < row.size(); ++t) {
      const json& v = row[t];
      const std::string where = field(key, i, t);
      if (v.is_number_integer()) {
        values.emplace_back(v.get<long long>());
      } else if (v.is_string()) {
        try {
          values.push_back(parse_canonical_rational(v.get<std::string>()));
        } catch (const ValidationError& e) {
          throw ValidationError(where + ": " + e.what());
        }
      } else {
        throw ValidationError(where + ": expected an integer or a \"p/q\" string");
      }
    }
    out.push_back(std::move(values));
  }
  return out;
}

std::optional<std::string> optional_string(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw ValidationError(std::string(key) + ": expected a string");
  return it->get<std::string>();
}

nlohmann::ordered_json rational_cell(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1 &&
      boost::multiprecision::abs(boost::multiprecision::numerator(r)) < BigInt(1LL << 53)) {
    return boost::multiprecision::numerator(r).convert_to<long long>();
  }
  return to_string(r);
}

}  // namespace

InstanceFile parse_instance_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError("instance JSON syntax error at " + position(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw ValidationError("instance JSON must be an object");

  const std::size_t players = read_count(doc, "players");
  const std::size_t periods = read_count(doc, "periods");
  DemandMatrix demand = read_demand(doc);
  if (demand.size() != players) {
    throw ValidationError("demand: expected " + std::to_string(players) + " rows (players), got " +
                          std::to_string(demand.size()));
  }
  for (std::size_t i = 0; i < demand.size(); ++i) {
    if (demand[i].size() != periods) {
      throw ValidationError(field("demand", i) + ": expected " + std::to_string(periods) +
                            " entries (periods), got " + std::to_string(demand[i].size()));
    }
  }
  InstanceFile file{PIInstance(std::move(demand), read_costs(doc, "production"), read_costs(doc, "holding"),
                               read_costs(doc, "backlog")),
                    optional_string(doc, "name"), optional_string(doc, "notes")};
  return file;
}

InstanceFile load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_json(buffer.str());
}

nlohmann::ordered_json instance_to_json(const PIInstance& inst, const std::optional<std::string>& name,
                                        const std::optional<std::string>& notes) {
  nlohmann::ordered_json out;
  if (name) out["name"] = *name;
  if (notes) out["notes"] = *notes;
  out["players"] = inst.players();
  out["periods"] = inst.periods();
  out["demand"] = inst.demand_matrix();
  auto matrix = [](const RationalMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : m) {
      nlohmann::ordered_json cells = nlohmann::ordered_json::array();
      for (const auto& v : row) cells.push_back(rational_cell(v));
      rows.push_back(std::move(cells));
    }
    return rows;
  };
  out["production"] = matrix(inst.production_matrix());
  out["holding"] = matrix(inst.holding_matrix());
  out["backlog"] = matrix(inst.backlog_matrix());
  return out;
}

std::vector<std::string> builtin_names() {
  return {"example1", "example3", "example4", "expfamily:<n>"};
}

namespace {

RationalMatrix costs(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix out;
  for (const auto& row : rows) {
    RationalVector r;
    for (const int v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

// Three players, three periods; player 1 is the only essential player.
PIInstance example1() {
  return PIInstance({{10, 10, 5}, {8, 12, 6}, {6, 5, 2}},
                    costs({{1, 2, 1}, {2, 1, 1}, {3, 1, 1}}),
                    costs({{1, 1}, {1, 1}, {1, 1}}),
                    costs({{1, 1}, {1, 1}, {2, 2}}));
}

// Four players, four periods; player k is essential in period k only.
PIInstance example3() {
  return PIInstance({{2, 1, 2, 2}, {2, 2, 1, 2}, {2, 1, 2, 2}, {2, 1, 1, 2}},
                    costs({{1, 2, 2, 2}, {2, 1, 2, 2}, {2, 2, 1, 2}, {2, 2, 2, 1}}),
                    costs({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}}),
                    costs({{2, 2, 2}, {2, 2, 2}, {2, 2, 2}, {2, 2, 2}}));
}

// Concave game where the Solomonic allocation, Shapley value and nucleolus
// differ. Player 1 demands 5 units in period 3 and player 2 holds at cost 1
// in both transitions, which yields the table 45, 50, 70, 70, 75, 80, 85.
PIInstance example4() {
  return PIInstance({{10, 10, 5}, {10, 10, 10}, {10, 10, 10}},
                    costs({{1, 2, 3}, {2, 1, 3}, {3, 3, 1}}),
                    costs({{1, 2}, {1, 1}, {1, 2}}),
                    costs({{1, 1}, {1, 1}, {2, 2}}));
}

// n players, n periods, unit demand everywhere. Player 1 produces at 1/n,
// everyone else at 1; holding and backlog cost 2. The core has exponentially
// many vertices.
PIInstance exponential_family(std::size_t n) {
  DemandMatrix demand(n, std::vector<Demand>(n, 1));
  RationalMatrix production(n, RationalVector(n, Rational(1)));
  production[0].assign(n, Rational(1, static_cast<long>(n)));
  RationalMatrix carry(n, RationalVector(n - 1, Rational(2)));
  return PIInstance(std::move(demand), std::move(production), carry, carry);
}

}  // namespace

PIInstance builtin_instance(std::string_view name) {
  if (name == "example1") return example1();
  if (name == "example3") return example3();
  if (name == "example4") return example4();
  constexpr std::string_view prefix = "expfamily:";
  if (name.starts_with(prefix)) {
    const std::string_view digits = name.substr(prefix.size());
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || end != digits.data() + digits.size() || n < 2 || n > 8) {
      throw ValidationError("expfamily requires an integer size between 2 and 8, got '" +
                            std::string(digits) + "'");
    }
    return exponential_family(n);
  }
  throw ValidationError("unknown builtin instance '" + std::string(name) +
                        "' (known: example1, example3, example4, expfamily:<n>)");
}

}  // namespace pigame
