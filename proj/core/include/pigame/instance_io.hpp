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

#ifndef PIGAME_INSTANCE_IO_HPP
#define PIGAME_INSTANCE_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pigame/instance.hpp"

namespace pigame {

/// Instance file contents. JSON layout:
///
///   {
///     "name": "optional", "notes": "optional",
///     "players": 3, "periods": 3,
///     "demand":     [[10, 10, 5], ...],        // non-negative integers
///     "production": [[1, 2, 1], ...],          // integers or "p/q" strings
///     "holding":    [[1, 1], ...],             // T-1 (or T) columns
///     "backlog":    [[1, 1], ...]
///   }
struct InstanceFile {
  PIInstance instance;
  std::optional<std::string> name;
  std::optional<std::string> notes;
};

/// Throws ValidationError naming the offending field (e.g. "production[1][2]")
/// or, for syntax errors, the line and column.
InstanceFile parse_instance_json(std::string_view text);
InstanceFile load_instance_file(const std::filesystem::path& path);

nlohmann::ordered_json instance_to_json(const PIInstance& inst,
                                        const std::optional<std::string>& name = std::nullopt,
                                        const std::optional<std::string>& notes = std::nullopt);

/// "example1", "example3", "example4", or "expfamily:<n>" with 2 <= n <= 8.
std::vector<std::string> builtin_names();
PIInstance builtin_instance(std::string_view name);

}  // namespace pigame

#endif  // PIGAME_INSTANCE_IO_HPP
