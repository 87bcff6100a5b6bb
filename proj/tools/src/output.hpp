// Copyright 2026 The fdistill authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FDISTILL_TOOLS_OUTPUT_HPP
#define FDISTILL_TOOLS_OUTPUT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fdistill::cli {

/// Column-oriented result table rendered to CSV or JSON. Cells are JSON
/// values; null renders as an empty CSV cell (undefined conditionals).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  std::vector<std::pair<std::string, std::string>> meta;  // extra trailing metadata
};

/// FNV-1a over the canonical configuration string.
std::uint64_t fnv1a(const std::string& text);

std::string render_csv(const Table& table, const std::string& config_canonical,
                       std::uint64_t seed);
std::string render_json(const Table& table, const std::string& config_canonical,
                        std::uint64_t seed);

void write_file(const std::string& path, const std::string& content);

}  // namespace fdistill::cli

#endif  // FDISTILL_TOOLS_OUTPUT_HPP
