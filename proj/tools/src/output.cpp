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

#include "output.hpp"

#include <fstream>
#include <stdexcept>

#include "fdistill/version.hpp"

namespace fdistill::cli {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string csv_cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();  // shortest round-trip representation for numbers
}

std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace

std::string render_csv(const Table& table, const std::string& config_canonical,
                       std::uint64_t seed) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_cell(row[c]);
    }
    out += '\n';
  }
  out += "#version=";
  out += kVersion;
  out += "\n#seed=" + std::to_string(seed);
  out += "\n#config-hash=" + hash_hex(fnv1a(config_canonical)) + "\n";
  for (const auto& [key, value] : table.meta) out += "#" + key + "=" + value + "\n";
  return out;
}

std::string render_json(const Table& table, const std::string& config_canonical,
                        std::uint64_t seed) {
  nlohmann::ordered_json doc;
  doc["meta"]["version"] = kVersion;
  doc["meta"]["seed"] = seed;
  doc["meta"]["config_hash"] = hash_hex(fnv1a(config_canonical));
  doc["meta"]["config"] = config_canonical;
  for (const auto& [key, value] : table.meta) doc["meta"][key] = value;
  doc["columns"] = table.columns;
  doc["rows"] = table.rows;
  return doc.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace fdistill::cli
