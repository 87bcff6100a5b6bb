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

#ifndef FDISTILL_TOOLS_COMMANDS_HPP
#define FDISTILL_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdistill::cli {

/// Bad flag values or combinations; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n_lo = 0;
  int n_hi = 0;
  std::string eps_spec;  // "start:stop:count[:log|lin]", empty = command default
  std::uint64_t seed = 12345;
  unsigned jobs = 1;
  std::string format = "csv";  // csv | json
  std::string out;             // output file; empty = derived from command
  std::string plot;            // optional SVG path
  int samples = 1000;          // haar
  std::optional<double> p_ratio;  // qec
  bool fit = false;            // herald-prob, loss

  /// Canonical semantic description: everything that determines file
  /// content (not jobs, not paths).
  std::string canonical() const;

  /// Output path after applying defaults and FDISTILL_OUT_DIR.
  std::string resolved_out() const;
};

/// Parses "5" or "3..10".
void parse_range(const std::string& text, int& lo, int& hi);

/// Parses "start:stop:count[:log|lin]" (default log).
std::vector<double> parse_eps_grid(const std::string& spec);

/// Executes the configured command, writing the table (and optional plot).
/// Returns the path written.
std::string run_command(const RunConfig& config);

}  // namespace fdistill::cli

#endif  // FDISTILL_TOOLS_COMMANDS_HPP
