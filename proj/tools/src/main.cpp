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

#include <CLI11.hpp>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <string>

#include "commands.hpp"
#include "fdistill/errors.hpp"
#include "fdistill/version.hpp"

namespace {

void print_error(const std::string& type, const std::string& message) {
  nlohmann::ordered_json doc;
  doc["error"]["type"] = type;
  doc["error"]["message"] = message;
  std::fprintf(stderr, "%s\n", doc.dump().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  using fdistill::cli::RunConfig;
  CLI::App app{"Simulation and analysis of Fourier-interference photon distillation schemes"};
  app.set_version_flag("--version", fdistill::kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string n_text;

  const std::map<std::string, std::pair<std::string, std::string>> commands = {
      {"scan", {"5", "Herald-resolved q(eps) and eps'(eps) curves"}},
      {"conjecture", {"3..10", "Coefficient-identity summary per photon count"}},
      {"herald-prob", {"3..1000", "Closed-form herald probability, optional power-law fit"}},
      {"gamma", {"3..100", "Resource scaling exponent and its bound"}},
      {"qec", {"2..100", "Distillation vs error-correction cost boundary"}},
      {"validity", {"2..10", "Multi-error probability ratio delta_N/eps"}},
      {"loss", {"3..10", "Measurement vs erasure trade-off of lossy gates"}},
      {"haar", {"5", "Coefficient-ratio histogram over Haar-random circuits"}},
  };

  for (const auto& [name, info] : commands) {
    CLI::App* sub = app.add_subcommand(name, info.second);
    sub->add_option("--n", n_text, "photon count or range lo..hi (default " + info.first + ")");
    sub->add_option("--eps", cfg.eps_spec, "epsilon grid start:stop:count[:log|lin]");
    sub->add_option("--seed", cfg.seed, "random seed for sampled quantities");
    sub->add_option("--jobs", cfg.jobs, "worker threads (results are identical for any value)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "output file (default derived, in $FDISTILL_OUT_DIR)");
    sub->add_option("--plot", cfg.plot, "also write an SVG plot to this path");
    if (name == "haar")
      sub->add_option("--samples", cfg.samples, "Haar samples per N")->check(CLI::PositiveNumber);
    if (name == "qec")
      sub->add_option("--p-ratio", cfg.p_ratio, "evaluate the cost ratio at this p_error/p_th");
    if (name == "herald-prob" || name == "loss")
      sub->add_flag("--fit", cfg.fit, "append power-law fit results to the metadata");
    sub->callback([&cfg, &n_text, name = name, def = info.first] {
      cfg.command = name;
      fdistill::cli::parse_range(n_text.empty() ? def : n_text, cfg.n_lo, cfg.n_hi);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  } catch (const fdistill::cli::UsageError& e) {
    print_error("usage", e.what());
    return 2;
  }

  try {
    const std::string path = fdistill::cli::run_command(cfg);
    std::printf("%s\n", path.c_str());
    return 0;
  } catch (const fdistill::cli::UsageError& e) {
    print_error("usage", e.what());
    return 2;
  } catch (const fdistill::SizeLimitError& e) {
    print_error("size-limit", e.what());
    return 3;
  } catch (const fdistill::DomainError& e) {
    print_error("domain", e.what());
    return 1;
  } catch (const fdistill::DimensionError& e) {
    print_error("dimension", e.what());
    return 1;
  } catch (const fdistill::ConditioningError& e) {
    print_error("conditioning", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
}
