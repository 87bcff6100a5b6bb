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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "fdistill/analysis.hpp"
#include "fdistill/distill.hpp"
#include "fdistill/unitary.hpp"
#include "output.hpp"
#include "svg.hpp"

namespace fdistill::cli {

namespace {

std::string format_range(int lo, int hi) {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

std::string ztl_name(ZtlClass c) {
  return c == ZtlClass::allowed ? "allowed" : "forbidden";
}

}  // namespace

void parse_range(const std::string& text, int& lo, int& hi) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("cannot parse --n value '" + text + "' (expected e.g. 5 or 3..10)");
  }
  if (lo > hi || lo < 1) throw UsageError("invalid --n range " + text);
}

std::vector<double> parse_eps_grid(const std::string& spec) {
  double lo = 0.0, hi = 0.0;
  int count = 0;
  bool log_scale = true;
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto next = spec.find(':', pos);
    parts.push_back(spec.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.size() < 3 || parts.size() > 4)
    throw UsageError("cannot parse --eps spec '" + spec + "' (expected start:stop:count[:log|lin])");
  try {
    lo = std::stod(parts[0]);
    hi = std::stod(parts[1]);
    count = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw UsageError("cannot parse --eps spec '" + spec + "'");
  }
  if (parts.size() == 4) {
    if (parts[3] == "lin") {
      log_scale = false;
    } else if (parts[3] == "log") {
      log_scale = true;
    } else {
      throw UsageError("eps scale must be 'log' or 'lin', got '" + parts[3] + "'");
    }
  }
  if (count < 1 || lo < 0.0 || hi >= 1.0 || lo > hi)
    throw UsageError("eps grid must satisfy 0 <= start <= stop < 1 and count >= 1");
  if (log_scale && lo <= 0.0) throw UsageError("log-spaced eps grid needs start > 0");

  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    grid[i] = log_scale ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
  }
  return grid;
}

std::string RunConfig::canonical() const {
  std::string s = "command=" + command;
  s += ";n=" + format_range(n_lo, n_hi);
  s += ";eps=" + (eps_spec.empty() ? std::string("default") : eps_spec);
  s += ";seed=" + std::to_string(seed);
  s += ";format=" + format;
  s += ";samples=" + std::to_string(samples);
  s += ";p_ratio=" + (p_ratio ? std::to_string(*p_ratio) : std::string("none"));
  s += ";fit=" + std::string(fit ? "1" : "0");
  return s;
}

std::string RunConfig::resolved_out() const {
  if (!out.empty()) return out;
  const char* dir = std::getenv("FDISTILL_OUT_DIR");
  std::string name = command;
  std::replace(name.begin(), name.end(), '-', '_');
  name += "_n" + std::to_string(n_lo);
  if (n_hi != n_lo) name += "-" + std::to_string(n_hi);
  name += format == "json" ? ".json" : ".csv";
  return (dir && *dir ? std::string(dir) + "/" : std::string()) + name;
}

namespace {

using nlohmann::json;

struct CommandOutput {
  Table table;
  PlotSpec plot;
  std::vector<Series> series;
};

CommandOutput cmd_scan(const RunConfig& cfg) {
  CommandOutput out;
  out.table.columns = {"N",   "herald",  "family_rep", "ztl_class",
                       "suppressed", "epsilon", "q",          "epsilon_prime"};
  out.plot = {"Distilled error vs input error", "epsilon", "epsilon_prime", true, true};

  ScanOptions options;
  options.jobs = cfg.jobs;
  if (!cfg.eps_spec.empty()) options.eps_grid = parse_eps_grid(cfg.eps_spec);
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    for (const HeraldReport& report : scan_heralds(n, options)) {
      const std::string herald = format_assignment(report.herald);
      const std::string family = format_assignment(report.family);
      Series series{std::to_string(n) + ": " + herald, {}};
      for (const CurvePoint& point : report.curve) {
        out.table.rows.push_back({n, herald, family, ztl_name(report.ztl), report.suppressed,
                                  point.eps, point.q,
                                  point.eps_prime ? json(*point.eps_prime) : json()});
        if (point.eps_prime && report.valid_for_distillation())
          series.points.emplace_back(point.eps, *point.eps_prime);
      }
      if (report.valid_for_distillation()) out.series.push_back(std::move(series));
    }
  }
  return out;
}

CommandOutput cmd_conjecture(const RunConfig& cfg) {
  CommandOutput out;
  out.table.columns = {"N", "n_allowed", "delta_max", "n_herald", "pct"};
  out.plot = {"Coefficient identity residual", "N", "delta_max", false, true};
  Series series{"delta_max", {}};
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const ConjectureRow row = check_conjecture(n, cfg.jobs);
    out.table.rows.push_back({row.n, row.n_allowed, row.delta_max, row.n_herald, row.pct});
    series.points.emplace_back(n, std::max(row.delta_max, 1e-18));
  }
  out.series.push_back(std::move(series));
  return out;
}

CommandOutput cmd_herald_prob(const RunConfig& cfg) {
  CommandOutput out;
  out.table.columns = {"N", "p", "p_minus_quarter"};
  out.plot = {"Herald probability", "N", "p", true, false};
  Series series{"p", {}};
  std::vector<double> ns, excess;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const double p = herald_probability_closed(n);
    out.table.rows.push_back({n, p, p - 0.25});
    series.points.emplace_back(n, p);
    if (n >= 5 && p > 0.25) {
      ns.push_back(n);
      excess.push_back(p - 0.25);
    }
  }
  out.series.push_back(std::move(series));
  if (cfg.fit) {
    if (ns.size() < 2) throw UsageError("herald-prob --fit needs the range to reach N >= 6");
    const PowerLawFit fit = fit_power_law(ns, excess);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", fit.exponent);
    out.table.meta.emplace_back("fit-exponent", buf);
    std::snprintf(buf, sizeof buf, "%.6g", fit.prefactor);
    out.table.meta.emplace_back("fit-prefactor", buf);
    out.table.meta.emplace_back("fit-range", format_range(std::max(cfg.n_lo, 5), cfg.n_hi));
    out.table.meta.emplace_back("fit-model", "p-1/4=prefactor*N^exponent");
  }
  return out;
}

CommandOutput cmd_gamma(const RunConfig& cfg) {
  CommandOutput out;
  out.table.columns = {"N", "p", "gamma", "gamma_bound"};
  out.plot = {"Resource scaling exponent", "N", "gamma", false, false};
  Series exact{"gamma", {}}, bound{"bound", {}};
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const ScalingPoint s = scaling_point(n, herald_probability_closed(n));
    out.table.rows.push_back({s.n, s.p, s.gamma, s.gamma_bound});
    exact.points.emplace_back(n, s.gamma);
    bound.points.emplace_back(n, s.gamma_bound);
  }
  out.series = {exact, bound};
  return out;
}

CommandOutput cmd_qec(const RunConfig& cfg) {
  CommandOutput out;
  out.plot = {"Distillation vs code-distance allocation", "N", "p_error/p_th boundary", false,
              false};
  const bool with_ratio = cfg.p_ratio.has_value();
  out.table.columns = {"N", "boundary"};
  if (with_ratio) {
    out.table.columns.push_back("cost_ratio");
    out.table.columns.push_back("advantageous");
  }
  Series series{"boundary", {}};
  double min_boundary = 1.0;
  int argmin = 0;
  for (int n = std::max(cfg.n_lo, 2); n <= cfg.n_hi; ++n) {
    const double boundary = qec_boundary(n);
    std::vector<json> row = {n, boundary};
    if (with_ratio) {
      const QecTradeoff t = qec_tradeoff(*cfg.p_ratio, n);
      row.push_back(t.cost_ratio);
      row.push_back(t.advantageous);
    }
    out.table.rows.push_back(std::move(row));
    series.points.emplace_back(n, boundary);
    if (boundary < min_boundary) {
      min_boundary = boundary;
      argmin = n;
    }
  }
  out.series.push_back(std::move(series));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", min_boundary);
  out.table.meta.emplace_back("boundary-min", buf);
  out.table.meta.emplace_back("boundary-argmin", std::to_string(argmin));
  return out;
}

CommandOutput cmd_validity(const RunConfig& cfg) {
  CommandOutput out;
  out.table.columns = {"N", "epsilon", "ratio"};
  out.plot = {"Multi-error probability over epsilon", "epsilon", "delta_N/eps (clamped)", false,
              false};
  const std::vector<double> grid =
      parse_eps_grid(cfg.eps_spec.empty() ? "0:0.5:51:lin" : cfg.eps_spec);
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    Series series{"N=" + std::to_string(n), {}};
    for (double eps : grid) {
      const double ratio = validity_ratio(n, eps);
      out.table.rows.push_back({n, eps, ratio});
      series.points.emplace_back(eps, std::min(ratio, 1.0));  // clamped for readability
    }
    out.series.push_back(std::move(series));
  }
  return out;
}

CommandOutput cmd_loss(const RunConfig& cfg) {
  CommandOutput out;
  out.table.columns = {"N",      "eps_in", "eps_distilled", "p_error_rel",
                       "insertion_db", "p_loss", "p_erasure_rel"};
  out.plot = {"Measurement vs erasure error, relative to N=3", "N", "relative error", true, true};
  if (cfg.n_lo < 3) throw UsageError("loss model needs N >= 3");
  Series err{"p_error_rel", {}}, erasure{"p_erasure_rel", {}};
  std::vector<double> ns, errs, erasures;
  const LossModelParams params;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const LossTradeoffPoint point = loss_tradeoff(n, params, cfg.jobs);
    out.table.rows.push_back({point.n, point.eps_in, point.eps_distilled, point.p_error_rel,
                              point.insertion_db, point.p_loss, point.p_erasure_rel});
    err.points.emplace_back(n, point.p_error_rel);
    erasure.points.emplace_back(n, point.p_erasure_rel);
    ns.push_back(n);
    errs.push_back(point.p_error_rel);
    erasures.push_back(point.p_erasure_rel);
  }
  out.series = {err, erasure};
  if (cfg.fit) {
    if (ns.size() < 2) throw UsageError("loss --fit needs a range of at least two N");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", fit_power_law(ns, errs).exponent);
    out.table.meta.emplace_back("fit-error-exponent", buf);
    std::snprintf(buf, sizeof buf, "%.6g", fit_power_law(ns, erasures).exponent);
    out.table.meta.emplace_back("fit-erasure-exponent", buf);
  }
  return out;
}

CommandOutput cmd_haar(const RunConfig& cfg) {
  CommandOutput out;
  out.table.columns = {"N", "bin_index", "bin_lo", "bin_hi", "count"};
  out.plot = {"Coefficient ratio over Haar-random circuits", "ratio", "count", false, false};
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const HaarRatioHistogram hist = haar_ratio_histogram(n, cfg.samples, cfg.seed);
    Series series{"N=" + std::to_string(n), {}};
    for (std::size_t b = 0; b < hist.counts.size(); ++b) {
      out.table.rows.push_back({n, static_cast<int>(b), hist.edges[b], hist.edges[b + 1],
                                hist.counts[b]});
      series.points.emplace_back(0.5 * (hist.edges[b] + hist.edges[b + 1]),
                                 static_cast<double>(hist.counts[b]));
    }
    out.series.push_back(std::move(series));
    const std::string suffix = "-n" + std::to_string(n);
    out.table.meta.emplace_back("fourier-reference" + suffix, std::to_string(n - 1));
    out.table.meta.emplace_back("skipped" + suffix, std::to_string(hist.skipped));
  }
  out.table.meta.emplace_back("samples", std::to_string(cfg.samples));
  return out;
}

}  // namespace

std::string run_command(const RunConfig& cfg) {
  CommandOutput result;
  if (cfg.command == "scan") {
    result = cmd_scan(cfg);
  } else if (cfg.command == "conjecture") {
    result = cmd_conjecture(cfg);
  } else if (cfg.command == "herald-prob") {
    result = cmd_herald_prob(cfg);
  } else if (cfg.command == "gamma") {
    result = cmd_gamma(cfg);
  } else if (cfg.command == "qec") {
    result = cmd_qec(cfg);
  } else if (cfg.command == "validity") {
    result = cmd_validity(cfg);
  } else if (cfg.command == "loss") {
    result = cmd_loss(cfg);
  } else if (cfg.command == "haar") {
    result = cmd_haar(cfg);
  } else {
    throw UsageError("unknown command: " + cfg.command);
  }

  const std::string path = cfg.resolved_out();
  const std::string content = cfg.format == "json"
                                  ? render_json(result.table, cfg.canonical(), cfg.seed)
                                  : render_csv(result.table, cfg.canonical(), cfg.seed);
  write_file(path, content);
  if (!cfg.plot.empty()) write_file(cfg.plot, render_svg(result.plot, result.series));
  return path;
}

}  // namespace fdistill::cli
