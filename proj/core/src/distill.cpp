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

#include "fdistill/distill.hpp"

#include <algorithm>
#include <cmath>

#include "fdistill/parallel.hpp"
#include "fdistill/unitary.hpp"

namespace fdistill {

namespace {

void require_scan_range(int n) {
  if (n < 3 || n > 10) throw SizeLimitError("herald scans cover 3 <= n <= 10");
}

OccupationVector herald_occupation(const ModeAssignment& herald, int n) {
  return to_occupation(herald, n - 1);
}

OccupationVector full_outcome(const OccupationVector& herald, int /*n*/) {
  OccupationVector occ = herald;
  occ.counts.push_back(1);
  return occ;
}

// ε'(ε) from a precomputed profile; empty when q(ε) vanishes.
std::optional<double> eps_prime_at(const OutcomeProfile& profile, double eps, double* q_out) {
  const double q = profile.probability(eps);
  if (q_out) *q_out = q;
  if (q <= kZeroProbabilityThreshold) return std::nullopt;
  double bad = 0.0;
  double ep = 1.0;
  for (int t = 0; t <= profile.n; ++t) {
    bad += ep * std::pow(1.0 - eps, profile.n - t) * profile.last_mode_bad_by_errors[t];
    ep *= eps;
  }
  return bad / q;
}

std::optional<double> threshold_from_profile(const OutcomeProfile& profile) {
  // ε' − ε starts negative (slope 1/N at the origin) and returns to zero at
  // ε = 1; locate the first sign change on a coarse grid, then bisect.
  const int kGrid = 2048;
  double lo = 1e-6;
  auto h = [&](double eps) {
    const std::optional<double> ep = eps_prime_at(profile, eps, nullptr);
    return ep ? *ep - eps : 1.0;
  };
  double h_lo = h(lo);
  if (h_lo >= 0.0) return lo;  // never distills; crossing is immediate
  double hi = 0.0;
  bool found = false;
  for (int i = 1; i <= kGrid; ++i) {
    const double eps = 1e-6 + (1.0 - 2e-6 - 1e-6) * static_cast<double>(i) / kGrid;
    const double val = h(eps);
    if (val >= 0.0) {
      hi = eps;
      found = true;
      break;
    }
    lo = eps;
    h_lo = val;
  }
  if (!found) return std::nullopt;
  for (int it = 0; it < 80 && hi - lo > 1e-9; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (h(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> default_eps_grid() {
  std::vector<double> grid;
  grid.reserve(80);
  const double lo = 1e-5, hi = 0.5;
  for (int i = 0; i < 60; ++i)
    grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / 59.0));
  for (int i = 1; i <= 20; ++i) grid.push_back(0.5 + 0.4 * static_cast<double>(i) / 20.0);
  return grid;
}

std::vector<HeraldReport> scan_heralds(int n, const ScanOptions& options) {
  require_scan_range(n);
  for (double eps : options.eps_grid) {
    if (eps < 0.0 || eps >= 1.0) throw DomainError("scan eps grid must lie in [0, 1)");
  }
  const ComplexMatrix u = fourier_unitary(n);
  const std::vector<OccupationVector> outcomes = enumerate_outcomes(n, n, 1);

  std::vector<HeraldReport> reports(outcomes.size());
  parallel_for(outcomes.size(), options.jobs, [&](std::size_t i) {
    const OccupationVector& occ = outcomes[i];
    HeraldReport& report = reports[i];

    OccupationVector herald = occ;
    herald.counts.pop_back();
    report.herald = to_assignment(herald);
    report.outcome = occ;
    report.ztl = classify_ztl(occ);
    report.family = to_assignment(symmetry_class(occ));

    const OutcomeProfile profile = analyze_outcome(u, occ);
    report.q_i = profile.indistinguishable_probability();
    report.lambda = profile.lambda();
    report.suppressed = report.ztl == ZtlClass::allowed && report.q_i <= kSuppressedThreshold;

    OccupationVector input;
    input.counts.assign(n, 1);
    report.coefficients = (n <= 8) ? coefficients_direct(u, input, occ)
                                   : coefficients_interpolated(u, input, occ);

    if (options.with_curves) {
      report.curve.reserve(options.eps_grid.size());
      for (double eps : options.eps_grid) {
        CurvePoint point;
        point.eps = eps;
        point.eps_prime = eps_prime_at(profile, eps, &point.q);
        report.curve.push_back(point);
      }
    }
    if (report.valid_for_distillation()) {
      report.threshold_eps = threshold_from_profile(profile);
    }
  });
  return reports;
}

ConjectureRow check_conjecture(int n, unsigned jobs) {
  require_scan_range(n);
  const ComplexMatrix u = fourier_unitary(n);
  std::vector<OccupationVector> allowed;
  for (const OccupationVector& occ : enumerate_outcomes(n, n, 1)) {
    if (classify_ztl(occ) == ZtlClass::allowed) allowed.push_back(occ);
  }

  OccupationVector input;
  input.counts.assign(n, 1);
  std::vector<double> delta(allowed.size());
  std::vector<double> qi(allowed.size());
  parallel_for(allowed.size(), jobs, [&](std::size_t i) {
    double residual, scale, q0;
    if (n <= 8) {
      const CoefficientVector cv = coefficients_direct(u, input, allowed[i]);
      residual = std::abs(cv.first_moment() - (n - 1) * cv.sum());
      scale = cv.sum_abs();
      q0 = cv.sum();
    } else {
      // q(1) and q'(1) of the overlap polynomial are exact functions of the
      // zero- and one-error mixture weights, so the residual
      // Σ c_j j − (N−1) Σ c_j = q'(1) − (N−1) q(1) evaluates without the
      // cancellation noise of summing fitted coefficients.
      const OutcomeProfile profile = analyze_outcome(u, allowed[i]);
      residual = std::abs(profile.prob_by_errors[0] - profile.prob_by_errors[1]);
      scale = profile.coefficients().sum_abs();
      q0 = profile.indistinguishable_probability();
    }
    delta[i] = residual / std::max(scale, 1e-300);
    qi[i] = q0;
  });

  ConjectureRow row;
  row.n = n;
  row.n_allowed = static_cast<long>(allowed.size());
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    row.delta_max = std::max(row.delta_max, delta[i]);
    if (qi[i] > kSuppressedThreshold) ++row.n_herald;
  }
  row.pct = row.n_allowed ? 100.0 * static_cast<double>(row.n_herald) / row.n_allowed : 0.0;
  return row;
}

std::optional<double> hom_visibility_check(int n, double eps, const ModeAssignment& herald) {
  require_scan_range(n);
  if (eps < 0.0 || eps >= 1.0) throw DomainError("hom_visibility_check: eps outside [0, 1)");
  const OccupationVector herald_occ = herald_occupation(herald, n);
  if (herald_occ.total_photons() != n - 1)
    throw DimensionError("herald must contain N-1 photons");

  const ComplexMatrix circuit = compose_distillation_circuit(n);
  // n+1 photons: the distillation inputs plus one reference photon in mode
  // n+1. Joint statistics across the beamsplitter outputs (modes n, n+1).
  double q20 = 0.0, q11 = 0.0, q02 = 0.0;
  for (const auto& [a, b, slot] :
       {std::tuple{2, 0, &q20}, std::tuple{1, 1, &q11}, std::tuple{0, 2, &q02}}) {
    OccupationVector occ = herald_occ;
    occ.counts.push_back(a);
    occ.counts.push_back(b);
    *slot = analyze_outcome(circuit, occ).probability(eps);
  }
  const double total = q20 + q11 + q02;
  if (total <= kZeroProbabilityThreshold) return std::nullopt;

  // Two photons with mutual indistinguishability V on a balanced splitter
  // coincide with probability (1 − V)/2, and V = (1−ε)(1−ε').
  const double coincidence = q11 / total;
  const double visibility = 1.0 - 2.0 * coincidence;
  return 1.0 - visibility / (1.0 - eps);
}

std::optional<double> threshold_scan(int n, const ModeAssignment& herald) {
  require_scan_range(n);
  const OccupationVector herald_occ = herald_occupation(herald, n);
  const OccupationVector occ = full_outcome(herald_occ, n);
  if (classify_ztl(occ) == ZtlClass::forbidden)
    throw DomainError("threshold_scan: herald is forbidden by the zero-transmission law");
  const OutcomeProfile profile = analyze_outcome(fourier_unitary(n), occ);
  if (profile.indistinguishable_probability() <= kSuppressedThreshold)
    throw DomainError("threshold_scan: herald probability vanishes at eps = 0");
  return threshold_from_profile(profile);
}

double scheme_distilled_error(int n, double eps, unsigned jobs) {
  require_scan_range(n);
  if (eps < 0.0 || eps > 1.0) throw DomainError("scheme_distilled_error: eps outside [0, 1]");
  const ComplexMatrix u = fourier_unitary(n);
  std::vector<OccupationVector> accepted;
  for (const OccupationVector& occ : enumerate_outcomes(n, n, 1)) {
    if (classify_ztl(occ) == ZtlClass::allowed) accepted.push_back(occ);
  }

  std::vector<double> qs(accepted.size(), 0.0), bads(accepted.size(), 0.0);
  parallel_for(accepted.size(), jobs, [&](std::size_t i) {
    const OutcomeProfile profile = analyze_outcome(u, accepted[i]);
    double q = 0.0;
    const std::optional<double> ep = eps_prime_at(profile, eps, &q);
    if (!ep) return;
    qs[i] = q;
    bads[i] = *ep * q;
  });

  double q_total = 0.0, bad_total = 0.0;
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    q_total += qs[i];
    bad_total += bads[i];
  }
  if (q_total <= kZeroProbabilityThreshold)
    throw DomainError("scheme_distilled_error: no herald has nonzero probability");
  return bad_total / q_total;
}

}  // namespace fdistill
