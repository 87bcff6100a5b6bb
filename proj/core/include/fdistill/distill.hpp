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

#ifndef FDISTILL_DISTILL_HPP
#define FDISTILL_DISTILL_HPP

#include <optional>
#include <vector>

#include "fdistill/interference.hpp"

namespace fdistill {

/// Outcomes whose ε = 0 probability is at or below this are classified as
/// suppressed: allowed by the zero-transmission law but never occurring.
inline constexpr double kSuppressedThreshold = 1e-12;

struct CurvePoint {
  double eps = 0.0;
  double q = 0.0;
  std::optional<double> eps_prime;  // empty when the conditional is undefined
};

/// Everything known about one herald pattern of the N-photon scheme.
struct HeraldReport {
  ModeAssignment herald;    // N-1 photons over modes 1..N-1
  OccupationVector outcome; // full N-mode occupation (one photon in mode N)
  ZtlClass ztl = ZtlClass::forbidden;
  bool suppressed = false;
  double q_i = 0.0;     // herald probability at ε = 0
  double lambda = 0.0;  // one-error herald probability
  ModeAssignment family;  // canonical representative of the symmetry orbit
  CoefficientVector coefficients;
  std::vector<CurvePoint> curve;
  std::optional<double> threshold_eps;  // largest ε with ε' < ε below it

  bool valid_for_distillation() const {
    return ztl == ZtlClass::allowed && !suppressed;
  }
};

/// One row of the conjecture summary table.
struct ConjectureRow {
  int n = 0;
  long n_allowed = 0;
  double delta_max = 0.0;  // max |Σ c_j j − (N−1) Σ c_j| / Σ|c_j|
  long n_herald = 0;       // allowed and not suppressed
  double pct = 0.0;        // 100 · n_herald / n_allowed
};

/// 60 log-spaced points in [1e-5, 0.5] plus 20 linear points up to 0.9.
std::vector<double> default_eps_grid();

struct ScanOptions {
  std::vector<double> eps_grid = default_eps_grid();
  unsigned jobs = 1;
  bool with_curves = true;
};

/// One report per outcome with exactly one photon in mode n, for the
/// n-mode Fourier scheme. Covers 3 <= n <= 10.
std::vector<HeraldReport> scan_heralds(int n, const ScanOptions& options = {});

/// Tests Σ c_j j = (N−1) Σ c_j over every allowed one-photon-in-mode-N
/// outcome. Coefficients come from the direct permutation path for n <= 8
/// and from the interpolation kernel beyond; the residual itself is
/// evaluated through q(1) and q'(1), which the identity determines exactly.
ConjectureRow check_conjecture(int n, unsigned jobs = 1);

/// Distilled error extracted the way an experiment would measure it: run
/// the (n+1)-mode circuit of compose_distillation_circuit with one extra
/// reference photon of the same ε, condition on the herald, read the
/// two-photon coincidence rate across the final beamsplitter, and invert
/// V' = (1−ε)(1−ε'). Returns nothing when the herald probability vanishes.
std::optional<double> hom_visibility_check(int n, double eps, const ModeAssignment& herald);

/// Largest ε below which ε'(ε) < ε, located by bisection to 1e-6.
/// Empty result means no crossing inside (0, 1).
std::optional<double> threshold_scan(int n, const ModeAssignment& herald);

/// Herald-probability-weighted distilled error over every allowed herald
/// pattern: the expected output error when the experiment accepts any
/// outcome passing the zero-transmission-law filter. Suppressed allowed
/// patterns carry zero weight at ε = 0 but contribute (with a poor output
/// photon) at finite ε.
double scheme_distilled_error(int n, double eps, unsigned jobs = 1);

}  // namespace fdistill

#endif  // FDISTILL_DISTILL_HPP
