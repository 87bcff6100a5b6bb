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

#ifndef FDISTILL_ANALYSIS_HPP
#define FDISTILL_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fdistill/errors.hpp"

namespace fdistill {

/// Photons consumed by a 100x error reduction built from concatenated
/// three-photon stages; kept for comparison tables, not recomputed here.
inline constexpr double kThreePhotonCascadePhotons100x = 59000.0;

struct Fraction {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Total herald probability of the n-photon scheme,
/// p = Σ_{j=0}^{n-1} (-1)^j (j+1) Π_{i=1}^{j} (1 - i/n),
/// with the product accumulated iteratively and compensated summation.
/// Stable for n up to 1e4.
double herald_probability_closed(int n);

/// Same sum in exact integer arithmetic over the common denominator
/// n^(n-1); valid for n <= 16.
Fraction herald_probability_exact(int n);

/// Counting heuristic 1/(4 - 2/n): the large-n limit of the herald
/// probability. Not equal to the closed form at finite n.
double herald_probability_counting(int n);

struct ScalingPoint {
  int n = 0;
  double p = 0.0;
  double gamma = 0.0;        // 1 + log2(1/p) / log2(n)
  double gamma_bound = 0.0;  // 1 + 2 / log2(n)
};

/// Resource scaling exponent: photons needed for an error reduction R grow
/// as R^gamma.
ScalingPoint scaling_point(int n, double p);

struct QecTradeoff {
  double cost_ratio = 0.0;   // distillation+QEC cost over bare QEC cost
  bool advantageous = false;
};

/// Cost of reaching a fixed logical error with an n-photon distillation
/// stage in front of a surface code, relative to code distance alone,
/// as a function of p_error/p_th in (0, 1).
QecTradeoff qec_tradeoff(double p_ratio, int n);

/// p_error/p_th above which distillation wins: (1/n)^(1/(2 sqrt(n) - 1)).
double qec_boundary(int n);

/// δ_N(ε)/ε with δ_N the probability of two or more error photons among N:
/// δ_N(ε) = 1 - (1-ε)^N - Nε(1-ε)^(N-1). The ε -> 0 limit is 0.
double validity_ratio(int n, double eps);

struct LossModelParams {
  double v0 = 0.9050;             // two-photon interference visibility
  double g2 = 0.0279;             // heralded second-order correlation
  double coupling_db = 1.8;       // fixed fiber coupling loss
  double per_mode_db = 1.6 / 12;  // insertion loss per circuit mode
};

/// ε from the measured visibility: (1-ε)^2 = (v0 + g2)/(1 - g2).
double distinguishability_from_hom(double v0, double g2);

/// Insertion loss of an n-mode circuit in dB.
double insertion_loss_db(int n, const LossModelParams& params = {});

struct LossTradeoffPoint {
  int n = 0;
  double eps_in = 0.0;
  double eps_distilled = 0.0;  // exact scheme output error at eps_in
  double p_error_rel = 0.0;    // eps_distilled normalized to the n = 3 scheme
  double insertion_db = 0.0;
  double p_loss = 0.0;         // 1 - 10^(-IL/10)
  double p_erasure_rel = 0.0;  // p_loss normalized to the n = 3 scheme
};

/// Measurement-error vs erasure-error trade-off of a lossy n-photon
/// distillation gate, both normalized to the three-photon scheme. The
/// distilled error is the exact herald-averaged value, not the small-ε
/// limit ε/n, which the working point ε ≈ 0.02 already leaves for large n.
LossTradeoffPoint loss_tradeoff(int n, const LossModelParams& params = {}, unsigned jobs = 1);

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;
};

/// Least squares of log y against log x.
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

struct HaarRatioHistogram {
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> edges;   // fixed bin edges spanning [0, n]
  std::vector<long> counts;
  double fourier_reference = 0.0;  // the Fourier-scheme ratio n - 1
  double max_ratio = 0.0;
  long skipped = 0;  // outcomes with vanishing indistinguishable probability
};

/// Distribution of (Σ c_j j)/(Σ c_j) over Haar-random interferometers, for
/// every outcome with exactly one photon in the last mode. n in [3, 6].
HaarRatioHistogram haar_ratio_histogram(int n, int k_samples, std::uint64_t seed);

struct ResourceCost {
  double photons = 0.0;          // n / p(n)
  double linear_estimate = 0.0;  // 4 · target_reduction
};

/// Photon cost of one distillation step with the n-photon scheme, plus the
/// linear asymptote for the requested error-reduction factor.
ResourceCost resource_cost(int n, double target_reduction);

}  // namespace fdistill

#endif  // FDISTILL_ANALYSIS_HPP
