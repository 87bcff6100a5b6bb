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

#include "fdistill/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fdistill/distill.hpp"
#include "fdistill/unitary.hpp"

namespace fdistill {

namespace {

// Neumaier-compensated accumulation; the alternating herald-probability sum
// cancels terms of size ~sqrt(n) down to 1/4.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace

double herald_probability_closed(int n) {
  if (n < 1) throw DomainError("herald_probability_closed: n must be at least 1");
  CompensatedSum acc;
  double prod = 1.0;
  for (int j = 0; j < n; ++j) {
    if (j > 0) prod *= 1.0 - static_cast<double>(j) / n;
    const double term = static_cast<double>(j + 1) * prod;
    acc.add((j & 1) ? -term : term);
  }
  return acc.value();
}

Fraction herald_probability_exact(int n) {
  if (n < 1) throw DomainError("herald_probability_exact: n must be at least 1");
  if (n > 16) throw SizeLimitError("herald_probability_exact: exact arithmetic capped at n = 16");
  // Common denominator n^(n-1); numerator terms (j+1) n^(n-1-j) (n-1)!/(n-1-j)!.
  __int128 num = 0;
  __int128 den = 1;
  for (int i = 1; i < n; ++i) den *= n;
  __int128 falling = 1;
  __int128 npow = den;
  for (int j = 0; j < n; ++j) {
    if (j > 0) {
      falling *= (n - j);
      npow /= n;
    }
    const __int128 term = static_cast<__int128>(j + 1) * falling * npow;
    num += (j & 1) ? -term : term;
  }
  long long a = static_cast<long long>(num);
  long long b = static_cast<long long>(den);
  const long long g = std::gcd(a, b);
  return Fraction{a / g, b / g};
}

double herald_probability_counting(int n) {
  if (n < 2) throw DomainError("herald_probability_counting: n must be at least 2");
  return 1.0 / (4.0 - 2.0 / static_cast<double>(n));
}

ScalingPoint scaling_point(int n, double p) {
  if (n < 2) throw DomainError("scaling_point: n must be at least 2");
  if (p <= 0.0 || p > 1.0) throw DomainError("scaling_point: p outside (0, 1]");
  ScalingPoint s;
  s.n = n;
  s.p = p;
  const double log2n = std::log2(static_cast<double>(n));
  s.gamma = 1.0 + std::log2(1.0 / p) / log2n;
  s.gamma_bound = 1.0 + 2.0 / log2n;
  return s;
}

double qec_boundary(int n) {
  if (n < 2) throw DomainError("qec_boundary: n must be at least 2");
  return std::pow(1.0 / n, 1.0 / (2.0 * std::sqrt(static_cast<double>(n)) - 1.0));
}

QecTradeoff qec_tradeoff(double p_ratio, int n) {
  if (n < 2) throw DomainError("qec_tradeoff: n must be at least 2");
  if (p_ratio <= 0.0) throw DomainError("qec_tradeoff: p_error/p_th must be positive");
  if (p_ratio >= 1.0)
    throw DomainError("qec_tradeoff: above the code threshold the cost comparison is undefined");
  const double lr = std::log(p_ratio);
  const double factor = 2.0 * std::sqrt(static_cast<double>(n)) * lr / (lr - std::log(n));
  QecTradeoff result;
  result.cost_ratio = factor * factor;
  result.advantageous = p_ratio > qec_boundary(n);
  return result;
}

double validity_ratio(int n, double eps) {
  if (n < 1) throw DomainError("validity_ratio: n must be at least 1");
  if (eps < 0.0 || eps > 1.0) throw DomainError("validity_ratio: eps outside [0, 1]");
  if (eps == 0.0) return 0.0;
  const double delta =
      1.0 - std::pow(1.0 - eps, n) - n * eps * std::pow(1.0 - eps, n - 1);
  return delta / eps;
}

double distinguishability_from_hom(double v0, double g2) {
  if (g2 < 0.0 || g2 >= 1.0) throw DomainError("second-order correlation outside [0, 1)");
  const double overlap_sq = (v0 + g2) / (1.0 - g2);
  if (overlap_sq <= 0.0 || overlap_sq > 1.0)
    throw DomainError("visibility parameters imply an unphysical overlap");
  return 1.0 - std::sqrt(overlap_sq);
}

double insertion_loss_db(int n, const LossModelParams& params) {
  if (n < 1) throw DomainError("insertion_loss_db: n must be at least 1");
  if (params.coupling_db < 0.0 || params.per_mode_db < 0.0)
    throw DomainError("losses must be nonnegative");
  return params.coupling_db + params.per_mode_db * n;
}

LossTradeoffPoint loss_tradeoff(int n, const LossModelParams& params, unsigned jobs) {
  if (n < 3) throw DomainError("loss_tradeoff: n must be at least 3");
  const double eps_in = distinguishability_from_hom(params.v0, params.g2);

  LossTradeoffPoint point;
  point.n = n;
  point.eps_in = eps_in;
  point.eps_distilled = scheme_distilled_error(n, eps_in, jobs);
  const double baseline_error = scheme_distilled_error(3, eps_in, jobs);
  point.p_error_rel = point.eps_distilled / baseline_error;

  point.insertion_db = insertion_loss_db(n, params);
  point.p_loss = 1.0 - std::pow(10.0, -point.insertion_db / 10.0);
  const double baseline_loss =
      1.0 - std::pow(10.0, -insertion_loss_db(3, params) / 10.0);
  point.p_erasure_rel = point.p_loss / baseline_loss;
  return point;
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw DimensionError("fit_power_law: need two equally sized samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0 || y[i] <= 0.0) throw DomainError("fit_power_law: values must be positive");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  PowerLawFit fit;
  fit.exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.prefactor = std::exp((sy - fit.exponent * sx) / count);
  return fit;
}

HaarRatioHistogram haar_ratio_histogram(int n, int k_samples, std::uint64_t seed) {
  if (n < 3 || n > 6) throw SizeLimitError("haar_ratio_histogram covers 3 <= n <= 6");
  if (k_samples < 1) throw DomainError("haar_ratio_histogram: need at least one sample");

  HaarRatioHistogram hist;
  hist.n = n;
  hist.samples = k_samples;
  hist.seed = seed;
  hist.fourier_reference = static_cast<double>(n - 1);
  const int bins = 120;
  hist.edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b)
    hist.edges[b] = static_cast<double>(n) * static_cast<double>(b) / bins;
  hist.counts.assign(bins, 0);

  // One independent substream per sample, all derived from the master seed
  // up front so the result does not depend on evaluation order.
  std::mt19937_64 master(seed);
  std::vector<std::uint64_t> sample_seeds(k_samples);
  for (auto& s : sample_seeds) s = master();

  const std::vector<OccupationVector> outcomes = enumerate_outcomes(n, n, 1);
  for (int s = 0; s < k_samples; ++s) {
    const ComplexMatrix u = haar_unitary(n, sample_seeds[s]);
    for (const OccupationVector& occ : outcomes) {
      const OutcomeProfile profile = analyze_outcome(u, occ);
      const double qi = profile.indistinguishable_probability();
      if (qi <= kZeroProbabilityThreshold) {
        ++hist.skipped;
        continue;
      }
      // Σ c_j j / Σ c_j = q'(1)/q(1) = n - B_1/B_0 — exact, no fit noise.
      const double ratio = n - profile.prob_by_errors[1] / qi;
      hist.max_ratio = std::max(hist.max_ratio, ratio);
      const int bin = std::clamp(
          static_cast<int>(ratio / static_cast<double>(n) * bins), 0, bins - 1);
      ++hist.counts[bin];
    }
  }
  return hist;
}

ResourceCost resource_cost(int n, double target_reduction) {
  if (n < 3) throw DomainError("resource_cost: n must be at least 3");
  if (target_reduction <= 1.0)
    throw DomainError("resource_cost: the error-reduction target must exceed 1");
  ResourceCost cost;
  cost.photons = static_cast<double>(n) / herald_probability_closed(n);
  cost.linear_estimate = 4.0 * target_reduction;
  return cost;
}

}  // namespace fdistill
