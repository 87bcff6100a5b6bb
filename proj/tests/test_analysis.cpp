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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fdistill/analysis.hpp"

using namespace fdistill;

TEST_CASE("herald probability closed form at small N") {
  CHECK(std::abs(herald_probability_closed(3) - 1.0 / 3.0) <= 1e-15);
  CHECK(herald_probability_closed(4) == 0.25);  // all terms dyadic
  CHECK(std::abs(herald_probability_closed(5) - 33.0 / 125.0) <= 1e-15);

  const Fraction f3 = herald_probability_exact(3);
  CHECK(f3.num == 1);
  CHECK(f3.den == 3);
  const Fraction f4 = herald_probability_exact(4);
  CHECK(f4.num == 1);
  CHECK(f4.den == 4);
  const Fraction f5 = herald_probability_exact(5);
  CHECK(f5.num == 33);
  CHECK(f5.den == 125);

  for (int n = 1; n <= 16; ++n)
    CHECK(std::abs(herald_probability_closed(n) - herald_probability_exact(n).value()) <= 1e-14);
  CHECK_THROWS_AS(herald_probability_exact(17), SizeLimitError);
  CHECK_THROWS_AS(herald_probability_closed(0), DomainError);
}

TEST_CASE("herald probability stays above 1/4 and is stable for large N") {
  double min_p = 1.0;
  for (int n = 3; n <= 1000; ++n) min_p = std::min(min_p, herald_probability_closed(n));
  CHECK(min_p >= 0.25);
  CHECK(min_p == 0.25);  // attained exactly at N = 4

  const double p_large = herald_probability_closed(10000);
  CHECK(p_large >= 0.25);
  CHECK(p_large <= 0.2501);
}

TEST_CASE("power-law refit of p - 1/4 reproduces the reference fit") {
  std::vector<double> ns, excess;
  for (int n = 5; n <= 1000; ++n) {
    ns.push_back(static_cast<double>(n));
    excess.push_back(herald_probability_closed(n) - 0.25);
  }
  const PowerLawFit fit = fit_power_law(ns, excess);
  CHECK(std::abs(fit.exponent - (-0.9973)) <= 0.02);
  CHECK(std::abs(fit.prefactor - 0.0614) <= 0.1 * 0.0614);
}

TEST_CASE("counting heuristic") {
  CHECK(std::abs(herald_probability_counting(2) - 1.0 / 3.0) <= 1e-15);
  CHECK(std::abs(herald_probability_counting(1000000) - 0.25) <= 1e-6);
  for (int n : {10, 100, 1000}) {
    const double diff = herald_probability_counting(n) - 0.25 - 1.0 / (8.0 * n);
    CHECK(std::abs(diff) <= 1.0 / (15.0 * static_cast<double>(n) * n));
  }
  // The heuristic is not the closed form at finite n.
  CHECK(herald_probability_counting(5) != doctest::Approx(herald_probability_closed(5)).epsilon(1e-3));
}

TEST_CASE("scaling exponent gamma") {
  const ScalingPoint s3 = scaling_point(3, 1.0 / 3.0);
  CHECK(std::abs(s3.gamma - 2.0) <= 1e-12);

  // p(4) is exactly 1/4 in floating point, so gamma(4) is exactly 2.
  const ScalingPoint s4 = scaling_point(4, herald_probability_closed(4));
  CHECK(s4.gamma == 2.0);

  CHECK(scaling_point(16, 0.5).gamma_bound == 1.5);

  double previous = 10.0;
  for (int n = 5; n <= 100; ++n) {
    const ScalingPoint s = scaling_point(n, herald_probability_closed(n));
    CHECK(s.gamma > 1.0);
    CHECK(s.gamma <= s.gamma_bound + 1e-12);
    CHECK(s.gamma < previous);
    previous = s.gamma;
  }
  CHECK_THROWS_AS(scaling_point(3, 0.0), DomainError);
  CHECK_THROWS_AS(scaling_point(1, 0.5), DomainError);
}

TEST_CASE("QEC trade-off boundary") {
  CHECK(std::abs(qec_boundary(5) - 0.62903) <= 1e-4);

  double min_boundary = 1.0;
  int argmin = 0;
  for (int n = 2; n <= 1000; ++n) {
    const double b = qec_boundary(n);
    if (b < min_boundary) {
      min_boundary = b;
      argmin = n;
    }
  }
  CHECK(min_boundary >= 0.62);
  CHECK(min_boundary <= 0.64);
  CHECK(argmin == 5);

  for (int n : {2, 3, 10, 50}) CHECK(qec_tradeoff(0.999, n).advantageous);
  CHECK_FALSE(qec_tradeoff(0.5, 5).advantageous);
  CHECK(qec_tradeoff(0.7, 5).advantageous);

  // Spot value: n = 4, p_ratio = 0.8 -> (2·2·log0.8/(log0.8 − log4))².
  const double lr = std::log(0.8);
  const double expected = std::pow(4.0 * lr / (lr - std::log(4.0)), 2.0);
  CHECK(std::abs(qec_tradeoff(0.8, 4).cost_ratio - expected) <= 1e-12);

  CHECK_THROWS_AS(qec_tradeoff(1.0, 5), DomainError);
  CHECK_THROWS_AS(qec_tradeoff(-0.1, 5), DomainError);
  CHECK_THROWS_AS(qec_tradeoff(0.5, 1), DomainError);
}

TEST_CASE("validity ratio of the single-error approximation") {
  for (double eps : {1e-4, 0.01, 0.3, 1.0}) CHECK(std::abs(validity_ratio(1, eps)) <= 1e-12);
  for (double eps : {1e-4, 0.01, 0.3}) CHECK(std::abs(validity_ratio(2, eps) - eps) <= 1e-12);
  CHECK(validity_ratio(8, 0.0) == 0.0);
  // The raw ratio is reported unclamped and exceeds 1 outside the regime.
  CHECK(validity_ratio(10, 0.5) > 1.0);
  // Validity range shrinks with N.
  CHECK(validity_ratio(10, 0.02) > validity_ratio(4, 0.02));
  CHECK_THROWS_AS(validity_ratio(3, 1.5), DomainError);
}

TEST_CASE("loss model constants") {
  const double eps = distinguishability_from_hom(0.9050, 0.0279);
  CHECK(std::abs(eps - 0.0204) <= 1e-4);
  CHECK(std::abs(insertion_loss_db(12) - 3.4) <= 1e-12);
  CHECK_THROWS_AS(distinguishability_from_hom(1.2, 0.0), DomainError);

  // Erasure side of the trade-off is closed-form; check the N^0.2150 refit.
  std::vector<double> ns, erasure;
  const LossModelParams params;
  for (int n = 3; n <= 10; ++n) {
    ns.push_back(static_cast<double>(n));
    erasure.push_back(1.0 - std::pow(10.0, -insertion_loss_db(n, params) / 10.0));
  }
  const PowerLawFit fit = fit_power_law(ns, erasure);
  CHECK(std::abs(fit.exponent - 0.2150) <= 0.02);
}

TEST_CASE("loss trade-off points at small N") {
  const LossTradeoffPoint p3 = loss_tradeoff(3, {}, 2);
  CHECK(p3.p_error_rel == 1.0);
  CHECK(p3.p_erasure_rel == 1.0);
  const LossTradeoffPoint p6 = loss_tradeoff(6, {}, 2);
  CHECK(p6.p_error_rel < 1.0);   // distillation reduces the measurement error
  CHECK(p6.p_erasure_rel > 1.0); // at the cost of extra loss
  CHECK(p6.eps_distilled > p6.eps_in / 6.0);  // beyond the small-ε limit
  CHECK_THROWS_AS(loss_tradeoff(2), DomainError);
}

TEST_CASE("power-law fit recovers synthetic data") {
  std::vector<double> x, y;
  for (int i = 1; i <= 30; ++i) {
    x.push_back(static_cast<double>(i));
    y.push_back(2.5 * std::pow(static_cast<double>(i), -1.37));
  }
  const PowerLawFit fit = fit_power_law(x, y);
  CHECK(std::abs(fit.exponent + 1.37) <= 1e-12);
  CHECK(std::abs(fit.prefactor - 2.5) <= 1e-12);
  CHECK_THROWS_AS(fit_power_law(std::vector<double>{1.0}, std::vector<double>{1.0}),
                  DimensionError);
}

TEST_CASE("Haar ratio histogram") {
  const HaarRatioHistogram hist = haar_ratio_histogram(3, 60, 4242);
  const HaarRatioHistogram again = haar_ratio_histogram(3, 60, 4242);
  CHECK(hist.counts == again.counts);
  CHECK(hist.max_ratio <= 3.0 + 1e-9);
  CHECK(hist.fourier_reference == 2.0);

  const HaarRatioHistogram h5 = haar_ratio_histogram(5, 20, 7);
  CHECK(h5.fourier_reference == 4.0);
  CHECK(h5.max_ratio <= 5.0 + 1e-9);
  long total = 0;
  for (long c : h5.counts) total += c;
  CHECK(total + h5.skipped == 20L * 35L);

  CHECK_THROWS_AS(haar_ratio_histogram(7, 10, 1), SizeLimitError);
  CHECK_THROWS_AS(haar_ratio_histogram(5, 0, 1), DomainError);
}

TEST_CASE("resource cost of one distillation step") {
  const ResourceCost flagship = resource_cost(100, 100.0);
  CHECK(flagship.photons >= 395.0);
  CHECK(flagship.photons <= 405.0);
  CHECK(flagship.linear_estimate == 400.0);

  const ResourceCost five = resource_cost(5, 5.0);
  CHECK(std::abs(five.photons - 625.0 / 33.0) <= 1e-12);

  CHECK(kThreePhotonCascadePhotons100x == 59000.0);
  CHECK_THROWS_AS(resource_cost(2, 10.0), DomainError);
  CHECK_THROWS_AS(resource_cost(5, 0.5), DomainError);
}
