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
#include <map>

#include "fdistill/analysis.hpp"
#include "fdistill/distill.hpp"
#include "fdistill/unitary.hpp"

using namespace fdistill;

namespace {

ScanOptions quick_scan_options() {
  ScanOptions options;
  options.eps_grid = {1e-5, 1e-3, 0.01, 0.05, 0.1, 0.2};
  options.jobs = 2;
  return options;
}

}  // namespace

TEST_CASE("N=5 scan: seven valid heralds in three families, p = 33/125") {
  const auto reports = scan_heralds(5, quick_scan_options());
  CHECK(reports.size() == 35);

  double total_qi = 0.0;
  std::map<std::vector<int>, int> families;
  int valid = 0;
  for (const HeraldReport& report : reports) {
    if (!report.valid_for_distillation()) continue;
    ++valid;
    total_qi += report.q_i;
    ++families[report.family.modes];
    CHECK(std::abs(report.lambda - report.q_i / 5.0) <= 1e-12);
  }
  CHECK(valid == 7);
  CHECK(families.size() == 3);
  CHECK(std::abs(total_qi - 33.0 / 125.0) <= 1e-10);
}

TEST_CASE("N=5 heralds in one family share the full curve") {
  const auto reports = scan_heralds(5, quick_scan_options());
  std::map<std::vector<int>, const HeraldReport*> representative;
  for (const HeraldReport& report : reports) {
    if (!report.valid_for_distillation()) continue;
    const auto [it, fresh] = representative.try_emplace(report.family.modes, &report);
    if (fresh) continue;
    const HeraldReport& other = *it->second;
    REQUIRE(report.curve.size() == other.curve.size());
    for (std::size_t i = 0; i < report.curve.size(); ++i) {
      CHECK(std::abs(report.curve[i].q - other.curve[i].q) <= 1e-12);
      REQUIRE(report.curve[i].eps_prime.has_value());
      REQUIRE(other.curve[i].eps_prime.has_value());
      CHECK(std::abs(*report.curve[i].eps_prime - *other.curve[i].eps_prime) <= 1e-12);
    }
    CHECK(std::abs(report.q_i - other.q_i) <= 1e-13);
  }
}

TEST_CASE("N=5 family thresholds") {
  // Frozen from a bisection of ε'(ε) = ε on the exact curves.
  const std::map<std::vector<int>, double> expected = {
      {{1, 1, 1, 2}, 0.4672975},
      {{1, 1, 4, 4}, 0.4161204},
      {{1, 2, 3, 4}, 0.0690694},
  };
  for (const auto& [herald, eps_star] : expected) {
    const auto result = threshold_scan(5, ModeAssignment{herald});
    REQUIRE(result.has_value());
    CHECK(std::abs(*result - eps_star) <= 1e-5);

    // Bisection oracle: ε' − ε changes sign across the reported threshold.
    const ComplexMatrix u = fourier_unitary(5);
    const OccupationVector herald_occ = to_occupation(ModeAssignment{herald}, 4);
    const double delta = 1e-3;
    const auto below = distilled_error(u, *result - delta, herald_occ);
    const auto above = distilled_error(u, *result + delta, herald_occ);
    REQUIRE(below.eps_prime.has_value());
    REQUIRE(above.eps_prime.has_value());
    CHECK(*below.eps_prime < *result - delta);
    CHECK(*above.eps_prime > *result + delta);
  }
  // Three distinct family thresholds.
  CHECK(std::abs(*threshold_scan(5, ModeAssignment{{1, 1, 1, 2}}) -
                 *threshold_scan(5, ModeAssignment{{1, 2, 3, 4}})) > 0.1);
}

TEST_CASE("distillation works at small eps for every valid herald") {
  for (int n : {4, 5, 6}) {
    for (const HeraldReport& report : scan_heralds(n, quick_scan_options())) {
      if (!report.valid_for_distillation()) continue;
      const auto point = distilled_error(fourier_unitary(n), 1e-4, to_occupation(report.herald, n - 1));
      REQUIRE(point.eps_prime.has_value());
      CHECK(*point.eps_prime < 1e-4);
      // Low-ε slope 1/n within 0.1%.
      const auto low = distilled_error(fourier_unitary(n), 1e-5, to_occupation(report.herald, n - 1));
      CHECK(std::abs(*low.eps_prime / 1e-5 - 1.0 / n) <= 1e-3 / n);
    }
  }
}

TEST_CASE("N=6 scan finds the suppressed allowed outcomes") {
  ScanOptions options = quick_scan_options();
  options.with_curves = false;
  const auto reports = scan_heralds(6, options);
  int allowed = 0, valid = 0, suppressed = 0;
  for (const HeraldReport& report : reports) {
    if (report.ztl != ZtlClass::allowed) continue;
    ++allowed;
    report.suppressed ? ++suppressed : ++valid;
  }
  CHECK(allowed == 20);
  CHECK(valid == 14);
  CHECK(suppressed == 6);
}

TEST_CASE("conjecture rows for small N match the summary table") {
  const ConjectureRow r3 = check_conjecture(3);
  CHECK(r3.n_allowed == 1);
  CHECK(r3.n_herald == 1);
  CHECK(r3.delta_max <= 1e-15);

  const ConjectureRow r4 = check_conjecture(4, 2);
  CHECK(r4.n_allowed == 2);
  CHECK(r4.n_herald == 2);

  const ConjectureRow r5 = check_conjecture(5, 2);
  CHECK(r5.n_allowed == 7);
  CHECK(r5.n_herald == 7);
  CHECK(r5.pct == 100.0);
  CHECK(r5.delta_max <= 1e-12);

  const ConjectureRow r6 = check_conjecture(6, 2);
  CHECK(r6.n_allowed == 20);
  CHECK(r6.n_herald == 14);
  CHECK(std::abs(r6.pct - 70.0) <= 1e-12);
  CHECK(r6.delta_max <= 1e-12);
}

TEST_CASE("visibility extraction agrees with the Bayesian conditional") {
  // ε = 0: perfect visibility, no residual error.
  const auto clean = hom_visibility_check(5, 0.0, ModeAssignment{{1, 2, 3, 4}});
  REQUIRE(clean.has_value());
  CHECK(std::abs(*clean) <= 1e-12);

  const ComplexMatrix u5 = fourier_unitary(5);
  const auto hom = hom_visibility_check(5, 0.05, ModeAssignment{{1, 2, 3, 4}});
  const auto bayes = distilled_error(u5, 0.05, to_occupation(ModeAssignment{{1, 2, 3, 4}}, 4));
  REQUIRE(hom.has_value());
  REQUIRE(bayes.eps_prime.has_value());
  CHECK(std::abs(*hom - *bayes.eps_prime) <= 1e-8);

  const auto small3 = hom_visibility_check(3, 1e-4, ModeAssignment{{1, 2}});
  REQUIRE(small3.has_value());
  CHECK(std::abs(*small3 / 1e-4 - 1.0 / 3.0) <= 1e-3);

  for (int n : {3, 4, 5}) {
    const ComplexMatrix u = fourier_unitary(n);
    for (const HeraldReport& report : scan_heralds(n, quick_scan_options())) {
      if (!report.valid_for_distillation()) continue;
      for (double eps : {0.01, 0.2}) {
        const auto a = hom_visibility_check(n, eps, report.herald);
        const auto b = distilled_error(u, eps, to_occupation(report.herald, n - 1));
        REQUIRE(a.has_value());
        REQUIRE(b.eps_prime.has_value());
        CHECK(std::abs(*a - *b.eps_prime) <= 1e-8);
      }
    }
  }
}

TEST_CASE("threshold_scan rejects unusable heralds") {
  CHECK_THROWS_AS(threshold_scan(5, ModeAssignment{{1, 1, 1, 1}}), DomainError);  // forbidden
  CHECK_THROWS_AS(threshold_scan(11, ModeAssignment{{1}}), SizeLimitError);
}

TEST_CASE("scan totals match the closed-form herald probability") {
  for (int n = 3; n <= 7; ++n) {
    ScanOptions options;
    options.with_curves = false;
    options.jobs = 2;
    double total = 0.0;
    for (const HeraldReport& report : scan_heralds(n, options)) {
      if (report.valid_for_distillation()) total += report.q_i;
    }
    CHECK(std::abs(total - herald_probability_closed(n)) <= 1e-10);
  }
}

TEST_CASE("scheme-averaged error reduces to the single herald at N=3") {
  const ComplexMatrix u3 = fourier_unitary(3);
  const auto single = distilled_error(u3, 0.02, to_occupation(ModeAssignment{{1, 2}}, 2));
  REQUIRE(single.eps_prime.has_value());
  CHECK(std::abs(scheme_distilled_error(3, 0.02) - *single.eps_prime) <= 1e-13);
  // Averaging over heralds keeps the 1/n slope at small ε.
  CHECK(std::abs(scheme_distilled_error(6, 1e-5, 2) / 1e-5 - 1.0 / 6.0) <= 1e-3);
}
