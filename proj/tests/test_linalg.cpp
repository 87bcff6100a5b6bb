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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fdistill/fock.hpp"
#include "fdistill/interference.hpp"
#include "fdistill/matrix.hpp"
#include "fdistill/permanent.hpp"
#include "fdistill/unitary.hpp"

using namespace fdistill;

namespace {

ComplexMatrix random_complex(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("permanent of small identities and counting matrices") {
  CHECK(std::abs(permanent(ComplexMatrix::identity(2)) - Complex(1.0)) < 1e-15);

  for (int n = 1; n <= 10; ++n) {
    ComplexMatrix ones(n, n);
    for (auto& e : ones.entries()) e = 1.0;
    CHECK(std::abs(permanent(ones) - Complex(factorial(n))) < 1e-9 * factorial(n));
  }

  // k x k block of a Fourier matrix column: every entry 1/sqrt(N) gives k!/N^(k/2).
  const int k = 4, big_n = 5;
  ComplexMatrix flat(k, k);
  for (auto& e : flat.entries()) e = 1.0 / std::sqrt(static_cast<double>(big_n));
  const double expected = factorial(k) / std::pow(static_cast<double>(big_n), k / 2.0);
  CHECK(std::abs(permanent(flat) - Complex(expected)) < 1e-14);
}

TEST_CASE("permanent vanishes exactly on a zero row") {
  ComplexMatrix m = random_complex(6, 42);
  for (int j = 0; j < 6; ++j) m.at(3, j) = 0.0;
  CHECK(permanent(m) == Complex(0.0));
}

TEST_CASE("permanent is invariant under row and column permutations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const ComplexMatrix m = random_complex(n, rng());
    std::vector<int> rp(n), cp(n);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    ComplexMatrix permuted(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) permuted.at(i, j) = m.at(rp[i], cp[j]);
    const Complex a = permanent(m);
    const Complex b = permanent(permuted);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("Ryser path agrees with the naive expansion up to n = 7") {
  std::mt19937_64 rng(123);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const ComplexMatrix m = random_complex(n, rng());
      const Complex fast = permanent(m);
      const Complex slow = permanent_naive(m);
      CHECK(std::abs(fast - slow) <= 1e-10 * std::max(1.0, std::abs(slow)));
    }
  }
}

TEST_CASE("permanent rejects bad input") {
  CHECK_THROWS_AS(permanent(ComplexMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(permanent(ComplexMatrix(25, 25)), SizeLimitError);
  CHECK_THROWS_AS(permanent_naive(ComplexMatrix(8, 8)), SizeLimitError);
}

TEST_CASE("fourier_unitary entries and unitarity") {
  const ComplexMatrix u1 = fourier_unitary(1);
  CHECK(std::abs(u1.at(0, 0) - Complex(1.0)) < 1e-15);

  const ComplexMatrix u2 = fourier_unitary(2);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(u2.at(0, 0) - Complex(s)) < 1e-15);
  CHECK(std::abs(u2.at(0, 1) - Complex(s)) < 1e-15);
  CHECK(std::abs(u2.at(1, 0) - Complex(s)) < 1e-15);
  CHECK(std::abs(u2.at(1, 1) - Complex(-s)) < 1e-15);

  const ComplexMatrix u3 = fourier_unitary(3);
  const Complex expected = std::polar(1.0 / std::sqrt(3.0), 2.0 * M_PI / 3.0);
  CHECK(std::abs(u3.at(1, 1) - expected) < 1e-15);

  for (int n : {2, 3, 5, 8, 13, 16}) CHECK(unitarity_defect(fourier_unitary(n)) <= 1e-12);
  CHECK_THROWS_AS(fourier_unitary(0), DomainError);
}

TEST_CASE("haar_unitary is deterministic per seed and unitary") {
  const ComplexMatrix a = haar_unitary(3, 2024);
  const ComplexMatrix b = haar_unitary(3, 2024);
  CHECK(a.entries() == b.entries());
  const ComplexMatrix c = haar_unitary(3, 2025);
  CHECK(a.entries() != c.entries());
  for (int n : {2, 3, 5, 8}) {
    for (std::uint64_t seed : {1ull, 99ull}) CHECK(unitarity_defect(haar_unitary(n, seed)) <= 1e-12);
  }
}

TEST_CASE("haar_unitary first moment matches 1/n") {
  // |U_11|^2 is Beta(1, n-1): mean 1/n, variance (n-1)/(n^2 (n+1)).
  const int n = 3;
  const int samples = 10000;
  double mean = 0.0;
  for (int s = 0; s < samples; ++s) mean += std::norm(haar_unitary(n, 1000 + s).at(0, 0));
  mean /= samples;
  const double sigma = std::sqrt((n - 1.0) / (static_cast<double>(n) * n * (n + 1.0)) / samples);
  CHECK(std::abs(mean - 1.0 / n) <= 5.0 * sigma);
}

TEST_CASE("compose_distillation_circuit block structure") {
  for (int n : {2, 4, 5}) {
    const ComplexMatrix circuit = compose_distillation_circuit(n);
    CHECK(circuit.rows() == n + 1);
    CHECK(unitarity_defect(circuit) <= 1e-12);

    // Herald outputs bypass the beamsplitter: the first n-1 columns of the
    // Fourier rows survive unchanged, and the reference input never reaches
    // them.
    const ComplexMatrix f = fourier_unitary(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j + 1 < n; ++j) CHECK(std::abs(circuit.at(i, j) - f.at(i, j)) < 1e-15);
    for (int j = 0; j + 1 < n; ++j) CHECK(std::abs(circuit.at(n, j)) < 1e-15);
  }
  CHECK_THROWS_AS(compose_distillation_circuit(1), DomainError);
}

TEST_CASE("compose_distillation_circuit conserves probability for 6 photons") {
  const ComplexMatrix circuit = compose_distillation_circuit(5);
  OccupationVector input;
  input.counts.assign(6, 1);
  double total = 0.0;
  for (const OccupationVector& occ : enumerate_outcomes(6, 6)) {
    total += outcome_probability(circuit, input, occ, 1.0);
  }
  CHECK(std::abs(total - 1.0) <= 1e-10);
}

TEST_CASE("matrix helpers") {
  const ComplexMatrix bs = balanced_beamsplitter();
  CHECK(unitarity_defect(bs) <= 1e-15);
  const ComplexMatrix sum = direct_sum(ComplexMatrix::identity(2), bs);
  CHECK(sum.rows() == 4);
  CHECK(std::abs(sum.at(2, 3) - Complex(0.0, 1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionError);
  CHECK(is_unitary(fourier_unitary(4)));
  CHECK_FALSE(is_unitary(random_complex(4, 5)));
}
