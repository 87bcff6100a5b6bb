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

#include "fdistill/unitary.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

namespace fdistill {

namespace {

// Standard-normal pairs from a mt19937_64 stream. The engine is bit-exact
// across standard libraries; std::normal_distribution is not, so the
// Box-Muller step is done by hand.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  double uniform() {
    // 53-bit mantissa, uniform on [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

ComplexMatrix fourier_unitary(int n) {
  if (n < 1) throw DomainError("fourier_unitary: n must be at least 1");
  ComplexMatrix u(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // Exponent reduced mod n keeps the phase argument small.
      const long long e = (static_cast<long long>(j) * k) % n;
      u.at(j, k) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(e) / n);
    }
  }
  return u;
}

ComplexMatrix haar_unitary(int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("haar_unitary: n must be at least 1");
  GaussianStream gauss(seed);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = gauss.next();
      const double im = gauss.next();
      a(i, j) = Complex(re, im);
    }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom with Λ = diag(r_ii / |r_ii|); Q Λ is Haar.
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    const Complex phase = mag > 0.0 ? d / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  ComplexMatrix u(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u.at(i, j) = q(i, j);
  return u;
}

ComplexMatrix balanced_beamsplitter() {
  ComplexMatrix bs(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  bs.at(0, 0) = s;
  bs.at(0, 1) = Complex(0.0, s);
  bs.at(1, 0) = Complex(0.0, s);
  bs.at(1, 1) = s;
  return bs;
}

ComplexMatrix compose_distillation_circuit(int n) {
  if (n < 2) throw DomainError("compose_distillation_circuit: n must be at least 2");
  const ComplexMatrix fourier_ext = direct_sum(fourier_unitary(n), ComplexMatrix::identity(1));
  const ComplexMatrix bs_ext = direct_sum(ComplexMatrix::identity(n - 1), balanced_beamsplitter());
  // Rows index inputs, so "Fourier first, then beamsplitter" multiplies on the right.
  return matmul(fourier_ext, bs_ext);
}

}  // namespace fdistill
