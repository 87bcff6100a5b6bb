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

#include "fdistill/interference.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "fdistill/permanent.hpp"

namespace fdistill {

namespace {

constexpr double kRealificationTol = 1e-12;
constexpr double kFitResidualLimit = 1e-8;

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_single_photon_input(const OccupationVector& input, int n) {
  if (input.modes() != n)
    throw DimensionError("input occupation does not match the circuit size");
  for (int c : input.counts) {
    if (c != 1) throw DomainError("only one photon per input mode is supported");
  }
}

// Slot representation of one outcome: column k of the submatrix is the
// column of u belonging to the k-th entry of the output assignment list.
struct SlotMatrices {
  int n = 0;
  std::vector<Complex> m;        // m[i*n + k] = U(i, mode of slot k)
  std::vector<double> q;         // squared moduli of m
  std::uint32_t last_mode_slots = 0;
};

SlotMatrices build_slots(const ComplexMatrix& u, const OccupationVector& output) {
  if (!u.square()) throw DimensionError("circuit matrix must be square");
  const int n = u.rows();
  if (output.modes() != n) throw DimensionError("output occupation does not match the circuit");
  if (output.total_photons() != n)
    throw DimensionError("photon total must equal the number of input photons");
  if (n > kMaxInterferencePhotons)
    throw SizeLimitError("exact interference kernel capped at 14 photons");

  SlotMatrices s;
  s.n = n;
  s.m.resize(static_cast<std::size_t>(n) * n);
  s.q.resize(static_cast<std::size_t>(n) * n);
  const ModeAssignment assignment = to_assignment(output);
  for (int k = 0; k < n; ++k) {
    const int mode = assignment.modes[k] - 1;
    if (mode == n - 1) s.last_mode_slots |= (1u << k);
    for (int i = 0; i < n; ++i) {
      const Complex v = u.at(i, mode);
      s.m[static_cast<std::size_t>(i) * n + k] = v;
      s.q[static_cast<std::size_t>(i) * n + k] = std::norm(v);
    }
  }
  return s;
}

std::vector<std::vector<std::uint32_t>> masks_by_popcount(int n) {
  std::vector<std::vector<std::uint32_t>> by_count(n + 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    by_count[std::popcount(mask)].push_back(mask);
  return by_count;
}

// dp[mask] = permanent of the |mask| x |mask| matrix made of the first
// popcount(mask) rows and the columns in mask. Rows are consumed in the
// order given; only layers up to the row count are written.
template <typename T>
void subset_permanents(const T* const* rows, int n_rows, int n_cols,
                       const std::vector<std::vector<std::uint32_t>>& by_count,
                       std::vector<T>& dp) {
  dp[0] = T(1);
  for (int r = 1; r <= n_rows; ++r) {
    const T* row = rows[r - 1];
    for (const std::uint32_t mask : by_count[r]) {
      T acc{};
      std::uint32_t rest = mask;
      while (rest) {
        const std::uint32_t bit = rest & (0u - rest);
        acc += dp[mask ^ bit] * row[std::countr_zero(bit)];
        rest ^= bit;
      }
      dp[mask] = acc;
    }
  }
  (void)n_cols;
}

}  // namespace

double CoefficientVector::q(double x) const {
  double result = 0.0;
  double xp = 1.0;
  for (int j = 0; j <= n_photons; ++j) {
    result += c[j] * xp;
    xp *= x;
  }
  return result;
}

double CoefficientVector::sum() const {
  double s = 0.0;
  for (double v : c) s += v;
  return s;
}

double CoefficientVector::first_moment() const {
  double s = 0.0;
  for (int j = 0; j <= n_photons; ++j) s += c[j] * j;
  return s;
}

double CoefficientVector::sum_abs() const {
  double s = 0.0;
  for (double v : c) s += std::abs(v);
  return s;
}

std::vector<MixtureTerm> mixture_terms(int n, double eps) {
  if (eps < 0.0 || eps > 1.0) throw DomainError("mixture_terms: eps outside [0, 1]");
  if (n < 0 || n > kMaxInterferencePhotons) throw SizeLimitError("mixture_terms: n outside [0, 14]");
  std::vector<MixtureTerm> terms;
  terms.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    MixtureTerm term;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) term.error_set.push_back(i + 1);
    const int t = std::popcount(mask);
    term.weight = std::pow(eps, t) * std::pow(1.0 - eps, n - t);
    terms.push_back(std::move(term));
  }
  return terms;
}

ComplexMatrix uniform_gram(int n, double x) {
  if (x < 0.0 || x > 1.0) throw DomainError("uniform_gram: overlap outside [0, 1]");
  ComplexMatrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.at(i, j) = (i == j) ? 1.0 : x;
  return s;
}

ComplexMatrix outcome_submatrix(const ComplexMatrix& u, const OccupationVector& input,
                                const OccupationVector& output) {
  if (!u.square()) throw DimensionError("circuit matrix must be square");
  const int n = u.rows();
  if (input.modes() != n || output.modes() != n)
    throw DimensionError("occupations do not match the circuit size");
  const int total = input.total_photons();
  if (total != output.total_photons())
    throw DimensionError("input and output photon totals differ");

  const ModeAssignment in = to_assignment(input);
  const ModeAssignment out = to_assignment(output);
  ComplexMatrix m(total, total);
  for (int i = 0; i < total; ++i)
    for (int k = 0; k < total; ++k) m.at(i, k) = u.at(in.modes[i] - 1, out.modes[k] - 1);
  return m;
}

double OutcomeProfile::probability(double eps) const {
  double result = 0.0;
  double ep = 1.0;
  for (int t = 0; t <= n; ++t) {
    result += ep * std::pow(1.0 - eps, n - t) * prob_by_errors[t];
    ep *= eps;
  }
  return result;
}

double OutcomeProfile::lambda() const {
  return n > 0 ? prob_by_errors[1] / n : 0.0;
}

CoefficientVector OutcomeProfile::coefficients() const {
  CoefficientVector cv;
  cv.n_photons = n;
  cv.c.assign(n + 1, 0.0);
  // q(x) = Σ_t (1-x)^t x^(N-t) B_t expanded into monomials.
  for (int t = 0; t <= n; ++t) {
    const double b = prob_by_errors[t];
    if (b == 0.0) continue;
    double sign = 1.0;
    for (int r = 0; r <= t; ++r) {
      cv.c[n - t + r] += sign * binom(t, r) * b;
      sign = -sign;
    }
  }
  return cv;
}

OutcomeProfile analyze_outcome(const ComplexMatrix& u, const OccupationVector& output) {
  const SlotMatrices slots = build_slots(u, output);
  const int n = slots.n;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  const auto by_count = masks_by_popcount(n);

  OutcomeProfile profile;
  profile.n = n;
  profile.mu = static_cast<double>(output.multiplicity());
  profile.last_mode_single = output.counts.back() == 1;
  profile.prob_by_errors.assign(n + 1, 0.0);
  profile.last_mode_bad_by_errors.assign(n + 1, 0.0);

  std::vector<Complex> dpm(std::size_t{1} << n);
  std::vector<double> dpq(std::size_t{1} << n);
  std::vector<const Complex*> rows_m(n);
  std::vector<const double*> rows_q(n);

  for (std::uint32_t good = 0; good <= full; ++good) {
    const int g = std::popcount(good);
    const int t = n - g;
    int im = 0, iq = 0;
    for (int i = 0; i < n; ++i) {
      if (good >> i & 1u) {
        rows_m[im++] = slots.m.data() + static_cast<std::size_t>(i) * n;
      } else {
        rows_q[iq++] = slots.q.data() + static_cast<std::size_t>(i) * n;
      }
    }
    subset_permanents(rows_m.data(), g, n, by_count, dpm);
    subset_permanents(rows_q.data(), t, n, by_count, dpq);

    double acc = 0.0;
    double acc_bad_last = 0.0;
    for (const std::uint32_t k : by_count[g]) {
      const double w = std::norm(dpm[k]) * dpq[full ^ k];
      acc += w;
      if ((full ^ k) & slots.last_mode_slots) acc_bad_last += w;
    }
    profile.prob_by_errors[t] += acc;
    profile.last_mode_bad_by_errors[t] += acc_bad_last;
  }

  for (int t = 0; t <= n; ++t) {
    profile.prob_by_errors[t] /= profile.mu;
    profile.last_mode_bad_by_errors[t] /= profile.mu;
  }
  return profile;
}

CoefficientVector coefficients_direct(const ComplexMatrix& u, const OccupationVector& input,
                                      const OccupationVector& output) {
  const int n = u.rows();
  require_single_photon_input(input, n);
  if (n > 8)
    throw SizeLimitError(
        "coefficients_direct enumerates all N! permutations and is capped at N = 8; "
        "use coefficients_interpolated");
  const SlotMatrices slots = build_slots(u, output);

  // pair[(a*n + b)*n + k] = M_ak conj(M_bk): row a of M ∘ conj(M with row b).
  std::vector<Complex> pair(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        pair[(static_cast<std::size_t>(a) * n + b) * n + k] =
            slots.m[static_cast<std::size_t>(a) * n + k] *
            std::conj(slots.m[static_cast<std::size_t>(b) * n + k]);

  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  std::vector<const Complex*> rows(n);
  // Each class sums up to N!/e permanents with heavy cancellation;
  // Neumaier compensation keeps the residual of the coefficient identity
  // near machine precision even at N = 8.
  std::vector<Complex> sums(n + 1, Complex{});
  std::vector<Complex> comp(n + 1, Complex{});
  auto accumulate = [](Complex& sum, Complex& c, const Complex& v) {
    const Complex t = sum + v;
    const double cr = std::abs(sum.real()) >= std::abs(v.real())
                          ? (sum.real() - t.real()) + v.real()
                          : (v.real() - t.real()) + sum.real();
    const double ci = std::abs(sum.imag()) >= std::abs(v.imag())
                          ? (sum.imag() - t.imag()) + v.imag()
                          : (v.imag() - t.imag()) + sum.imag();
    c += Complex(cr, ci);
    sum = t;
  };
  do {
    int moved = 0;
    for (int i = 0; i < n; ++i) {
      if (sigma[i] != i) ++moved;
      rows[i] = pair.data() + (static_cast<std::size_t>(i) * n + sigma[i]) * n;
    }
    accumulate(sums[moved], comp[moved], detail::permanent_of_rows(rows.data(), n));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  for (int j = 0; j <= n; ++j) sums[j] += comp[j];

  const double mu = static_cast<double>(output.multiplicity());
  double scale = 0.0;
  for (const Complex& s : sums) scale += std::abs(s);
  CoefficientVector cv;
  cv.n_photons = n;
  cv.c.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    if (std::abs(sums[j].imag()) > kRealificationTol * scale)
      throw ConditioningError("interference coefficient has a non-negligible imaginary part");
    cv.c[j] = sums[j].real() / mu;
  }
  return cv;
}

CoefficientVector coefficients_interpolated(const ComplexMatrix& u, const OccupationVector& input,
                                            const OccupationVector& output) {
  const int n = u.rows();
  require_single_photon_input(input, n);
  const OutcomeProfile profile = analyze_outcome(u, output);

  // Chebyshev points mapped to [0, 1].
  Eigen::VectorXd nodes(n + 1), q(n + 1);
  for (int k = 0; k <= n; ++k) {
    nodes[k] = 0.5 + 0.5 * std::cos((2 * k + 1) * std::numbers::pi / (2.0 * (n + 1)));
    q[k] = profile.probability(1.0 - nodes[k]);
  }

  // Monomial basis without the x^1 column; the linear coefficient vanishes
  // identically, so it is projected out of the fit.
  Eigen::MatrixXd v(n + 1, n);
  for (int k = 0; k <= n; ++k) {
    double xp = 1.0;
    int col = 0;
    for (int j = 0; j <= n; ++j) {
      if (j != 1) v(k, col++) = xp;
      xp *= nodes[k];
    }
  }
  const Eigen::VectorXd sol = v.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(q);

  const double q_scale = std::max(q.cwiseAbs().maxCoeff(), 1e-300);
  const double residual = (v * sol - q).cwiseAbs().maxCoeff() / q_scale;
  if (residual > kFitResidualLimit)
    throw ConditioningError("polynomial fit residual above 1e-8 relative");

  CoefficientVector cv;
  cv.n_photons = n;
  cv.c.assign(n + 1, 0.0);
  int col = 0;
  for (int j = 0; j <= n; ++j) {
    if (j == 1) continue;
    cv.c[j] = sol[col++];
  }
  return cv;
}

double outcome_probability(const ComplexMatrix& u, const OccupationVector& input,
                           const OccupationVector& output, double x) {
  if (x < 0.0 || x > 1.0) throw DomainError("outcome_probability: overlap outside [0, 1]");
  require_single_photon_input(input, u.rows());
  return analyze_outcome(u, output).probability(1.0 - x);
}

MixtureOutcome mixture_outcome(const ComplexMatrix& u, const std::vector<int>& error_set,
                               const OccupationVector& output) {
  const SlotMatrices slots = build_slots(u, output);
  const int n = slots.n;
  const std::uint32_t full = (1u << n) - 1u;

  std::uint32_t bad = 0;
  for (int k : error_set) {
    if (k < 1 || k > n) throw DomainError("error set index outside [1, N]");
    if (bad >> (k - 1) & 1u) throw DomainError("duplicate index in error set");
    bad |= 1u << (k - 1);
  }
  const int t = std::popcount(bad);
  const auto by_count = masks_by_popcount(n);
  const double mu = static_cast<double>(output.multiplicity());

  std::vector<const Complex*> rows_m;
  std::vector<const double*> rows_q;
  for (int i = 0; i < n; ++i) {
    if (bad >> i & 1u) {
      rows_q.push_back(slots.q.data() + static_cast<std::size_t>(i) * n);
    } else {
      rows_m.push_back(slots.m.data() + static_cast<std::size_t>(i) * n);
    }
  }
  std::vector<Complex> dpm(std::size_t{1} << n);
  std::vector<double> dpq(std::size_t{1} << n);
  subset_permanents(rows_m.data(), n - t, n, by_count, dpm);
  subset_permanents(rows_q.data(), t, n, by_count, dpq);

  MixtureOutcome result;
  result.last_mode_joint.assign(n, 0.0);
  double good_last_total = 0.0;
  for (const std::uint32_t l : by_count[t]) {
    const double w = dpq[l] * std::norm(dpm[full ^ l]);
    result.probability += w;
    const int good_z = std::popcount((full ^ l) & slots.last_mode_slots);
    if (good_z > 0) good_last_total += w * good_z;
  }
  result.probability /= mu;

  // Error photons: split perm(Q[T, L]) by which photon sits in a last-mode
  // slot. Good photons: the symmetric share of the remaining occupancy.
  std::vector<double> dpq_minus(std::size_t{1} << n);
  for (int k = 0; k < n; ++k) {
    if (!(bad >> k & 1u)) continue;
    std::vector<const double*> rows_rest;
    for (int i = 0; i < n; ++i)
      if ((bad >> i & 1u) && i != k) rows_rest.push_back(slots.q.data() + static_cast<std::size_t>(i) * n);
    subset_permanents(rows_rest.data(), t - 1, n, by_count, dpq_minus);
    double acc = 0.0;
    for (const std::uint32_t l : by_count[t]) {
      std::uint32_t zz = l & slots.last_mode_slots;
      if (!zz) continue;
      const double m2 = std::norm(dpm[full ^ l]);
      while (zz) {
        const std::uint32_t bit = zz & (0u - zz);
        acc += slots.q[static_cast<std::size_t>(k) * n + std::countr_zero(bit)] *
               dpq_minus[l ^ bit] * m2;
        zz ^= bit;
      }
    }
    result.last_mode_joint[k] = acc / mu;
  }
  if (n - t > 0) {
    const double share = good_last_total / mu / (n - t);
    for (int k = 0; k < n; ++k)
      if (!(bad >> k & 1u)) result.last_mode_joint[k] = share;
  }
  return result;
}

DistillationPoint distilled_error(const ComplexMatrix& u, double eps,
                                  const OccupationVector& herald) {
  if (eps < 0.0 || eps > 1.0) throw DomainError("distilled_error: eps outside [0, 1]");
  const int n = u.rows();
  if (herald.modes() != n - 1)
    throw DimensionError("herald must cover modes 1..N-1");
  if (herald.total_photons() != n - 1)
    throw DimensionError("herald must contain N-1 photons (one photon reaches mode N)");

  OccupationVector output = herald;
  output.counts.push_back(1);
  const OutcomeProfile profile = analyze_outcome(u, output);

  DistillationPoint point;
  point.herald_probability = profile.probability(eps);
  if (point.herald_probability <= kZeroProbabilityThreshold) return point;

  double bad = 0.0;
  double ep = 1.0;
  for (int t = 0; t <= n; ++t) {
    bad += ep * std::pow(1.0 - eps, n - t) * profile.last_mode_bad_by_errors[t];
    ep *= eps;
  }
  point.eps_prime = bad / point.herald_probability;
  return point;
}

}  // namespace fdistill
