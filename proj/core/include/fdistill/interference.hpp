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

#ifndef FDISTILL_INTERFERENCE_HPP
#define FDISTILL_INTERFERENCE_HPP

#include <optional>
#include <vector>

#include "fdistill/fock.hpp"
#include "fdistill/matrix.hpp"

namespace fdistill {

/// Photon count above which the exact partial-distinguishability kernel
/// (a sum over error sets, ~4^N subset-permanent steps) is refused.
inline constexpr int kMaxInterferencePhotons = 14;

/// Probabilities at or below this value are treated as exactly zero when
/// conditioning on a herald.
inline constexpr double kZeroProbabilityThreshold = 1e-14;

/// Decomposition of one outcome probability into j-photon interference
/// contributions: q(x) = Σ_j c_j x^j with x the pairwise overlap. c_1 is
/// identically zero (no permutation moves exactly one element).
struct CoefficientVector {
  int n_photons = 0;
  std::vector<double> c;  // c[0..n_photons]

  double q(double x) const;

  /// Σ_j c_j — the outcome probability for fully indistinguishable photons.
  double sum() const;

  /// Σ_j c_j j.
  double first_moment() const;

  double sum_abs() const;
};

/// One term of the orthogonal bad-bit expansion: the photons in error_set
/// (1-based source indices) are mutually orthogonal to everything.
struct MixtureTerm {
  std::vector<int> error_set;
  double weight;  // ε^|S| (1-ε)^(N-|S|)
};

/// All 2^n mixture terms; weights sum to one for any ε in [0, 1].
std::vector<MixtureTerm> mixture_terms(int n, double eps);

/// Gram matrix of internal states in the uniform bad-bit model: unit
/// diagonal, every off-diagonal entry equal to x.
ComplexMatrix uniform_gram(int n, double x);

/// Submatrix M of u with rows repeated per input occupation and columns
/// repeated per output occupation. Throws DimensionError when the photon
/// totals disagree.
ComplexMatrix outcome_submatrix(const ComplexMatrix& u, const OccupationVector& input,
                                const OccupationVector& output);

/// Exact error-set-resolved profile of one outcome for single-photon inputs.
///
/// For an error set T (photons in T fully distinguishable, the rest
/// identical) the outcome probability is
///
///   P_T = (1/μ) Σ_L perm(|M|²[T, L]) |perm(M[T̄, L̄])|²,
///
/// summed over the output slots L taken by the error photons. The profile
/// stores these aggregated by |T| = t, so any uniform error probability can
/// be evaluated afterwards at no cost:
///
///   q(ε) = Σ_t ε^t (1-ε)^(N-t) prob_by_errors[t].
struct OutcomeProfile {
  int n = 0;         // photon count
  double mu = 1.0;   // output multiplicity
  bool last_mode_single = false;

  std::vector<double> prob_by_errors;           // index t = |T|
  std::vector<double> last_mode_bad_by_errors;  // P(outcome ∧ error photon in last mode)

  /// Outcome probability at uniform error probability eps. Evaluates the
  /// polynomial without range checks so that derivative tests may probe
  /// slightly outside [0, 1].
  double probability(double eps) const;

  /// Probability at ε = 0 (fully indistinguishable photons).
  double indistinguishable_probability() const { return prob_by_errors.empty() ? 0.0 : prob_by_errors[0]; }

  /// One-error outcome probability λ; equals prob_by_errors[1] / n.
  double lambda() const;

  /// Exact interference coefficients from the binomial expansion of
  /// Σ_t (1-x)^t x^(N-t) prob_by_errors[t].
  CoefficientVector coefficients() const;
};

/// Computes the profile for an outcome of u fed with one photon per input
/// mode. Cost grows as ~4^n; photon counts above kMaxInterferencePhotons
/// are refused.
OutcomeProfile analyze_outcome(const ComplexMatrix& u, const OccupationVector& output);

/// Interference coefficients by direct enumeration of all N! row
/// permutations grouped by their number of non-fixed points,
/// c_j = (1/μ) Σ_{σ: j moved} perm(M ∘ conj(M_σ)). Exact but factorial;
/// capped at N = 8 — use coefficients_interpolated beyond that.
CoefficientVector coefficients_direct(const ComplexMatrix& u, const OccupationVector& input,
                                      const OccupationVector& output);

/// Coefficients from a degree-N polynomial fit of q(x) through N+1
/// Chebyshev nodes mapped to [0, 1], solved by least squares with the
/// (structurally zero) linear term excluded from the basis. Throws
/// ConditioningError when the fit residual exceeds 1e-8 relative.
CoefficientVector coefficients_interpolated(const ComplexMatrix& u, const OccupationVector& input,
                                            const OccupationVector& output);

/// Outcome probability at uniform pairwise overlap x ∈ [0, 1] (x = 1 - ε).
double outcome_probability(const ComplexMatrix& u, const OccupationVector& input,
                           const OccupationVector& output, double x);

struct MixtureOutcome {
  double probability = 0.0;
  /// Per source photon: probability that this photon occupies the last
  /// output mode jointly with the outcome. Photons inside the
  /// indistinguishable group share their total symmetrically.
  std::vector<double> last_mode_joint;
};

/// Outcome probability for one fixed error set (1-based source indices).
MixtureOutcome mixture_outcome(const ComplexMatrix& u, const std::vector<int>& error_set,
                               const OccupationVector& output);

struct DistillationPoint {
  /// Conditional error of the mode-N photon given the herald; empty when
  /// the herald probability vanishes and the conditional is undefined.
  std::optional<double> eps_prime;
  double herald_probability = 0.0;
};

/// Exact distilled error for a herald on modes 1..N-1 (occupation summing
/// to N-1, forcing a single photon into mode N): ε' is the posterior
/// probability that the mode-N photon is an error photon, from the full
/// 2^N orthogonal bad-bit mixture.
DistillationPoint distilled_error(const ComplexMatrix& u, double eps,
                                  const OccupationVector& herald);

}  // namespace fdistill

#endif  // FDISTILL_INTERFERENCE_HPP
