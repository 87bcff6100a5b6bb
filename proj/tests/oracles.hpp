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

// Brute-force reference implementations for the test suite. These are kept
// deliberately independent of the library's computational paths: no Ryser,
// no subset dynamic programming, just literal sums over permutations.

#ifndef FDISTILL_TESTS_ORACLES_HPP
#define FDISTILL_TESTS_ORACLES_HPP

#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include "fdistill/fock.hpp"
#include "fdistill/matrix.hpp"

namespace fdistill::testing {

/// Outcome probability at uniform pairwise overlap x by the full
/// double-permutation sum
///   q = (1/μ) Σ_{ρ,π} Π_i S_{i,π(i)} U_{i,m(ρ(i))} conj(U_{i,m(ρ(π(i)))}),
/// O((N!)^2); practical for N <= 5.
inline double outcome_probability_bruteforce(const ComplexMatrix& u,
                                             const OccupationVector& occ, double x) {
  const int n = u.rows();
  const ModeAssignment assignment = to_assignment(occ);
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = assignment.modes[i] - 1;

  std::vector<int> rho(n), pi(n);
  std::iota(rho.begin(), rho.end(), 0);
  Complex total{};
  do {
    std::iota(pi.begin(), pi.end(), 0);
    do {
      Complex prod = 1.0;
      for (int i = 0; i < n; ++i) {
        const double s = (pi[i] == i) ? 1.0 : x;
        prod *= s * u.at(i, m[rho[i]]) * std::conj(u.at(i, m[rho[pi[i]]]));
      }
      total += prod;
    } while (std::next_permutation(pi.begin(), pi.end()));
  } while (std::next_permutation(rho.begin(), rho.end()));
  return total.real() / static_cast<double>(occ.multiplicity());
}

/// Number of n-photon occupations over n modes whose assignment-list sum is
/// divisible by n, counted by dynamic programming over (mode, photons left,
/// residue). Independent of the enumeration + classification pipeline.
inline long count_allowed_outcomes(int n) {
  // ways[p][r]: multisets using modes processed so far, p photons, sum ≡ r.
  std::vector<std::vector<long>> ways(n + 1, std::vector<long>(n, 0));
  ways[0][0] = 1;
  for (int mode = 1; mode <= n; ++mode) {
    std::vector<std::vector<long>> next(n + 1, std::vector<long>(n, 0));
    for (int p = 0; p <= n; ++p)
      for (int r = 0; r < n; ++r) {
        if (!ways[p][r]) continue;
        for (int c = 0; p + c <= n; ++c)
          next[p + c][(r + c * mode) % n] += ways[p][r];
      }
    ways = std::move(next);
  }
  return ways[n][0];
}

}  // namespace fdistill::testing

#endif  // FDISTILL_TESTS_ORACLES_HPP
