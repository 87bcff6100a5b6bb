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

#ifndef FDISTILL_FOCK_HPP
#define FDISTILL_FOCK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fdistill {

/// Photon counts per optical mode. Mode indices are 1-based throughout the
/// public interface to match the usual interferometer labeling.
struct OccupationVector {
  std::vector<int> counts;

  int modes() const { return static_cast<int>(counts.size()); }
  int total_photons() const;

  /// μ = Π_i (counts_i)!  (valid up to 20 photons per mode).
  std::uint64_t multiplicity() const;

  bool operator==(const OccupationVector&) const = default;
  bool operator<(const OccupationVector& other) const { return counts < other.counts; }
};

/// Sorted list of 1-based mode indices, one entry per photon. Equivalent
/// encoding of an OccupationVector with the same total.
struct ModeAssignment {
  std::vector<int> modes;

  int photons() const { return static_cast<int>(modes.size()); }

  bool operator==(const ModeAssignment&) const = default;
  bool operator<(const ModeAssignment& other) const { return modes < other.modes; }
};

ModeAssignment to_assignment(const OccupationVector& occ);
OccupationVector to_occupation(const ModeAssignment& assignment, int n_modes);

/// "1;2;2;5" — the list form used in CSV output and herald labels.
std::string format_assignment(const ModeAssignment& assignment);

/// All occupations of n_photons over n_modes in ascending lexicographic
/// order of the count vectors. With fixed_last set, only occupations with
/// exactly that many photons in the last mode.
std::vector<OccupationVector> enumerate_outcomes(int n_modes, int n_photons,
                                                 std::optional<int> fixed_last = std::nullopt);

enum class ZtlClass { allowed, forbidden };

/// Zero-transmission law for the N-mode Fourier transform fed with one
/// photon per input mode: an outcome is forbidden when the sum of its
/// mode-assignment list is nonzero mod N. Allowed is necessary but not
/// sufficient for a nonzero probability.
ZtlClass classify_ztl(const OccupationVector& occ);

/// Canonical representative (lexicographically least assignment list) of
/// the outcome's orbit under the mode relabelings m -> a·m + b (mod N),
/// gcd(a, N) = 1, acting on 0-based indices. These relabelings leave every
/// outcome probability of the Fourier transform with single-photon inputs
/// unchanged: the shift b is the cyclic symmetry, a = N−1 is complex
/// conjugation, and a general unit multiplier permutes the (fully occupied)
/// input modes.
OccupationVector symmetry_class(const OccupationVector& occ);

/// All distinct outcomes in the symmetry orbit of occ.
std::vector<OccupationVector> symmetry_orbit(const OccupationVector& occ);

}  // namespace fdistill

#endif  // FDISTILL_FOCK_HPP
