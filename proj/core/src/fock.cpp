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

#include "fdistill/fock.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fdistill/errors.hpp"

namespace fdistill {

int OccupationVector::total_photons() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

std::uint64_t OccupationVector::multiplicity() const {
  std::uint64_t mu = 1;
  for (int c : counts) {
    if (c < 0) throw DomainError("occupation counts must be nonnegative");
    if (c > 20) throw SizeLimitError("multiplicity overflows past 20 photons in one mode");
    for (int k = 2; k <= c; ++k) mu *= static_cast<std::uint64_t>(k);
  }
  return mu;
}

ModeAssignment to_assignment(const OccupationVector& occ) {
  ModeAssignment a;
  a.modes.reserve(occ.total_photons());
  for (int m = 0; m < occ.modes(); ++m) {
    for (int k = 0; k < occ.counts[m]; ++k) a.modes.push_back(m + 1);
  }
  return a;
}

OccupationVector to_occupation(const ModeAssignment& assignment, int n_modes) {
  OccupationVector occ;
  occ.counts.assign(n_modes, 0);
  for (int m : assignment.modes) {
    if (m < 1 || m > n_modes) throw DomainError("mode index outside [1, n_modes]");
    ++occ.counts[m - 1];
  }
  return occ;
}

std::string format_assignment(const ModeAssignment& assignment) {
  std::string out;
  for (std::size_t i = 0; i < assignment.modes.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(assignment.modes[i]);
  }
  return out;
}

std::vector<OccupationVector> enumerate_outcomes(int n_modes, int n_photons,
                                                 std::optional<int> fixed_last) {
  if (n_modes < 1) throw DomainError("enumerate_outcomes: need at least one mode");
  if (n_photons < 0) throw DomainError("enumerate_outcomes: negative photon count");
  if (fixed_last && (*fixed_last < 0 || *fixed_last > n_photons))
    throw DomainError("enumerate_outcomes: fixed_last outside [0, n_photons]");

  const int free_modes = fixed_last ? n_modes - 1 : n_modes;
  const int free_photons = fixed_last ? n_photons - *fixed_last : n_photons;
  if (fixed_last && free_modes == 0 && free_photons != 0) return {};

  std::vector<OccupationVector> result;
  std::vector<int> counts(free_modes, 0);
  // Ascending lexicographic order by recursing on the leading count.
  auto rec = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == free_modes - 1) {
      counts[mode] = remaining;
      OccupationVector occ{counts};
      if (fixed_last) occ.counts.push_back(*fixed_last);
      result.push_back(std::move(occ));
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[mode] = c;
      self(self, mode + 1, remaining - c);
    }
  };
  if (free_modes == 0) {
    OccupationVector occ;
    occ.counts.push_back(*fixed_last);
    result.push_back(std::move(occ));
  } else {
    rec(rec, 0, free_photons);
  }
  return result;
}

ZtlClass classify_ztl(const OccupationVector& occ) {
  const int n = occ.modes();
  if (n < 1) throw DomainError("classify_ztl: empty occupation");
  long long sum = 0;
  for (int m = 0; m < n; ++m) sum += static_cast<long long>(occ.counts[m]) * (m + 1);
  return (sum % n == 0) ? ZtlClass::allowed : ZtlClass::forbidden;
}

namespace {

std::vector<int> relabeled_sorted(const std::vector<int>& modes0, int a, int b, int n) {
  std::vector<int> out(modes0.size());
  for (std::size_t i = 0; i < modes0.size(); ++i) out[i] = (a * modes0[i] + b) % n;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

OccupationVector symmetry_class(const OccupationVector& occ) {
  const int n = occ.modes();
  const ModeAssignment assignment = to_assignment(occ);
  std::vector<int> modes0(assignment.modes.size());
  for (std::size_t i = 0; i < modes0.size(); ++i) modes0[i] = assignment.modes[i] - 1;

  std::vector<int> best;
  for (int a = 1; a < std::max(n, 2); ++a) {
    if (std::gcd(a, n) != 1) continue;
    for (int b = 0; b < n; ++b) {
      std::vector<int> candidate = relabeled_sorted(modes0, a, b, n);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  if (best.empty()) best = modes0;  // n == 1

  ModeAssignment canonical;
  canonical.modes.resize(best.size());
  for (std::size_t i = 0; i < best.size(); ++i) canonical.modes[i] = best[i] + 1;
  return to_occupation(canonical, n);
}

std::vector<OccupationVector> symmetry_orbit(const OccupationVector& occ) {
  const int n = occ.modes();
  const ModeAssignment assignment = to_assignment(occ);
  std::vector<int> modes0(assignment.modes.size());
  for (std::size_t i = 0; i < modes0.size(); ++i) modes0[i] = assignment.modes[i] - 1;

  std::set<std::vector<int>> seen;
  for (int a = 1; a < std::max(n, 2); ++a) {
    if (std::gcd(a, n) != 1) continue;
    for (int b = 0; b < n; ++b) seen.insert(relabeled_sorted(modes0, a, b, n));
  }
  if (seen.empty()) seen.insert(modes0);

  std::vector<OccupationVector> orbit;
  orbit.reserve(seen.size());
  for (const auto& modes : seen) {
    ModeAssignment member;
    member.modes.resize(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) member.modes[i] = modes[i] + 1;
    orbit.push_back(to_occupation(member, n));
  }
  return orbit;
}

}  // namespace fdistill
