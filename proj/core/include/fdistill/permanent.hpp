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

#ifndef FDISTILL_PERMANENT_HPP
#define FDISTILL_PERMANENT_HPP

#include "fdistill/matrix.hpp"

namespace fdistill {

/// Largest accepted permanent size. Ryser at n = 24 is ~4e8 subset steps,
/// about the limit of what finishes in seconds on one core.
inline constexpr int kMaxPermanentSize = 24;

/// Permanent of a square matrix via Ryser's formula with Gray-code subset
/// updates, O(n 2^n). Throws DimensionError for non-square input and
/// SizeLimitError for n > kMaxPermanentSize.
Complex permanent(const ComplexMatrix& m);

/// O(n!) expansion over all permutations. Test oracle for the Ryser path;
/// capped at n <= 7.
Complex permanent_naive(const ComplexMatrix& m);

namespace detail {

/// Ryser kernel over externally owned rows (each of length n). No size or
/// shape checks; callers guarantee n <= kMaxPermanentSize.
Complex permanent_of_rows(const Complex* const* rows, int n);

}  // namespace detail

}  // namespace fdistill

#endif  // FDISTILL_PERMANENT_HPP
