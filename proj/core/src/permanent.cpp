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

#include "fdistill/permanent.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace fdistill {

namespace detail {

Complex permanent_of_rows(const Complex* const* rows, int n) {
  if (n == 0) return 1.0;
  // Ryser: perm(A) = (-1)^n Σ_{S≠∅} (-1)^|S| Π_i Σ_{j∈S} A_ij, with the
  // subsets visited in Gray-code order so each step touches one column.
  std::array<double, 2 * kMaxPermanentSize> rowsum{};
  double total_re = 0.0, total_im = 0.0;
  std::uint32_t gray = 0;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    const std::uint32_t next = static_cast<std::uint32_t>(k ^ (k >> 1));
    const std::uint32_t bit = next ^ gray;
    const int j = std::countr_zero(bit);
    if (next & bit) {
      for (int i = 0; i < n; ++i) {
        rowsum[2 * i] += rows[i][j].real();
        rowsum[2 * i + 1] += rows[i][j].imag();
      }
    } else {
      for (int i = 0; i < n; ++i) {
        rowsum[2 * i] -= rows[i][j].real();
        rowsum[2 * i + 1] -= rows[i][j].imag();
      }
    }
    gray = next;
    double pr = rowsum[0], pi = rowsum[1];
    for (int i = 1; i < n; ++i) {
      const double r = pr * rowsum[2 * i] - pi * rowsum[2 * i + 1];
      pi = pr * rowsum[2 * i + 1] + pi * rowsum[2 * i];
      pr = r;
    }
    if (std::popcount(next) & 1) {
      total_re -= pr;
      total_im -= pi;
    } else {
      total_re += pr;
      total_im += pi;
    }
  }
  const Complex total(total_re, total_im);
  return (n & 1) ? -total : total;
}

}  // namespace detail

Complex permanent(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("permanent requires a square matrix");
  const int n = m.rows();
  if (n > kMaxPermanentSize) throw SizeLimitError("permanent: matrix larger than n = 24");
  if (n == 0) return 1.0;
  std::vector<const Complex*> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = m.row(i);
  return detail::permanent_of_rows(rows.data(), n);
}

Complex permanent_naive(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("permanent requires a square matrix");
  const int n = m.rows();
  if (n > 7) throw SizeLimitError("permanent_naive: oracle path capped at n = 7");
  if (n == 0) return 1.0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex total{};
  do {
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace fdistill
