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

#ifndef FDISTILL_UNITARY_HPP
#define FDISTILL_UNITARY_HPP

#include <cstdint>

#include "fdistill/matrix.hpp"

namespace fdistill {

/// n-mode discrete Fourier transform, U_jk = exp(i 2π (j-1)(k-1)/n) / √n
/// with 1-based j, k.
ComplexMatrix fourier_unitary(int n);

/// Haar-distributed n×n unitary: QR decomposition of a complex Gaussian
/// matrix, diagonal phases normalized. Deterministic for a given seed
/// (the Gaussian stream is generated from a mt19937_64 with an internal
/// Box-Muller transform, so results do not depend on the C++ library's
/// normal_distribution).
ComplexMatrix haar_unitary(int n, std::uint64_t seed);

/// Balanced beamsplitter, symmetric phase convention (1/√2) [[1, i], [i, 1]].
ComplexMatrix balanced_beamsplitter();

/// (n+1)-mode circuit used to characterize a distilled photon: the n-mode
/// Fourier transform on modes 1..n (identity on mode n+1), followed by a
/// balanced beamsplitter on modes (n, n+1). Rows index input modes, so the
/// combined matrix is (F ⊕ 1) · (I ⊕ BS).
ComplexMatrix compose_distillation_circuit(int n);

}  // namespace fdistill

#endif  // FDISTILL_UNITARY_HPP
