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

#ifndef FDISTILL_MATRIX_HPP
#define FDISTILL_MATRIX_HPP

#include <complex>
#include <vector>

#include "fdistill/errors.hpp"

namespace fdistill {

using Complex = std::complex<double>;

/// Deviation from the identity (max-norm of U U† − I) below which a matrix
/// is accepted as unitary.
inline constexpr double kUnitarityTol = 1e-12;

/// Dense complex matrix, row-major. Rows index input modes and columns
/// index output modes wherever a matrix describes a linear-optical circuit.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionError("matrix dimensions must be nonnegative");
  }

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Complex& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }
  std::vector<Complex>& entries() { return entries_; }

  const Complex* row(int i) const { return entries_.data() + static_cast<std::size_t>(i) * cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Block-diagonal composition a ⊕ b.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |(U U† − I)_ij|; zero for an exactly unitary matrix.
double unitarity_defect(const ComplexMatrix& u);

bool is_unitary(const ComplexMatrix& u, double tol = kUnitarityTol);

}  // namespace fdistill

#endif  // FDISTILL_MATRIX_HPP
