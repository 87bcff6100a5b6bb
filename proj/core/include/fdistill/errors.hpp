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

#ifndef FDISTILL_ERRORS_HPP
#define FDISTILL_ERRORS_HPP

#include <stdexcept>

namespace fdistill {

/// Shapes do not match (non-square input, photon-count mismatch, ...).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside its mathematical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Problem size exceeds what the implementation is willing to attempt.
struct SizeLimitError : std::length_error {
  using std::length_error::length_error;
};

/// A numerical procedure produced a residual above its accuracy contract.
struct ConditioningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fdistill

#endif  // FDISTILL_ERRORS_HPP
