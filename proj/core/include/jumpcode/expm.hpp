// Copyright 2026 The jumpcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "jumpcode/ket.hpp"
#include "jumpcode/operators.hpp"

namespace jumpcode {

/// Largest dimension for which full propagator matrices are formed.
inline constexpr Eigen::Index kDenseExpLimit = Eigen::Index{1} << 12;

/// exp(-i H t) psi by a scaled truncated Taylor series (H may be non-hermitian).
Ket expm_apply(const LocalSum& hamiltonian, double t, const Ket& psi);
Ket expm_apply(const DenseOperator& hamiltonian, double t, const Ket& psi);

/// exp(-i H t) as a matrix, by scaling and squaring.
DenseOperator expm_dense(const DenseOperator& hamiltonian, double t);

/// exp(m) for a general square matrix.
DenseOperator matrix_exp(const DenseOperator& m);

}  // namespace jumpcode
