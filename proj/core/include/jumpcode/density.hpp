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

/// Unit-trace hermitian matrix on an N-qubit register.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  /// Validates trace (1e-9) and hermiticity (1e-10); positivity is checked
  /// separately by `min_eigenvalue`.
  DensityMatrix(int n_qubits, DenseOperator matrix);

  static DensityMatrix from_ket(const Ket& psi);

  int n_qubits() const { return n_qubits_; }
  const DenseOperator& matrix() const { return matrix_; }

  cplx trace() const { return matrix_.trace(); }
  double purity() const;
  double min_eigenvalue() const;
  /// Number of eigenvalues above `tol`.
  int rank(double tol = 1e-9) const;
  /// <psi|rho|psi>
  double expectation(const Ket& psi) const;

 private:
  int n_qubits_ = 0;
  DenseOperator matrix_;
};

/// (1/2) ||a - b||_1
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace jumpcode
