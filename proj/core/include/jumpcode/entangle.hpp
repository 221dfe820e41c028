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

#include <array>
#include <vector>

#include "jumpcode/gates.hpp"
#include "jumpcode/ket.hpp"
#include "jumpcode/operators.hpp"

namespace jumpcode {

/// 1/2 (F26 + F36 + F27 + F37) on two four-qubit registers (qubits 1-4 low,
/// 5-8 high).
GateHamiltonian h_ent();

/// exp(-i tau H_ent) on the eight-qubit register.
DenseOperator ent_unitary(double tau);

/// -exp(-i pi H_ent), which is 1 - 2|22><22| on the product code basis.
DenseOperator v_gate();

/// d x d phases theta_jk, canonicalized to [0, 2 pi).
class ThetaMatrix {
 public:
  explicit ThetaMatrix(Eigen::MatrixXd phases);
  Eigen::Index size() const { return phases_.rows(); }
  double operator()(Eigen::Index j, Eigen::Index k) const { return phases_(j, k); }
  const Eigen::MatrixXd& phases() const { return phases_; }

 private:
  Eigen::MatrixXd phases_;
};

/// Phases of a gate that is diagonal on a d*d product basis (row-major
/// |jk>). Throws when the gate has off-diagonal weight above `tol` there.
ThetaMatrix theta_matrix(const DenseOperator& gate, const std::vector<Ket>& product_basis, double tol = 1e-10);

using Quadruple = std::array<Eigen::Index, 4>;

struct PrimitivityReport {
  bool primitive = true;
  /// Every (j, k, p, q) with theta_jk + theta_pq != theta_jq + theta_pk (mod 2 pi),
  /// in lexicographic order; the first entry serves as the witness.
  std::vector<Quadruple> violations;
};

PrimitivityReport is_primitive_diagonal(const ThetaMatrix& theta, double tol = 1e-9);

/// Distance of x from the nearest multiple of 2 pi.
double circular_distance(double x);

/// Schmidt rank across the cut between the lowest `n_low` qubits and the rest.
int schmidt_rank(const Ket& psi, int n_low, double tol = 1e-10);

}  // namespace jumpcode
