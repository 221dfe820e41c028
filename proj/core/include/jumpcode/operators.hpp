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

#include <vector>

#include <Eigen/Dense>

#include "jumpcode/ket.hpp"

namespace jumpcode {

/// Matrices on the full 2^N space or on small logical subspaces.
using DenseOperator = Eigen::MatrixXcd;

namespace pauli {
DenseOperator identity();
DenseOperator x();
DenseOperator y();
/// sigma_z |0> = |0>, sigma_z |1> = -|1>.
DenseOperator z();
/// |0><1|, the decay operator without its rate.
DenseOperator lowering();
/// |1><1|
DenseOperator number();
}  // namespace pauli

/// high (x) low; `low` acts on the least significant bits.
DenseOperator kron(const DenseOperator& high, const DenseOperator& low);

/// Operator acting as `block` on `support` and as the identity elsewhere.
///
/// Local index bit j of `block` corresponds to qubit support[j], so the first
/// support entry is the least significant bit, the same ordering used for
/// full-register indices.
class LocalOperator {
 public:
  LocalOperator(std::vector<int> support, DenseOperator block);

  const std::vector<int>& support() const { return support_; }
  const DenseOperator& block() const { return block_; }
  int max_qubit() const;

  LocalOperator scaled(cplx factor) const;
  LocalOperator adjoint() const;

 private:
  std::vector<int> support_;
  DenseOperator block_;
};

/// Sum of local terms on an N-qubit register.
class LocalSum {
 public:
  LocalSum() = default;
  explicit LocalSum(int n_qubits) : n_qubits_(n_qubits) {}
  LocalSum(int n_qubits, std::vector<LocalOperator> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<LocalOperator>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(LocalOperator term);
  LocalSum scaled(cplx factor) const;
  LocalSum operator+(const LocalSum& other) const;

  /// Upper bound on the induced 1-norm of the full operator.
  double norm1_bound() const;

 private:
  int n_qubits_ = 0;
  std::vector<LocalOperator> terms_;
};

/// (op (x) identity) psi without materializing the full matrix.
Ket apply_local(const LocalOperator& op, const Ket& psi);
Ket apply(const LocalSum& op, const Ket& psi);
/// out += op * in on raw amplitude vectors of an n-qubit register.
void apply_local_accumulate(const LocalOperator& op, int n_qubits, const Eigen::VectorXcd& in,
                            Eigen::VectorXcd& out);

DenseOperator to_dense(const LocalOperator& op, int n_qubits);
DenseOperator to_dense(const LocalSum& op);

/// Diagonal of the total excitation-number operator.
DenseOperator excitation_number(int n_qubits);

/// Spectral norm.
double operator_norm(const DenseOperator& m);
double hermiticity_residual(const DenseOperator& m);
double unitarity_residual(const DenseOperator& m);

/// min over gamma of ||a - e^{i gamma} b|| (spectral norm), evaluated at the
/// phase that aligns the traces, which upper-bounds the true minimum.
double phase_aligned_distance(const DenseOperator& a, const DenseOperator& b);

}  // namespace jumpcode
