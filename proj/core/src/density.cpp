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

#include "jumpcode/density.hpp"

#include <cmath>
#include <stdexcept>

namespace jumpcode {

DensityMatrix::DensityMatrix(int n_qubits, DenseOperator matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("DensityMatrix: dimension must be 2^n_qubits");
  }
  if (std::abs(matrix_.trace() - cplx(1.0)) > 1e-9) {
    throw std::invalid_argument("DensityMatrix: trace differs from one");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("DensityMatrix: matrix is not hermitian");
  }
}

DensityMatrix DensityMatrix::from_ket(const Ket& psi) {
  const Ket n = psi.normalized();
  return DensityMatrix(n.n_qubits(), n.amplitudes() * n.amplitudes().adjoint());
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(matrix_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

int DensityMatrix::rank(double tol) const {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(matrix_, Eigen::EigenvaluesOnly);
  return static_cast<int>((es.eigenvalues().array() > tol).count());
}

double DensityMatrix::expectation(const Ket& psi) const {
  return psi.amplitudes().dot(matrix_ * psi.amplitudes()).real();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("trace_distance: register mismatch");
  }
  const DenseOperator diff = a.matrix() - b.matrix();
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(0.5 * (diff + diff.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace jumpcode
