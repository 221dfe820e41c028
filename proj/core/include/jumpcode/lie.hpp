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

#include "jumpcode/operators.hpp"

namespace jumpcode {

struct ClosureReport {
  /// Real dimension of the span of the generators and all nested i[A, B].
  int dimension = 0;
  /// Dimension of that span after removing trace parts.
  int traceless_dimension = 0;
  /// Orthonormal hermitian basis of the closure (inner product Re Tr(A^dagger B)).
  std::vector<DenseOperator> basis;
  std::vector<DenseOperator> traceless_basis;
};

/// Closes a set of hermitian d x d matrices under X, Y -> i[X, Y].
ClosureReport lie_closure(const std::vector<DenseOperator>& generators, double tol = 1e-10);

/// The eight Gell-Mann matrices.
std::vector<DenseOperator> gell_mann();

/// Orthonormalizes `matrices` in the real Frobenius inner product, dropping
/// dependent ones.
std::vector<DenseOperator> real_orthonormal_basis(const std::vector<DenseOperator>& matrices,
                                                  double tol = 1e-10);

/// Largest Frobenius distance from a target to its projection on span(basis),
/// where `basis` is orthonormal in the real inner product.
double span_inclusion_residual(const std::vector<DenseOperator>& basis,
                               const std::vector<DenseOperator>& targets);

/// Real coefficients of `target` in the (not necessarily orthogonal) spanning
/// set, by least squares, plus the fit residual.
struct RealExpansion {
  Eigen::VectorXd coefficients;
  double residual;
};
RealExpansion expand_real(const std::vector<DenseOperator>& spanning, const DenseOperator& target);

}  // namespace jumpcode
