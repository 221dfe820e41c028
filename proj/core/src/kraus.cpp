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

#include "jumpcode/kraus.hpp"

#include <stdexcept>

namespace jumpcode {

KrausSet::KrausSet(std::vector<DenseOperator> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) {
    throw std::invalid_argument("KrausSet: empty operator list");
  }
  dimension_ = operators_.front().cols();
  for (const auto& k : operators_) {
    if (k.rows() != dimension_ || k.cols() != dimension_) {
      throw std::invalid_argument("KrausSet: operators must share one square dimension");
    }
  }
}

double KrausSet::completeness_residual() const {
  DenseOperator sum = DenseOperator::Zero(dimension_, dimension_);
  for (const auto& k : operators_) sum.noalias() += k.adjoint() * k;
  return operator_norm(sum - DenseOperator::Identity(dimension_, dimension_));
}

DenseOperator KrausSet::choi() const {
  const Eigen::Index d2 = dimension_ * dimension_;
  DenseOperator j = DenseOperator::Zero(d2, d2);
  for (const auto& k : operators_) {
    const Eigen::Map<const Eigen::VectorXcd> v(k.data(), d2);
    j.noalias() += v * v.adjoint();
  }
  return j;
}

std::vector<Outcome> apply_operation(const KrausSet& kraus, const DensityMatrix& rho) {
  if (kraus.dimension() != rho.matrix().rows()) {
    throw std::invalid_argument("apply_operation: dimension mismatch");
  }
  std::vector<Outcome> out;
  for (std::size_t l = 0; l < kraus.size(); ++l) {
    const auto& k = kraus.operators()[l];
    DenseOperator m = k * rho.matrix() * k.adjoint();
    const double p = m.trace().real();
    if (p < 1e-14) continue;
    m /= p;
    m = 0.5 * (m + m.adjoint()).eval();
    out.push_back({l, p, DensityMatrix(rho.n_qubits(), std::move(m))});
  }
  return out;
}

}  // namespace jumpcode
