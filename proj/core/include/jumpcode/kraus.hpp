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

#include "jumpcode/density.hpp"
#include "jumpcode/operators.hpp"

namespace jumpcode {

/// Finite set of Kraus operators on one space.
class KrausSet {
 public:
  KrausSet() = default;
  explicit KrausSet(std::vector<DenseOperator> operators);

  const std::vector<DenseOperator>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }
  Eigen::Index dimension() const { return dimension_; }

  /// ||sum K^dagger K - 1||
  double completeness_residual() const;
  bool is_complete(double tol = 1e-9) const { return completeness_residual() <= tol; }

  /// Choi matrix sum_k vec(K) vec(K)^dagger (column-stacking).
  DenseOperator choi() const;

 private:
  std::vector<DenseOperator> operators_;
  Eigen::Index dimension_ = 0;
};

struct Outcome {
  std::size_t index;  // position of the Kraus operator in the set
  double probability;
  DensityMatrix state;
};

/// Selective application: one outcome per Kraus operator with
/// p_l = Tr(K_l rho K_l^dagger) and rho_l = K_l rho K_l^dagger / p_l.
/// Outcomes with p_l below 1e-14 are omitted.
std::vector<Outcome> apply_operation(const KrausSet& kraus, const DensityMatrix& rho);

}  // namespace jumpcode
