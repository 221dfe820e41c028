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

#include <string>
#include <vector>

#include "jumpcode/serialization.hpp"

namespace jumpcode {

/// Result of one verification suite; `details` carries the measured values.
struct CheckResult {
  std::string name;
  bool passed = false;
  json details;
};

/// Logical matrices of E12, E23, E13, F12, F13, F23 on the four-qubit jump
/// code against the published 0/1 table.
CheckResult check_table1(double phase = 0.0, double tol = 1e-12);

/// Reference logical matrices of the six couplings, in qutrit_couplings() order.
std::vector<DenseOperator> table1_reference();

/// KL test for known-position decay of `qubit` (qubits.size() == 1) or for the
/// joint set {L_a} over several qubits (unknown position).
CheckResult check_kl(const JumpCode& code, const std::vector<int>& qubits, double kappa, double tol);

/// DFS test of the no-jump operator K0(t) of the equal-rate memory model on DFS-(N,k).
CheckResult check_dfs(int n, int k, double kappa, double t, double tol);

/// Closure of the eight qutrit generators and inclusion of su(3).
CheckResult check_closure(double tol = 1e-10);

/// Entangling gate: diagonal action, leakage on a tau grid, primitivity and
/// Schmidt rank of the output for the uniform product input.
CheckResult check_entangle(double tol = 1e-10);

}  // namespace jumpcode
