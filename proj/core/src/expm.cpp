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

#include "jumpcode/expm.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace jumpcode {

namespace {

// Generic scaled Taylor action; `apply_h` writes H*v into its second argument.
template <typename ApplyH>
Eigen::VectorXcd taylor_action(ApplyH&& apply_h, double norm_bound, double t,
                               const Eigen::VectorXcd& v0) {
  if (t == 0.0 || norm_bound == 0.0) return v0;
  if (!std::isfinite(t)) {
    throw std::invalid_argument("expm_apply: non-finite time");
  }
  const double scaled = std::abs(t) * norm_bound;
  const int steps = std::max(1, static_cast<int>(std::ceil(scaled / 0.5)));
  const cplx factor = cplx(0.0, -t / steps);

  Eigen::VectorXcd v = v0;
  Eigen::VectorXcd term(v.size());
  Eigen::VectorXcd next(v.size());
  for (int s = 0; s < steps; ++s) {
    Eigen::VectorXcd acc = v;
    term = v;
    for (int k = 1; k <= 60; ++k) {
      apply_h(term, next);
      term = next * (factor / static_cast<double>(k));
      acc += term;
      if (term.lpNorm<Eigen::Infinity>() <= 1e-18 * acc.lpNorm<Eigen::Infinity>()) break;
    }
    v.swap(acc);
  }
  return v;
}

}  // namespace

Ket expm_apply(const LocalSum& hamiltonian, double t, const Ket& psi) {
  if (hamiltonian.n_qubits() != psi.n_qubits()) {
    throw std::invalid_argument("expm_apply: dimension mismatch");
  }
  const int n = psi.n_qubits();
  auto apply_h = [&](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    out.setZero(in.size());
    for (const auto& term : hamiltonian.terms()) apply_local_accumulate(term, n, in, out);
  };
  return Ket(n, taylor_action(apply_h, hamiltonian.norm1_bound(), t, psi.amplitudes()));
}

Ket expm_apply(const DenseOperator& hamiltonian, double t, const Ket& psi) {
  if (hamiltonian.rows() != psi.dimension() || hamiltonian.cols() != psi.dimension()) {
    throw std::invalid_argument("expm_apply: dimension mismatch");
  }
  auto apply_h = [&](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    out.noalias() = hamiltonian * in;
  };
  const double bound = hamiltonian.cwiseAbs().colwise().sum().maxCoeff();
  return Ket(psi.n_qubits(), taylor_action(apply_h, bound, t, psi.amplitudes()));
}

DenseOperator expm_dense(const DenseOperator& hamiltonian, double t) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw std::invalid_argument("expm_dense: operator must be square");
  }
  if (hamiltonian.rows() > kDenseExpLimit) {
    throw std::invalid_argument("expm_dense: dimension above the dense limit");
  }
  return matrix_exp(hamiltonian * cplx(0.0, -t));
}

DenseOperator matrix_exp(const DenseOperator& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix_exp: operator must be square");
  }
  return m.exp();
}

}  // namespace jumpcode
