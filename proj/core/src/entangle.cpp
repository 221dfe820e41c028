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

#include "jumpcode/entangle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jumpcode/expm.hpp"

namespace jumpcode {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

GateHamiltonian h_ent() {
  return GateHamiltonian({{Coupling::F, 2, 6, 0.5},
                          {Coupling::F, 3, 6, 0.5},
                          {Coupling::F, 2, 7, 0.5},
                          {Coupling::F, 3, 7, 0.5}});
}

DenseOperator ent_unitary(double tau) { return expm_dense(to_dense(h_ent().to_operator(8)), tau); }

DenseOperator v_gate() { return -ent_unitary(std::numbers::pi); }

ThetaMatrix::ThetaMatrix(Eigen::MatrixXd phases) : phases_(std::move(phases)) {
  if (phases_.rows() != phases_.cols()) {
    throw std::invalid_argument("ThetaMatrix: must be square");
  }
  for (Eigen::Index i = 0; i < phases_.size(); ++i) {
    double& p = phases_.data()[i];
    if (!std::isfinite(p)) {
      throw std::invalid_argument("ThetaMatrix: phases must be finite");
    }
    p = std::fmod(p, kTwoPi);
    if (p < 0.0) p += kTwoPi;
    if (p >= kTwoPi) p -= kTwoPi;
  }
}

ThetaMatrix theta_matrix(const DenseOperator& gate, const std::vector<Ket>& product_basis, double tol) {
  const auto count = static_cast<Eigen::Index>(product_basis.size());
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(count))));
  if (d * d != count || d == 0) {
    throw std::invalid_argument("theta_matrix: basis size must be a perfect square");
  }
  DenseOperator frame(product_basis.front().dimension(), count);
  for (Eigen::Index i = 0; i < count; ++i) frame.col(i) = product_basis[static_cast<std::size_t>(i)].amplitudes();
  const DenseOperator image = gate * frame;
  const DenseOperator restricted = frame.adjoint() * image;
  const DenseOperator diag = restricted.diagonal().asDiagonal();
  const double off = operator_norm(image - frame * diag);
  if (off > tol) {
    throw std::domain_error("theta_matrix: gate is not diagonal on the product basis");
  }
  Eigen::MatrixXd phases(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) phases(j, k) = std::arg(restricted(j * d + k, j * d + k));
  }
  return ThetaMatrix(std::move(phases));
}

double circular_distance(double x) {
  const double r = std::remainder(x, kTwoPi);
  return std::abs(r);
}

PrimitivityReport is_primitive_diagonal(const ThetaMatrix& theta, double tol) {
  PrimitivityReport report;
  const Eigen::Index d = theta.size();
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      for (Eigen::Index p = 0; p < d; ++p) {
        for (Eigen::Index q = 0; q < d; ++q) {
          const double lhs = theta(j, k) + theta(p, q);
          const double rhs = theta(j, q) + theta(p, k);
          if (circular_distance(lhs - rhs) > tol) report.violations.push_back({j, k, p, q});
        }
      }
    }
  }
  report.primitive = report.violations.empty();
  return report;
}

int schmidt_rank(const Ket& psi, int n_low, double tol) {
  if (n_low < 0 || n_low > psi.n_qubits()) {
    throw std::invalid_argument("schmidt_rank: cut outside the register");
  }
  const Eigen::Index low = Eigen::Index{1} << n_low;
  const Eigen::Index high = psi.dimension() / low;
  // Index = h * low + l, so the column-major map below has rows = low index.
  const Eigen::Map<const DenseOperator> m(psi.amplitudes().data(), low, high);
  Eigen::JacobiSVD<DenseOperator> svd(m);
  return static_cast<int>((svd.singularValues().array() > tol).count());
}

}  // namespace jumpcode
