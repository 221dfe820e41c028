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

#include "jumpcode/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace jumpcode {

namespace {

double real_inner(const DenseOperator& a, const DenseOperator& b) {
  return (a.adjoint() * b).trace().real();
}

// Gram-Schmidt step; returns false when `m` is dependent on `basis`.
bool try_extend(std::vector<DenseOperator>& basis, DenseOperator m, double tol) {
  const double scale = std::max(1.0, m.norm());
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) m -= real_inner(b, m) * b;
  }
  const double n = m.norm();
  if (n <= tol * scale) return false;
  basis.push_back(m / n);
  return true;
}

DenseOperator traceless_part(const DenseOperator& m) {
  const auto d = static_cast<double>(m.rows());
  return m - (m.trace() / d) * DenseOperator::Identity(m.rows(), m.cols());
}

}  // namespace

std::vector<DenseOperator> real_orthonormal_basis(const std::vector<DenseOperator>& matrices, double tol) {
  std::vector<DenseOperator> basis;
  for (const auto& m : matrices) try_extend(basis, m, tol);
  return basis;
}

ClosureReport lie_closure(const std::vector<DenseOperator>& generators, double tol) {
  if (generators.empty()) return {};
  const Eigen::Index d = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d) {
      throw std::invalid_argument("lie_closure: generators must share one square shape");
    }
    if ((g - g.adjoint()).norm() > 1e-10 * std::max(1.0, g.norm())) {
      throw std::invalid_argument("lie_closure: generators must be hermitian");
    }
  }
  ClosureReport report;
  report.basis = real_orthonormal_basis(generators, tol);
  // New elements are only paired with everything seen so far, once.
  std::size_t processed = 0;
  while (processed < report.basis.size()) {
    const DenseOperator x = report.basis[processed];
    for (std::size_t j = 0; j < processed; ++j) {
      const DenseOperator& y = report.basis[j];
      try_extend(report.basis, cplx(0.0, 1.0) * (x * y - y * x), tol);
    }
    ++processed;
  }
  report.dimension = static_cast<int>(report.basis.size());
  std::vector<DenseOperator> traceless;
  for (const auto& b : report.basis) traceless.push_back(traceless_part(b));
  report.traceless_basis = real_orthonormal_basis(traceless, tol);
  report.traceless_dimension = static_cast<int>(report.traceless_basis.size());
  return report;
}

std::vector<DenseOperator> gell_mann() {
  std::vector<DenseOperator> out(8, DenseOperator::Zero(3, 3));
  const cplx i(0.0, 1.0);
  out[0](0, 1) = out[0](1, 0) = 1.0;
  out[1](0, 1) = -i;
  out[1](1, 0) = i;
  out[2](0, 0) = 1.0;
  out[2](1, 1) = -1.0;
  out[3](0, 2) = out[3](2, 0) = 1.0;
  out[4](0, 2) = -i;
  out[4](2, 0) = i;
  out[5](1, 2) = out[5](2, 1) = 1.0;
  out[6](1, 2) = -i;
  out[6](2, 1) = i;
  out[7](0, 0) = out[7](1, 1) = 1.0 / std::sqrt(3.0);
  out[7](2, 2) = -2.0 / std::sqrt(3.0);
  return out;
}

double span_inclusion_residual(const std::vector<DenseOperator>& basis,
                               const std::vector<DenseOperator>& targets) {
  double worst = 0.0;
  for (DenseOperator t : targets) {
    for (const auto& b : basis) t -= real_inner(b, t) * b;
    worst = std::max(worst, t.norm());
  }
  return worst;
}

RealExpansion expand_real(const std::vector<DenseOperator>& spanning, const DenseOperator& target) {
  if (spanning.empty()) {
    throw std::invalid_argument("expand_real: empty spanning set");
  }
  const Eigen::Index n = target.size();
  Eigen::MatrixXd a(2 * n, static_cast<Eigen::Index>(spanning.size()));
  for (std::size_t k = 0; k < spanning.size(); ++k) {
    const auto& m = spanning[k];
    if (m.size() != n) {
      throw std::invalid_argument("expand_real: shape mismatch");
    }
    for (Eigen::Index e = 0; e < n; ++e) {
      a(e, static_cast<Eigen::Index>(k)) = m.data()[e].real();
      a(n + e, static_cast<Eigen::Index>(k)) = m.data()[e].imag();
    }
  }
  Eigen::VectorXd b(2 * n);
  for (Eigen::Index e = 0; e < n; ++e) {
    b[e] = target.data()[e].real();
    b[n + e] = target.data()[e].imag();
  }
  RealExpansion out;
  out.coefficients = a.completeOrthogonalDecomposition().solve(b);
  out.residual = (a * out.coefficients - b).norm();
  return out;
}

}  // namespace jumpcode
