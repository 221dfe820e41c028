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

#include "jumpcode/qec.hpp"

#include <cmath>
#include <stdexcept>

namespace jumpcode {

namespace {

Eigen::Index checked_rank(const DenseOperator& p) {
  if (p.rows() != p.cols()) {
    throw std::invalid_argument("projector must be square");
  }
  if ((p * p - p).cwiseAbs().maxCoeff() > 1e-10 || (p - p.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("projector must be idempotent and hermitian");
  }
  const auto rank = static_cast<Eigen::Index>(std::llround(p.trace().real()));
  if (rank == 0) {
    throw std::invalid_argument("projector has rank zero");
  }
  return rank;
}

// Appends computational basis directions to an orthonormal frame until it
// spans the whole space. Each candidate is orthogonalized twice.
DenseOperator complete_frame(const DenseOperator& frame) {
  const Eigen::Index dim = frame.rows();
  DenseOperator q(dim, dim);
  Eigen::Index filled = frame.cols();
  q.leftCols(filled) = frame;
  Eigen::VectorXcd w(dim);
  for (Eigen::Index j = 0; j < dim && filled < dim; ++j) {
    w.setZero();
    w[j] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < filled; ++c) w -= q.col(c) * q.col(c).dot(w);
    }
    const double norm = w.norm();
    if (norm > 1e-6) q.col(filled++) = w / norm;
  }
  if (filled != dim) {
    throw std::runtime_error("complete_frame: failed to span the space");
  }
  return q;
}

}  // namespace

KLReport kl_check(const KrausSet& kraus, const DenseOperator& projector, double tol) {
  if (kraus.dimension() != projector.rows()) {
    throw std::invalid_argument("kl_check: dimension mismatch");
  }
  const Eigen::Index rank = checked_rank(projector);
  const std::size_t m = kraus.size();
  std::vector<DenseOperator> kp;
  kp.reserve(m);
  for (const auto& k : kraus.operators()) kp.push_back(k * projector);

  KLReport report;
  report.lambda = DenseOperator::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t lp = 0; lp < m; ++lp) {
      const DenseOperator block = kp[l].adjoint() * kp[lp];
      const cplx lam = block.trace() / static_cast<double>(rank);
      report.lambda(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(lp)) = lam;
      const double r = operator_norm(block - lam * projector);
      if (r > report.residual || (l == 0 && lp == 0)) {
        report.residual = r;
        report.worst_l = l;
        report.worst_lp = lp;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(0.5 * (report.lambda + report.lambda.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  report.min_eigenvalue = es.eigenvalues().minCoeff();
  report.psd_ok = report.min_eigenvalue >= -1e-9;
  report.reversible = report.residual <= tol && report.psd_ok;
  return report;
}

DfsReport dfs_check(const KrausSet& kraus, const DenseOperator& projector, double tol) {
  if (kraus.dimension() != projector.rows()) {
    throw std::invalid_argument("dfs_check: dimension mismatch");
  }
  const Eigen::Index rank = checked_rank(projector);
  DfsReport report;
  report.passes = true;
  for (const auto& k : kraus.operators()) {
    const DenseOperator kp = k * projector;
    const cplx lam = kp.trace() / static_cast<double>(rank);
    const double r = operator_norm(kp - lam * projector);
    report.lambdas.push_back(lam);
    report.residuals.push_back(r);
    report.passes = report.passes && r <= tol;
  }
  if (report.passes) {
    const KLReport kl = kl_check(kraus, projector, tol);
    for (std::size_t l = 0; l < kraus.size(); ++l) {
      for (std::size_t lp = 0; lp < kraus.size(); ++lp) {
        const cplx expected = std::conj(report.lambdas[l]) * report.lambdas[lp];
        report.factorization_residual = std::max(
            report.factorization_residual,
            std::abs(kl.lambda(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(lp)) - expected));
      }
    }
  }
  return report;
}

bool kraus_equivalent(const KrausSet& a, const KrausSet& b, double tol) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("kraus_equivalent: sets act on different spaces");
  }
  return (a.choi() - b.choi()).norm() <= tol;
}

DenseOperator recovery_unitary(const JumpCode& code, int qubit, double tol) {
  if (qubit < 1 || qubit > code.n()) {
    throw std::out_of_range("recovery_unitary: qubit outside the code register");
  }
  const int n = code.n();
  const LocalOperator lowering({qubit}, pauli::lowering());
  const DenseOperator p = projector(code);
  const KLReport kl = kl_check(KrausSet({to_dense(lowering, n)}), p, tol);
  if (!kl.reversible) {
    throw std::domain_error("recovery_unitary: jump is not correctable on this code");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  const auto d = static_cast<Eigen::Index>(code.count());
  DenseOperator images(dim, d);
  DenseOperator words(dim, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const Ket c = codeword_ket(code, static_cast<std::size_t>(i));
    const Ket img = apply_local(lowering, c);
    const double norm = img.norm();
    if (norm < 1e-12) {
      throw std::domain_error("recovery_unitary: degenerate jump image");
    }
    images.col(i) = img.amplitudes() / norm;
    words.col(i) = c.amplitudes();
  }
  const DenseOperator overlap = images.adjoint() * images;
  if ((overlap - DenseOperator::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::domain_error("recovery_unitary: jump images are not orthonormal");
  }
  return complete_frame(words) * complete_frame(images).adjoint();
}

RecoveryTable::RecoveryTable(const JumpCode& code) : code_(code) {
  for (int q = 1; q <= code.n(); ++q) unitaries_.push_back(recovery_unitary(code, q));
}

}  // namespace jumpcode
