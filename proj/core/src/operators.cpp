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

#include "jumpcode/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace jumpcode {

namespace pauli {
DenseOperator identity() { return DenseOperator::Identity(2, 2); }

DenseOperator x() {
  DenseOperator m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

DenseOperator y() {
  DenseOperator m(2, 2);
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}

DenseOperator z() {
  DenseOperator m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

DenseOperator lowering() {
  DenseOperator m = DenseOperator::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

DenseOperator number() {
  DenseOperator m = DenseOperator::Zero(2, 2);
  m(1, 1) = 1.0;
  return m;
}
}  // namespace pauli

LocalOperator::LocalOperator(std::vector<int> support, DenseOperator block)
    : support_(std::move(support)), block_(std::move(block)) {
  if (support_.empty()) {
    throw std::invalid_argument("LocalOperator: empty support");
  }
  if (support_.size() > 12) {
    throw std::invalid_argument("LocalOperator: support too large");
  }
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] < 1 || support_[i] > kMaxQubits) {
      throw std::invalid_argument("LocalOperator: qubit index out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (support_[i] == support_[j]) {
        throw std::invalid_argument("LocalOperator: repeated qubit in support");
      }
    }
  }
  const Eigen::Index dim = Eigen::Index{1} << support_.size();
  if (block_.rows() != dim || block_.cols() != dim) {
    throw std::invalid_argument("LocalOperator: block dimension must be 2^|support|");
  }
}

int LocalOperator::max_qubit() const { return *std::max_element(support_.begin(), support_.end()); }

LocalOperator LocalOperator::scaled(cplx factor) const { return {support_, block_ * factor}; }

LocalOperator LocalOperator::adjoint() const { return {support_, block_.adjoint()}; }

LocalSum::LocalSum(int n_qubits, std::vector<LocalOperator> terms) : n_qubits_(n_qubits) {
  for (auto& t : terms) add(std::move(t));
}

void LocalSum::add(LocalOperator term) {
  if (term.max_qubit() > n_qubits_) {
    throw std::out_of_range("LocalSum: term support exceeds register");
  }
  terms_.push_back(std::move(term));
}

LocalSum LocalSum::scaled(cplx factor) const {
  LocalSum out(n_qubits_);
  for (const auto& t : terms_) out.terms_.push_back(t.scaled(factor));
  return out;
}

LocalSum LocalSum::operator+(const LocalSum& other) const {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("LocalSum: register size mismatch");
  }
  LocalSum out = *this;
  out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
  return out;
}

double LocalSum::norm1_bound() const {
  double total = 0.0;
  for (const auto& t : terms_) {
    total += t.block().cwiseAbs().colwise().sum().maxCoeff();
  }
  return total;
}

namespace {

struct LocalLayout {
  std::uint64_t mask = 0;
  std::vector<std::uint64_t> offsets;  // full-register offset of each local index
};

LocalLayout layout_for(const LocalOperator& op, int n_qubits) {
  if (op.max_qubit() > n_qubits) {
    throw std::out_of_range("apply_local: support outside the register");
  }
  LocalLayout layout;
  const auto& support = op.support();
  for (int q : support) layout.mask |= std::uint64_t{1} << (q - 1);
  const std::size_t dim = std::size_t{1} << support.size();
  layout.offsets.resize(dim);
  for (std::size_t local = 0; local < dim; ++local) {
    std::uint64_t off = 0;
    for (std::size_t j = 0; j < support.size(); ++j) {
      if ((local >> j) & 1U) off |= std::uint64_t{1} << (support[j] - 1);
    }
    layout.offsets[local] = off;
  }
  return layout;
}

}  // namespace

void apply_local_accumulate(const LocalOperator& op, int n_qubits, const Eigen::VectorXcd& in,
                            Eigen::VectorXcd& out) {
  const LocalLayout layout = layout_for(op, n_qubits);
  const auto& block = op.block();
  const Eigen::Index local_dim = block.rows();
  const std::uint64_t full_dim = std::uint64_t{1} << n_qubits;
  Eigen::VectorXcd gathered(local_dim);
  Eigen::VectorXcd mapped(local_dim);
  // Walk the subspace of indices whose support bits are zero.
  const std::uint64_t free_mask = (full_dim - 1) & ~layout.mask;
  std::uint64_t base = 0;
  while (true) {
    for (Eigen::Index l = 0; l < local_dim; ++l) {
      gathered[l] = in[static_cast<Eigen::Index>(base | layout.offsets[static_cast<std::size_t>(l)])];
    }
    mapped.noalias() = block * gathered;
    for (Eigen::Index l = 0; l < local_dim; ++l) {
      out[static_cast<Eigen::Index>(base | layout.offsets[static_cast<std::size_t>(l)])] += mapped[l];
    }
    if (base == free_mask) break;
    base = ((base | layout.mask) + 1) & free_mask;
  }
}

Ket apply_local(const LocalOperator& op, const Ket& psi) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.dimension());
  apply_local_accumulate(op, psi.n_qubits(), psi.amplitudes(), out);
  return Ket(psi.n_qubits(), std::move(out));
}

Ket apply(const LocalSum& op, const Ket& psi) {
  if (op.n_qubits() != psi.n_qubits()) {
    throw std::invalid_argument("apply: operator and ket registers differ");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.dimension());
  for (const auto& t : op.terms()) {
    apply_local_accumulate(t, psi.n_qubits(), psi.amplitudes(), out);
  }
  return Ket(psi.n_qubits(), std::move(out));
}

DenseOperator to_dense(const LocalOperator& op, int n_qubits) {
  if (n_qubits > 12) {
    throw std::invalid_argument("to_dense: register too large for a dense matrix");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  DenseOperator m = DenseOperator::Zero(dim, dim);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
  Eigen::VectorXcd col(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    e[j] = 1.0;
    col.setZero();
    apply_local_accumulate(op, n_qubits, e, col);
    m.col(j) = col;
    e[j] = 0.0;
  }
  return m;
}

DenseOperator to_dense(const LocalSum& op) {
  const Eigen::Index dim = Eigen::Index{1} << op.n_qubits();
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto& t : op.terms()) m += to_dense(t, op.n_qubits());
  return m;
}

DenseOperator excitation_number(int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    m(i, i) = static_cast<double>(std::popcount(static_cast<std::uint64_t>(i)));
  }
  return m;
}

DenseOperator kron(const DenseOperator& high, const DenseOperator& low) {
  return Eigen::kroneckerProduct(high, low).eval();
}

double operator_norm(const DenseOperator& m) {
  if (m.size() == 0) return 0.0;
  const DenseOperator gram = m.cols() <= m.rows() ? DenseOperator(m.adjoint() * m)
                                                  : DenseOperator(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double hermiticity_residual(const DenseOperator& m) { return operator_norm(m - m.adjoint()); }

double unitarity_residual(const DenseOperator& m) {
  return operator_norm(m.adjoint() * m - DenseOperator::Identity(m.cols(), m.cols()));
}

double phase_aligned_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("phase_aligned_distance: shape mismatch");
  }
  const cplx overlap = (b.adjoint() * a).trace();
  const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx(1.0);
  return operator_norm(a - phase * b);
}

}  // namespace jumpcode
