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

#include "jumpcode/ket.hpp"

#include <cmath>
#include <stdexcept>

namespace jumpcode {

Ket::Ket(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("Ket: qubit count out of range");
  }
  if (amplitudes_.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("Ket: amplitude vector length must be 2^n_qubits");
  }
}

Ket Ket::vacuum(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("Ket: qubit count out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  v[0] = 1.0;
  return Ket(n_qubits, std::move(v));
}

bool Ket::is_normalized(double tol) const {
  return std::abs(amplitudes_.squaredNorm() - 1.0) <= tol;
}

Ket Ket::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw std::domain_error("Ket: cannot normalize the zero vector");
  }
  return Ket(n_qubits_, amplitudes_ / n);
}

cplx Ket::inner(const Ket& other) const {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("Ket: inner product of kets on different registers");
  }
  return amplitudes_.dot(other.amplitudes_);
}

std::uint64_t label_to_index(std::string_view label) {
  if (label.empty()) {
    throw std::invalid_argument("basis label must not be empty");
  }
  if (label.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("basis label longer than the supported register");
  }
  std::uint64_t index = 0;
  for (char c : label) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis label must contain only '0' and '1'");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return index;
}

std::string index_to_label(std::uint64_t index, int n_qubits) {
  if (n_qubits <= 0 || n_qubits > 63 || (index >> n_qubits) != 0) {
    throw std::invalid_argument("index does not fit the register");
  }
  std::string label(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if ((index >> q) & 1U) {
      label[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
    }
  }
  return label;
}

Ket basis_ket(std::string_view label) {
  const std::uint64_t index = label_to_index(label);
  const int n = static_cast<int>(label.size());
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return Ket(n, std::move(v));
}

Ket tensor(const Ket& high, const Ket& low) {
  const int n = high.n_qubits() + low.n_qubits();
  if (n > kMaxQubits) {
    throw std::invalid_argument("tensor: combined register too large");
  }
  Eigen::VectorXcd v(high.dimension() * low.dimension());
  for (Eigen::Index h = 0; h < high.dimension(); ++h) {
    v.segment(h * low.dimension(), low.dimension()) = high[h] * low.amplitudes();
  }
  return Ket(n, std::move(v));
}

double fidelity(const Ket& a, const Ket& b) { return std::norm(a.inner(b)); }

}  // namespace jumpcode
