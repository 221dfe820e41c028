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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace jumpcode {

using cplx = std::complex<double>;

/// Largest register handled by the dense state-vector routines.
inline constexpr int kMaxQubits = 24;

/// Largest dimension for which dense projectors are formed.
inline constexpr Eigen::Index kDenseProjectorLimit = Eigen::Index{1} << 10;

/// Pure state of N distinguishable qubits.
///
/// Qubits are numbered 1..N. Qubit a contributes bit weight 2^(a-1) to the
/// amplitude index, and labels are printed most significant first, so the
/// label "0011" on four qubits has qubits 1 and 2 excited and lives at index 3.
class Ket {
 public:
  Ket() = default;
  Ket(int n_qubits, Eigen::VectorXcd amplitudes);

  /// All qubits in |0>.
  static Ket vacuum(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  cplx operator[](Eigen::Index i) const { return amplitudes_[i]; }

  double norm() const { return amplitudes_.norm(); }
  bool is_normalized(double tol = 1e-12) const;
  Ket normalized() const;

  /// <this|other>
  cplx inner(const Ket& other) const;

 private:
  int n_qubits_ = 0;
  Eigen::VectorXcd amplitudes_;
};

std::uint64_t label_to_index(std::string_view label);
std::string index_to_label(std::uint64_t index, int n_qubits);

/// Computational basis ket for a printed label b_N...b_1.
Ket basis_ket(std::string_view label);

/// `low` occupies qubits 1..n_low and `high` the qubits above it, so the
/// printed label of the product is (high label)(low label).
Ket tensor(const Ket& high, const Ket& low);

/// |<a|b>|^2 for normalized inputs.
double fidelity(const Ket& a, const Ket& b);

}  // namespace jumpcode
