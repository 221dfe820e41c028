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

#include <stdexcept>
#include <string>
#include <vector>

#include "jumpcode/codes.hpp"
#include "jumpcode/ket.hpp"
#include "jumpcode/operators.hpp"

namespace jumpcode {

/// E_ab = 1/2 (1 + XX + YY + ZZ) on qubits (a, b), which is the SWAP.
LocalOperator e_op(int a, int b);
/// F_ab = 1/2 (1 + ZZ) on qubits (a, b), the projector onto equal bits.
LocalOperator f_op(int a, int b);

enum class Coupling { E, F };

char coupling_symbol(Coupling kind);
Coupling coupling_from_symbol(char symbol);

struct CouplingTerm {
  Coupling kind;
  int first;
  int second;
  double coefficient;
};

/// Real linear combination of E/F couplings, the tunable two-body
/// Hamiltonians of the processor.
///
/// Terms are kept canonical: first < second, one entry per (kind, pair),
/// sorted, no zero coefficients.
class GateHamiltonian {
 public:
  GateHamiltonian() = default;
  explicit GateHamiltonian(const std::vector<CouplingTerm>& terms);

  static GateHamiltonian term(Coupling kind, int a, int b, double coefficient = 1.0);

  const std::vector<CouplingTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int max_qubit() const;

  GateHamiltonian scaled(double factor) const;
  GateHamiltonian operator+(const GateHamiltonian& other) const;
  GateHamiltonian operator-(const GateHamiltonian& other) const;
  bool operator==(const GateHamiltonian& other) const;

  LocalSum to_operator(int n_qubits) const;

 private:
  std::vector<CouplingTerm> terms_;
};

class LeakageError : public std::runtime_error {
 public:
  LeakageError(const std::string& what, double leakage)
      : std::runtime_error(what), leakage_(leakage) {}
  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

/// ||(1 - P) H P|| for P the projector onto the span of `basis`.
double leakage(const LocalSum& h, const std::vector<Ket>& basis);

/// M_ij = <b_i|H|b_j> over an orthonormal basis; throws LeakageError when
/// H does not leave the span invariant within `tol`.
DenseOperator logical_matrix(const LocalSum& h, const std::vector<Ket>& basis, double tol = 1e-12);

/// The six couplings E12, E23, E13, F12, F13, F23 on the four-qubit register.
struct NamedHamiltonian {
  std::string name;
  GateHamiltonian hamiltonian;
};
std::vector<NamedHamiltonian> qutrit_couplings();

/// One of the eight qutrit generators together with its physical origin:
/// either a direct combination of couplings or i[left, right].
struct LogicalGenerator {
  std::string name;
  DenseOperator logical;
  bool is_commutator = false;
  GateHamiltonian direct;
  GateHamiltonian left;
  GateHamiltonian right;
};

/// C12+, C13+, C23+, C12-, C13-, C23-, F12, F13 with their logical matrices on
/// `code` (a four-qubit jump code).
std::vector<LogicalGenerator> su3_generators(const JumpCode& code);

}  // namespace jumpcode
