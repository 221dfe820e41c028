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

#include <cstdint>
#include <string>
#include <vector>

#include "jumpcode/gates.hpp"
#include "jumpcode/operators.hpp"

namespace jumpcode {

/// Evolution under `hamiltonian` for `duration`, i.e. exp(-i duration H).
struct Segment {
  GateHamiltonian hamiltonian;
  double duration;
};

/// `body` (segments in the order they are applied) repeated `repetitions` times.
struct ProgramStage {
  std::string formula;
  std::uint64_t repetitions = 1;
  std::vector<Segment> body;
};

/// Timed sequence of physical Hamiltonians.
class HamiltonianProgram {
 public:
  HamiltonianProgram() = default;
  explicit HamiltonianProgram(std::vector<ProgramStage> stages);

  const std::vector<ProgramStage>& stages() const { return stages_; }
  void append(ProgramStage stage);
  bool empty() const { return stages_.empty(); }
  /// Total number of applied segments, counting repetitions.
  std::uint64_t segment_count() const;
  /// Number of distinct segment entries.
  std::size_t body_size() const;
  double total_time() const;

  double target_error = 0.0;
  double achieved_error = 0.0;

 private:
  std::vector<ProgramStage> stages_;
};

/// Factor exp(i time H_generator) of a product formula.
struct FormulaFactor {
  int generator;  // 0 or 1
  double time;
};

enum class ProductFormula { Sum, Commutator };

/// One repetition of a product formula, factors in written (left to right)
/// order:
///   Sum:        e^{i t1/n H1} e^{i t2/n H2}
///   Commutator: e^{i t1/sqrt(n) H1} e^{i t2/sqrt(n) H2} e^{-i t1/sqrt(n) H1} e^{-i t2/sqrt(n) H2}
/// Repeating it n times approximates exp(i(t1 H1 + t2 H2)) to O(1/n), or
/// exp(i * i[t1 H1, t2 H2]) to O(1/sqrt(n)).
std::vector<FormulaFactor> formula_body(ProductFormula formula, double t1, double t2, std::uint64_t n);

/// The operator the formula approximates.
DenseOperator formula_target(ProductFormula formula, const DenseOperator& h1, const DenseOperator& h2,
                             double t1, double t2);
/// The n-fold product itself, evaluated densely.
DenseOperator formula_product(ProductFormula formula, const DenseOperator& h1, const DenseOperator& h2,
                              double t1, double t2, std::uint64_t n);

/// exp(i time H) expressed as a segment with non-negative duration.
Segment factor_segment(const GateHamiltonian& h, double time);

HamiltonianProgram trotter_sum(const GateHamiltonian& h1, const GateHamiltonian& h2, double t1, double t2,
                               std::uint64_t n);
HamiltonianProgram trotter_commutator(const GateHamiltonian& h1, const GateHamiltonian& h2, double t1,
                                      double t2, std::uint64_t n);

DenseOperator matrix_power(const DenseOperator& m, std::uint64_t exponent);

/// Program unitary restricted to an invariant subspace: each segment is
/// exponentiated through its logical matrix on `basis`.
DenseOperator program_logical_unitary(const HamiltonianProgram& program, const std::vector<Ket>& basis);
/// Program unitary on the full register.
DenseOperator program_unitary(const HamiltonianProgram& program, int n_qubits);

struct LeakageCertificate {
  /// max ||(1 - P) W P|| over all prefixes W ending at a segment boundary.
  double boundary_leakage = 0.0;
  /// max ||(1 - P) exp(-i tau H) P|| over the tau-grid inside each distinct segment.
  double segment_leakage = 0.0;
  std::uint64_t boundaries_checked = 0;
};

/// Propagates the code frame through every applied segment of the program.
LeakageCertificate certify_leakage(const HamiltonianProgram& program, const std::vector<Ket>& basis,
                                   int grid_points = 4);

}  // namespace jumpcode
