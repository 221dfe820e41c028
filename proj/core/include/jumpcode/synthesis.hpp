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

#include "jumpcode/codes.hpp"
#include "jumpcode/program.hpp"

namespace jumpcode {

/// H with U = exp(-i H), from the principal logarithm (eigenphases in (-pi, pi]).
DenseOperator principal_hamiltonian(const DenseOperator& unitary);

struct SynthesisOptions {
  double epsilon = 1e-2;
  std::uint64_t max_repetitions = std::uint64_t{1} << 16;
  int leakage_grid_points = 4;
  bool certify = true;
};

struct SynthesisResult {
  HamiltonianProgram program;
  /// Logical unitary realized by the program.
  DenseOperator achieved;
  /// Phase-aligned spectral distance to the target.
  double error = 0.0;
  bool reached = false;
  std::uint64_t repetitions = 0;
  /// Expansion of the traceless target generator over the eight generators.
  std::vector<std::pair<std::string, double>> coefficients;
  LeakageCertificate leakage;
};

/// Emits a program of E/F segments whose action on the four-qubit jump code
/// approximates `target` up to global phase.
///
/// The generator is split into directly realizable couplings, applied as one
/// segment per repetition, and commutator generators, each applied as one
/// group-commutator step per repetition. The repetition count is doubled
/// until the error is below epsilon or the cap is reached; `reached` reports
/// which.
SynthesisResult synthesize_qutrit(const DenseOperator& target, const JumpCode& code,
                                  const SynthesisOptions& options = {});

/// Haar-distributed 3x3 special unitary from a seeded stream.
DenseOperator random_su3(std::uint64_t seed, std::uint64_t stream_id);

}  // namespace jumpcode
