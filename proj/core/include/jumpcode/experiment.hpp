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
#include <iosfwd>
#include <vector>

#include "jumpcode/qec.hpp"
#include "jumpcode/serialization.hpp"

namespace jumpcode {

/// Seeded closed-loop memory experiment on a jump code.
struct ExperimentConfig {
  int n = 4;
  double phase = 0.0;
  /// One rate for all qubits or one per qubit.
  std::vector<double> kappa{1.0};
  /// Per-qubit factors applied to the physical rates; empty means all 1.
  std::vector<double> mismatch;
  double t_final = 1.0;
  std::size_t trajectories = 1000;
  std::uint64_t seed = 0;
  double delay = 0.0;
  double p_miss = 0.0;
  unsigned threads = 0;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  /// Physical decay rates after broadcasting and mismatch.
  std::vector<double> physical_rates() const;
};

struct ExperimentResult {
  Eigen::VectorXcd logical;
  std::vector<CorrectedRun> runs;
  double mean_fidelity = 0.0;
  double std_error = 0.0;
  double min_fidelity = 0.0;
  std::size_t total_jumps = 0;
};

/// Normalized complex Gaussian vector from stream `stream_id` of `seed`.
Eigen::VectorXcd random_logical_state(std::size_t dimension, std::uint64_t seed, std::uint64_t stream_id);

/// Stream id reserved for the encoded logical state of an experiment.
inline constexpr std::uint64_t kLogicalStateStream = 0xffffffffffffffffULL;

ExperimentResult run_experiment(const ExperimentConfig& config);

/// Jump log with columns trajectory_id,t,alpha; trajectories in id order.
void write_experiment_csv(std::ostream& out, const ExperimentResult& result);
json experiment_summary(const ExperimentConfig& config, const ExperimentResult& result);

}  // namespace jumpcode
