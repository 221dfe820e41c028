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

#include "jumpcode/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "jumpcode/parallel.hpp"

namespace jumpcode {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument("experiment config: " + message);
}

}  // namespace

void ExperimentConfig::validate() const {
  require(n >= 2 && n % 2 == 0, "n must be even and >= 2");
  require(n <= 10, "n must be <= 10 for closed-loop simulation");
  require(std::isfinite(phase), "phase must be finite");
  require(kappa.size() == 1 || kappa.size() == static_cast<std::size_t>(n),
          "kappa needs 1 or n entries");
  for (double k : kappa) require(std::isfinite(k) && k >= 0.0, "kappa entries must be >= 0");
  require(mismatch.empty() || mismatch.size() == static_cast<std::size_t>(n), "mismatch needs n entries");
  for (double m : mismatch) require(std::isfinite(m) && m >= 0.0, "mismatch factors must be >= 0");
  require(std::isfinite(t_final) && t_final >= 0.0, "t_final must be >= 0");
  require(trajectories >= 1, "trajectories must be >= 1");
  require(std::isfinite(delay) && delay >= 0.0, "delay must be >= 0");
  require(p_miss >= 0.0 && p_miss <= 1.0, "p_miss must lie in [0, 1]");
}

std::vector<double> ExperimentConfig::physical_rates() const {
  std::vector<double> rates(static_cast<std::size_t>(n), kappa.front());
  if (kappa.size() == rates.size()) rates = kappa;
  for (std::size_t a = 0; a < mismatch.size(); ++a) rates[a] *= mismatch[a];
  return rates;
}

Eigen::VectorXcd random_logical_state(std::size_t dimension, std::uint64_t seed, std::uint64_t stream_id) {
  if (dimension == 0) throw std::invalid_argument("random_logical_state: zero dimension");
  RandomStream stream(seed, stream_id);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dimension));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = stream.normal();
    const double im = stream.normal();
    v(i) = cplx(re, im);
  }
  return v / v.norm();
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const JumpCode code = jump_code(config.n, config.phase);
  const RecoveryTable table(code);
  const LindbladModel model = LindbladModel::spontaneous_decay(config.physical_rates());
  ExperimentResult result;
  result.logical = random_logical_state(code.count(), config.seed, kLogicalStateStream);
  result.runs.resize(config.trajectories);
  const CorrectionKnobs knobs{config.delay, config.p_miss};
  parallel_for(config.trajectories, config.threads, [&](std::size_t i) {
    result.runs[i] = simulate_corrected(model, table, result.logical, config.t_final, config.seed, i, knobs);
  });

  double sum = 0.0;
  result.min_fidelity = 1.0;
  for (const auto& run : result.runs) {
    sum += run.fidelity;
    result.min_fidelity = std::min(result.min_fidelity, run.fidelity);
    result.total_jumps += run.jumps.size();
  }
  const double count = static_cast<double>(result.runs.size());
  result.mean_fidelity = sum / count;
  double squares = 0.0;
  for (const auto& run : result.runs) squares += (run.fidelity - result.mean_fidelity) * (run.fidelity - result.mean_fidelity);
  result.std_error = result.runs.size() > 1 ? std::sqrt(squares / (count - 1.0) / count) : 0.0;
  return result;
}

void write_experiment_csv(std::ostream& out, const ExperimentResult& result) {
  write_jump_csv_header(out);
  for (std::size_t i = 0; i < result.runs.size(); ++i) write_jump_csv_rows(out, i, result.runs[i].jumps);
}

json experiment_summary(const ExperimentConfig& config, const ExperimentResult& result) {
  json logical = json::array();
  for (Eigen::Index i = 0; i < result.logical.size(); ++i) logical.push_back(complex_to_json(result.logical(i)));
  return {{"n", config.n},
          {"phase", config.phase},
          {"kappa", config.physical_rates()},
          {"t_final", config.t_final},
          {"trajectories", result.runs.size()},
          {"seed", config.seed},
          {"delay", config.delay},
          {"p_miss", config.p_miss},
          {"logical_state", std::move(logical)},
          {"mean_fidelity", result.mean_fidelity},
          {"std_error", result.std_error},
          {"min_fidelity", result.min_fidelity},
          {"total_jumps", result.total_jumps}};
}

}  // namespace jumpcode
