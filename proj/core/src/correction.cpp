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

#include <cmath>
#include <deque>
#include <stdexcept>

#include "jumpcode/expm.hpp"
#include "jumpcode/qec.hpp"

namespace jumpcode {

namespace {

struct PendingRecovery {
  double due;
  int qubit;
};

Ket encoded_logical(const JumpCode& code, const Eigen::VectorXcd& logical) {
  const double norm = logical.norm();
  if (!(norm > 0.0)) {
    throw std::invalid_argument("logical state must be non-zero");
  }
  return encode(code, logical / norm);
}

}  // namespace

CorrectionResult correct_trajectory(const TrajectoryRecord& record, const JumpCode& code,
                                    const Eigen::VectorXcd& logical, const LindbladModel& model,
                                    double t_final, double delay) {
  return correct_trajectory(record, RecoveryTable(code), logical, model, t_final, delay);
}

CorrectionResult correct_trajectory(const TrajectoryRecord& record, const RecoveryTable& table,
                                    const Eigen::VectorXcd& logical, const LindbladModel& model,
                                    double t_final, double delay) {
  const JumpCode& code = table.code();
  if (model.n_qubits() != code.n()) {
    throw std::invalid_argument("correct_trajectory: model and code registers differ");
  }
  if (delay < 0.0) {
    throw std::invalid_argument("correct_trajectory: negative recovery delay");
  }
  double last = 0.0;
  for (const auto& j : record.jumps) {
    if (j.qubit < 1 || j.qubit > code.n()) {
      throw std::invalid_argument("correct_trajectory: jump on a qubit outside the code");
    }
    if (j.time < last || j.time > t_final) {
      throw std::invalid_argument("correct_trajectory: jump times must be ordered within [0, T]");
    }
    last = j.time;
  }

  const Ket encoded = encoded_logical(code, logical);
  const LocalSum heff = effective_hamiltonian(model);
  Ket psi = encoded;
  double now = 0.0;
  std::deque<PendingRecovery> pending;

  auto evolve_to = [&](double t) {
    if (t > now) {
      psi = expm_apply(heff, t - now, psi).normalized();
      now = t;
    }
  };
  auto flush_until = [&](double t) {
    while (!pending.empty() && pending.front().due <= t) {
      evolve_to(pending.front().due);
      psi = Ket(psi.n_qubits(), table[pending.front().qubit] * psi.amplitudes());
      pending.pop_front();
    }
  };

  for (const auto& j : record.jumps) {
    flush_until(j.time);
    evolve_to(j.time);
    const Ket jumped = apply_local(model.jump_operator({j.qubit, 1.0}), psi);
    if (jumped.norm() < 1e-12) {
      throw std::invalid_argument("correct_trajectory: record inconsistent with the replayed state");
    }
    psi = jumped.normalized();
    pending.push_back({j.time + delay, j.qubit});
  }
  flush_until(t_final);
  evolve_to(t_final);
  // Recoveries still queued at the horizon complete before readout.
  for (const auto& p : pending) psi = Ket(psi.n_qubits(), table[p.qubit] * psi.amplitudes());
  return {psi, fidelity(encoded, psi)};
}

CorrectedRun simulate_corrected(const LindbladModel& model, const RecoveryTable& table,
                                const Eigen::VectorXcd& logical, double t_final,
                                std::uint64_t seed, std::uint64_t trajectory_id,
                                const CorrectionKnobs& knobs) {
  const JumpCode& code = table.code();
  if (model.n_qubits() != code.n()) {
    throw std::invalid_argument("simulate_corrected: model and code registers differ");
  }
  if (knobs.delay < 0.0 || !(knobs.p_miss >= 0.0 && knobs.p_miss <= 1.0)) {
    throw std::invalid_argument("simulate_corrected: knobs out of range");
  }
  const Ket encoded = encoded_logical(code, logical);
  TrajectorySimulator sim(model, encoded, RandomStream(seed, trajectory_id));
  // Detection decisions use their own stream so they never shift jump draws.
  RandomStream detector(mix64(seed ^ 0x5851f42d4c957f2dULL), trajectory_id);

  CorrectedRun run;
  std::deque<PendingRecovery> pending;
  while (sim.time() < t_final && !sim.absorbed()) {
    const double stop = pending.empty() ? t_final : std::min(pending.front().due, t_final);
    if (auto jump = sim.advance(stop)) {
      run.jumps.push_back(*jump);
      const bool seen = detector.uniform() >= knobs.p_miss;
      run.detected.push_back(seen);
      if (seen) pending.push_back({jump->time + knobs.delay, jump->qubit});
    }
    while (!pending.empty() && pending.front().due <= sim.time()) {
      sim.apply_unitary(table[pending.front().qubit]);
      pending.pop_front();
    }
  }
  for (const auto& p : pending) sim.apply_unitary(table[p.qubit]);
  run.final_state = sim.state();
  run.fidelity = fidelity(encoded, run.final_state);
  return run;
}

}  // namespace jumpcode
