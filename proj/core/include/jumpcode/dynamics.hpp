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
#include <optional>
#include <vector>

#include "jumpcode/density.hpp"
#include "jumpcode/ket.hpp"
#include "jumpcode/kraus.hpp"
#include "jumpcode/operators.hpp"
#include "jumpcode/rng.hpp"

namespace jumpcode {

/// Spontaneous decay of one qubit, L = sqrt(rate) |0><1|.
struct DecayChannel {
  int qubit;
  double rate;
};

/// Coherent Hamiltonian plus independent decay channels (hbar = 1).
///
/// The generator is the standard GKSL form
///   d rho/dt = -i[H, rho] + sum_a (L_a rho L_a^dagger - 1/2 {L_a^dagger L_a, rho}),
/// so an isolated excited qubit decays as exp(-rate t) and the no-jump
/// evolution is exp(-i H_eff t) with H_eff = H - (i/2) sum_a L_a^dagger L_a.
class LindbladModel {
 public:
  LindbladModel(int n_qubits, LocalSum hamiltonian, std::vector<DecayChannel> channels);

  /// Memory model: H = 0, every qubit decays with `rate`.
  static LindbladModel spontaneous_decay(int n_qubits, double rate);
  /// Memory model with per-qubit rates; rates[a-1] belongs to qubit a.
  static LindbladModel spontaneous_decay(const std::vector<double>& rates);

  int n_qubits() const { return n_qubits_; }
  const LocalSum& hamiltonian() const { return hamiltonian_; }
  const std::vector<DecayChannel>& channels() const { return channels_; }
  bool has_hamiltonian() const { return !hamiltonian_.empty(); }

  LocalOperator jump_operator(const DecayChannel& channel) const;

 private:
  int n_qubits_;
  LocalSum hamiltonian_;
  std::vector<DecayChannel> channels_;
};

LocalSum effective_hamiltonian(const LindbladModel& model);

/// K0(t) = exp(-t/2 sum_a L_a^dagger L_a), the no-detection Kraus operator of
/// the memory model. Throws std::logic_error when the model has a Hamiltonian.
DenseOperator no_jump_kraus(const LindbladModel& model, double t);

/// Complete Kraus set of the memory model over a window t: every subset of
/// channels may have fired once. The first operator is K0(t).
KrausSet decay_kraus(const LindbladModel& model, double t);

/// Right-hand side of the master equation.
DenseOperator lindblad_rhs(const LindbladModel& model, const DenseOperator& rho);

/// Fixed-step RK4; the step is shrunk so that T is an integer number of steps.
DensityMatrix integrate_master(const LindbladModel& model, const DensityMatrix& rho0, double t_final,
                               double dt);

struct Jump {
  double time;
  int qubit;
};

struct TrajectoryRecord {
  std::vector<Jump> jumps;
  Ket final_state;
  /// Squared norm of the unnormalized conditional state
  /// exp(-iH_eff(T-t_n)) L_n ... L_1 exp(-iH_eff t_1) psi0, i.e. the
  /// probability density of this record.
  double weight = 1.0;
  bool absorbed = false;
};

/// Stateful Monte-Carlo wave-function integrator for one trajectory.
///
/// The conditional state evolves under exp(-i H_eff t) until its squared norm
/// falls to a uniform threshold; the crossing is located by bisection and the
/// channel drawn with probability proportional to ||L_a psi||^2.
class TrajectorySimulator {
 public:
  TrajectorySimulator(const LindbladModel& model, const Ket& psi0, RandomStream stream);

  /// Evolves until the next jump or `t_stop`, whichever comes first.
  std::optional<Jump> advance(double t_stop);

  double time() const { return time_; }
  Ket state() const;
  double weight() const { return weight_ * unnormalized_.squaredNorm(); }
  bool absorbed() const { return absorbed_; }

  /// Applies a norm-preserving operator to the current conditional state.
  void apply_unitary(const DenseOperator& u);
  void apply_unitary(const LocalOperator& u);

  RandomStream& stream() { return stream_; }

 private:
  Eigen::VectorXcd propagate(const Eigen::VectorXcd& v, double dt) const;
  int draw_channel();

  LindbladModel model_;
  LocalSum heff_;
  DenseOperator heff_dense_;
  bool use_dense_ = false;
  double norm_bound_ = 0.0;
  std::vector<LocalOperator> jumps_;

  RandomStream stream_;
  Eigen::VectorXcd unnormalized_;
  double threshold_ = 0.0;
  double weight_ = 1.0;
  double time_ = 0.0;
  bool absorbed_ = false;
};

/// One trajectory over [0, t_final] drawn from stream `trajectory_id` of `seed`.
TrajectoryRecord run_trajectory(const LindbladModel& model, const Ket& psi0, double t_final,
                                std::uint64_t seed, std::uint64_t trajectory_id = 0);

/// Mean of |psi_T><psi_T| over `count` trajectories. Trajectory i uses stream i
/// of `seed`; the reduction is a fixed pairwise tree over fixed-size blocks, so
/// the result does not depend on `threads`.
DensityMatrix average_trajectories(const LindbladModel& model, const Ket& psi0, double t_final,
                                   std::size_t count, std::uint64_t seed, unsigned threads = 0);

/// Deterministic pairwise sum of equally shaped matrices.
DenseOperator pairwise_sum(std::vector<DenseOperator> parts);

}  // namespace jumpcode
