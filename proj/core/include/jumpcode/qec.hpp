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
#include "jumpcode/dynamics.hpp"
#include "jumpcode/kraus.hpp"

namespace jumpcode {

inline constexpr double kDefaultTolerance = 1e-9;

/// Outcome of the Knill-Laflamme test P K_l^dagger K_l' P = Lambda_ll' P.
struct KLReport {
  DenseOperator lambda;
  double residual = 0.0;
  /// Location of the largest residual (l, l').
  std::size_t worst_l = 0;
  std::size_t worst_lp = 0;
  double min_eigenvalue = 0.0;
  bool psd_ok = false;
  bool reversible = false;

  std::string verdict() const { return reversible ? "reversible" : "not reversible"; }
};

/// Lambda_ll' = Tr(P K_l^dagger K_l' P) / rank(P); the residual is the largest
/// spectral norm of P K_l^dagger K_l' P - Lambda_ll' P. Throws on a zero-rank
/// or non-projector P.
KLReport kl_check(const KrausSet& kraus, const DenseOperator& projector,
                  double tol = kDefaultTolerance);

/// Per-operator test of K_l P = lambda_l P.
struct DfsReport {
  std::vector<cplx> lambdas;
  std::vector<double> residuals;
  bool passes = false;
  /// max |Lambda_ll' - conj(lambda_l) lambda_l'| against the KL matrix,
  /// only computed when every residual passes.
  double factorization_residual = 0.0;
};

DfsReport dfs_check(const KrausSet& kraus, const DenseOperator& projector,
                    double tol = kDefaultTolerance);

/// Same channel iff the Choi matrices agree within `tol` (Frobenius norm).
bool kraus_equivalent(const KrausSet& a, const KrausSet& b, double tol = kDefaultTolerance);

/// Unitary U with U (L_a|c_i>/||L_a|c_i>||) = |c_i> for every codeword.
///
/// Both the image frame and the code frame are completed to full orthonormal
/// bases by modified Gram-Schmidt over the computational basis in index
/// order, so the result is deterministic. Throws if the KL test fails for
/// {L_a} or an image is degenerate.
DenseOperator recovery_unitary(const JumpCode& code, int qubit, double tol = kDefaultTolerance);

/// Recovery operators for every qubit of a code, built once.
class RecoveryTable {
 public:
  explicit RecoveryTable(const JumpCode& code);
  const DenseOperator& operator[](int qubit) const {
    return unitaries_.at(static_cast<std::size_t>(qubit - 1));
  }
  const JumpCode& code() const { return code_; }

 private:
  JumpCode code_;
  std::vector<DenseOperator> unitaries_;
};

struct CorrectionResult {
  Ket final_state;
  double fidelity = 0.0;
};

/// Replays a jump record on the encoded logical state and applies the
/// recovery for each jump `delay` after it. Recoveries still queued at the
/// horizon are applied before readout; a recovery and a jump at the same
/// instant are ordered recovery first. Fidelity is |<encoded|final>|^2.
CorrectionResult correct_trajectory(const TrajectoryRecord& record, const JumpCode& code,
                                    const Eigen::VectorXcd& logical, const LindbladModel& model,
                                    double t_final, double delay = 0.0);
CorrectionResult correct_trajectory(const TrajectoryRecord& record, const RecoveryTable& table,
                                    const Eigen::VectorXcd& logical, const LindbladModel& model,
                                    double t_final, double delay = 0.0);

/// Controller imperfections for closed-loop simulation.
struct CorrectionKnobs {
  double delay = 0.0;   // time between a detected jump and its recovery
  double p_miss = 0.0;  // probability that a jump goes undetected
};

struct CorrectedRun {
  std::vector<Jump> jumps;  // every physical jump, in time order
  std::vector<bool> detected;
  Ket final_state;
  double fidelity = 0.0;
};

/// Closed-loop trajectory: recoveries are applied while the trajectory runs,
/// so subsequent jump statistics see the corrected state. Queued recoveries
/// complete at the horizon.
CorrectedRun simulate_corrected(const LindbladModel& model, const RecoveryTable& table,
                                const Eigen::VectorXcd& logical, double t_final,
                                std::uint64_t seed, std::uint64_t trajectory_id,
                                const CorrectionKnobs& knobs = {});

}  // namespace jumpcode
