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

#include "jumpcode/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "jumpcode/expm.hpp"
#include "jumpcode/lie.hpp"
#include "jumpcode/rng.hpp"

namespace jumpcode {

DenseOperator principal_hamiltonian(const DenseOperator& unitary) {
  if (unitary.rows() != unitary.cols()) {
    throw std::invalid_argument("principal_hamiltonian: matrix must be square");
  }
  if (unitarity_residual(unitary) > 1e-10) {
    throw std::invalid_argument("principal_hamiltonian: matrix is not unitary");
  }
  // A unitary is normal, so its Schur form is diagonal and Q is unitary.
  Eigen::ComplexSchur<DenseOperator> schur(unitary);
  const DenseOperator& q = schur.matrixU();
  Eigen::VectorXd phases(unitary.rows());
  for (Eigen::Index k = 0; k < unitary.rows(); ++k) {
    double theta = std::arg(schur.matrixT()(k, k));
    if (theta <= -std::numbers::pi) theta += 2.0 * std::numbers::pi;
    phases[k] = theta;
  }
  DenseOperator h = -(q * phases.cast<cplx>().asDiagonal() * q.adjoint());
  return 0.5 * (h + h.adjoint());
}

namespace {

struct CommutatorPiece {
  double coefficient;
  GateHamiltonian left;
  GateHamiltonian right;
};

HamiltonianProgram build_program(const GateHamiltonian& direct, const std::vector<CommutatorPiece>& pieces,
                                 std::uint64_t n) {
  ProgramStage stage{"sum+commutator", n, {}};
  if (!direct.empty()) stage.body.push_back({direct, 1.0 / static_cast<double>(n)});
  for (const auto& p : pieces) {
    // One group commutator per repetition with s1 * s2 = -b / n gives
    // exp(-i (b/n) i[L, R]) to second order.
    const double root = std::sqrt(std::abs(p.coefficient));
    const double t1 = root;
    const double t2 = p.coefficient > 0.0 ? -root : root;
    const GateHamiltonian* hs[] = {&p.left, &p.right};
    const auto factors = formula_body(ProductFormula::Commutator, t1, t2, n);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      stage.body.push_back(factor_segment(*hs[it->generator], it->time));
    }
  }
  return HamiltonianProgram({stage});
}

}  // namespace

SynthesisResult synthesize_qutrit(const DenseOperator& target, const JumpCode& code,
                                  const SynthesisOptions& options) {
  if (target.rows() != 3 || target.cols() != 3) {
    throw std::invalid_argument("synthesize_qutrit: target must be 3x3");
  }
  if (code.n() != 4 || code.count() != 3) {
    throw std::invalid_argument("synthesize_qutrit: expects the four-qubit jump code");
  }
  if (!(options.epsilon > 0.0) || options.max_repetitions == 0) {
    throw std::invalid_argument("synthesize_qutrit: invalid options");
  }
  const DenseOperator h = principal_hamiltonian(target);
  const DenseOperator traceless = h - (h.trace() / 3.0) * DenseOperator::Identity(3, 3);

  const auto generators = su3_generators(code);
  std::vector<DenseOperator> spanning;
  for (const auto& g : generators) spanning.push_back(g.logical);
  spanning.push_back(DenseOperator::Identity(3, 3));
  const RealExpansion expansion = expand_real(spanning, traceless);
  if (expansion.residual > 1e-9) {
    throw std::runtime_error("synthesize_qutrit: generator set does not span the target");
  }

  SynthesisResult result;
  GateHamiltonian direct;
  std::vector<CommutatorPiece> pieces;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const double c = expansion.coefficients[static_cast<Eigen::Index>(k)];
    result.coefficients.emplace_back(generators[k].name, c);
    if (std::abs(c) <= 1e-14) continue;
    if (generators[k].is_commutator) {
      pieces.push_back({c, generators[k].left, generators[k].right});
    } else {
      direct = direct + generators[k].direct.scaled(c);
    }
  }

  const auto basis = codeword_kets(code);
  auto finish = [&](HamiltonianProgram program, std::uint64_t n) {
    result.achieved = program.empty() ? DenseOperator(DenseOperator::Identity(3, 3))
                                      : program_logical_unitary(program, basis);
    result.error = phase_aligned_distance(result.achieved, target);
    result.reached = result.error <= options.epsilon;
    result.repetitions = n;
    program.target_error = options.epsilon;
    program.achieved_error = result.error;
    result.program = std::move(program);
  };

  if (direct.empty() && pieces.empty()) {
    finish(HamiltonianProgram{}, 0);
  } else {
    std::uint64_t n = 1;
    while (true) {
      finish(build_program(direct, pieces, n), n);
      // Without commutator pieces a single exact segment suffices.
      if (result.reached || pieces.empty() || n >= options.max_repetitions) break;
      n = std::min(n * 2, options.max_repetitions);
    }
  }
  if (options.certify && !result.program.empty()) {
    result.leakage = certify_leakage(result.program, basis, options.leakage_grid_points);
  }
  return result;
}

DenseOperator random_su3(std::uint64_t seed, std::uint64_t stream_id) {
  RandomStream rng(seed, stream_id);
  DenseOperator z(3, 3);
  for (Eigen::Index j = 0; j < 3; ++j) {
    for (Eigen::Index i = 0; i < 3; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = cplx(re, im) / std::numbers::sqrt2;
    }
  }
  Eigen::HouseholderQR<DenseOperator> qr(z);
  DenseOperator q = qr.householderQ();
  const DenseOperator r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the phases of R's diagonal makes Q Haar distributed.
  for (Eigen::Index k = 0; k < 3; ++k) {
    const cplx d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  const cplx det = q.determinant();
  q *= std::pow(det, -1.0 / 3.0);
  return q;
}

}  // namespace jumpcode
