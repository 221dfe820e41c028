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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jumpcode/codes.hpp"
#include "jumpcode/expm.hpp"
#include "jumpcode/gates.hpp"
#include "jumpcode/synthesis.hpp"
#include "oracles.hpp"

using namespace jumpcode;

TEST(PrincipalLog, InvertsExponential) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const oracle::Mat u = oracle::random_unitary(3, rng);
    const DenseOperator h = principal_hamiltonian(u);
    EXPECT_LE((h - h.adjoint()).norm(), 1e-12);
    EXPECT_LE((oracle::unitary_from_hermitian(0.5 * (h + h.adjoint()), 1.0) - u).norm(), 1e-10);
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<oracle::Mat>(0.5 * (h + h.adjoint())).eigenvalues();
    EXPECT_GT(ev.minCoeff(), -std::numbers::pi - 1e-12);
    EXPECT_LE(ev.maxCoeff(), std::numbers::pi + 1e-12);
  }
  EXPECT_THROW(principal_hamiltonian(2.0 * oracle::eye(3)), std::invalid_argument);
  EXPECT_THROW(principal_hamiltonian(oracle::Mat::Identity(2, 3)), std::invalid_argument);
}

TEST(RandomSU3, SpecialUnitaryAndSeeded) {
  const DenseOperator a = random_su3(2026, 0);
  EXPECT_LE(unitarity_residual(a), 1e-12);
  EXPECT_NEAR(std::abs(a.determinant() - oracle::cplx(1.0)), 0.0, 1e-12);
  EXPECT_TRUE(a == random_su3(2026, 0));
  EXPECT_FALSE(a == random_su3(2026, 1));
}

TEST(Synthesis, IdentityNeedsNoSegments) {
  const auto r = synthesize_qutrit(DenseOperator::Identity(3, 3), jump_code(4));
  EXPECT_TRUE(r.reached);
  EXPECT_LE(r.error, 1e-12);
  EXPECT_EQ(r.program.segment_count(), 0U);
}

TEST(Synthesis, DirectCouplingIsOneSegment) {
  const auto basis = codeword_kets(jump_code(4));
  const DenseOperator e12 = logical_matrix(GateHamiltonian::term(Coupling::E, 1, 2).to_operator(4), basis);
  const DenseOperator target = oracle::unitary_from_hermitian(e12, std::numbers::pi / 2);
  const auto r = synthesize_qutrit(target, jump_code(4));
  EXPECT_TRUE(r.reached);
  EXPECT_EQ(r.program.segment_count(), 1U);
  EXPECT_LE(oracle::min_phase_distance(program_logical_unitary(r.program, basis), target), 1e-10);
}

TEST(Synthesis, HaarTargetsAreSoundAndCertified) {
  const JumpCode code = jump_code(4);
  const auto basis = codeword_kets(code);
  DenseOperator frame(16, 3);
  for (Eigen::Index i = 0; i < 3; ++i) frame.col(i) = basis[static_cast<std::size_t>(i)].amplitudes();
  for (std::uint64_t id = 0; id < 3; ++id) {
    const DenseOperator target = random_su3(2026, id);
    const auto r = synthesize_qutrit(target, code);
    ASSERT_TRUE(r.reached) << id;
    EXPECT_LE(r.repetitions, std::uint64_t{1} << 16);
    EXPECT_LE(r.error, 1e-2);
    // The reported error bounds the true phase-minimized distance.
    const double truth = oracle::min_phase_distance(r.achieved, target);
    EXPECT_LE(truth, r.error + 1e-12);
    // Replaying the emitted program from scratch gives the claimed unitary.
    EXPECT_LE((program_logical_unitary(r.program, basis) - r.achieved).norm(), 1e-9);
    const DenseOperator full = program_unitary(r.program, 4);
    EXPECT_LE(oracle::min_phase_distance(frame.adjoint() * full * frame, target), 1e-2);
    EXPECT_LE(r.leakage.boundary_leakage, 1e-12);
    EXPECT_LE(r.leakage.segment_leakage, 1e-12);
    EXPECT_EQ(r.coefficients.size(), 8U);
  }
}

TEST(Synthesis, RespectsTheRepetitionCap) {
  SynthesisOptions opts;
  opts.epsilon = 1e-9;
  opts.max_repetitions = 8;
  opts.certify = false;
  const auto r = synthesize_qutrit(random_su3(7, 0), jump_code(4), opts);
  EXPECT_FALSE(r.reached);
  EXPECT_LE(r.repetitions, 8U);
  EXPECT_GT(r.error, 1e-9);
}

TEST(Synthesis, RejectsBadInput) {
  EXPECT_THROW(synthesize_qutrit(DenseOperator::Identity(2, 2), jump_code(4)), std::invalid_argument);
  EXPECT_THROW(synthesize_qutrit(DenseOperator::Identity(3, 3), jump_code(6)), std::invalid_argument);
  SynthesisOptions bad;
  bad.epsilon = -1.0;
  EXPECT_THROW(synthesize_qutrit(DenseOperator::Identity(3, 3), jump_code(4), bad), std::invalid_argument);
}
