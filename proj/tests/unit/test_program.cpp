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
#include <random>

#include "jumpcode/codes.hpp"
#include "jumpcode/expm.hpp"
#include "jumpcode/gates.hpp"
#include "jumpcode/program.hpp"
#include "oracles.hpp"

using namespace jumpcode;

namespace {

GateHamiltonian coupling(Coupling kind, int a, int b, double c = 1.0) { return GateHamiltonian::term(kind, a, b, c); }

oracle::Mat oracle_formula(ProductFormula f, const oracle::Mat& h1, const oracle::Mat& h2, double t1, double t2,
                           std::uint64_t n) {
  oracle::Mat body;
  const auto step = [](const oracle::Mat& h, double t) { return oracle::unitary_from_hermitian(h, -t); };
  if (f == ProductFormula::Sum) {
    const double s = 1.0 / static_cast<double>(n);
    body = step(h1, t1 * s) * step(h2, t2 * s);
  } else {
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    body = step(h1, t1 * s) * step(h2, t2 * s) * step(h1, -t1 * s) * step(h2, -t2 * s);
  }
  oracle::Mat out = oracle::eye(h1.rows());
  for (std::uint64_t i = 0; i < n; ++i) out = out * body;
  return out;
}

}  // namespace

TEST(ProductFormulas, DenseProductMatchesOracle) {
  std::mt19937_64 rng(8);
  const oracle::Mat h1 = oracle::random_hermitian(3, rng), h2 = oracle::random_hermitian(3, rng);
  for (auto f : {ProductFormula::Sum, ProductFormula::Commutator})
    for (std::uint64_t n : {1U, 3U, 16U})
      EXPECT_LE((formula_product(f, h1, h2, 0.6, -0.3, n) - oracle_formula(f, h1, h2, 0.6, -0.3, n)).norm(), 1e-12);
  const oracle::Mat sum_target = oracle::unitary_from_hermitian(0.6 * h1 - 0.3 * h2, -1.0);
  EXPECT_LE((formula_target(ProductFormula::Sum, h1, h2, 0.6, -0.3) - sum_target).norm(), 1e-12);
  const oracle::Mat comm = oracle::cplx(0, 1) * (0.6 * h1 * (-0.3) * h2 - (-0.3) * h2 * 0.6 * h1);
  EXPECT_LE((formula_target(ProductFormula::Commutator, h1, h2, 0.6, -0.3) - oracle::unitary_from_hermitian(comm, -1.0)).norm(),
            1e-12);
}

TEST(ProductFormulas, ErrorRatesUnderDoubling) {
  std::mt19937_64 rng(9);
  const oracle::Mat h1 = oracle::random_hermitian(3, rng), h2 = oracle::random_hermitian(3, rng);
  const auto err = [&](ProductFormula f, std::uint64_t n) {
    return oracle::spectral_norm(formula_product(f, h1, h2, 0.7, 0.4, n) - formula_target(f, h1, h2, 0.7, 0.4));
  };
  for (std::uint64_t n : {16U, 64U, 256U}) {
    const double r = err(ProductFormula::Sum, n) / err(ProductFormula::Sum, 2 * n);
    EXPECT_GE(r, 1.6);
    EXPECT_LE(r, 2.4);
  }
  for (std::uint64_t n : {256U, 1024U, 4096U}) {
    const double r = err(ProductFormula::Commutator, n) / err(ProductFormula::Commutator, 2 * n);
    EXPECT_GE(r, 1.19);
    EXPECT_LE(r, 1.65);
  }
}

TEST(ProductFormulas, CommutingPairIsExact) {
  oracle::Mat d1 = oracle::Mat::Zero(3, 3), d2 = oracle::Mat::Zero(3, 3);
  d1.diagonal() << 1.0, -0.5, 2.0;
  d2.diagonal() << 0.3, 0.0, -1.1;
  EXPECT_LE(oracle::spectral_norm(formula_product(ProductFormula::Sum, d1, d2, 0.8, 1.7, 5) -
                                  formula_target(ProductFormula::Sum, d1, d2, 0.8, 1.7)),
            1e-12);
  EXPECT_LE(oracle::spectral_norm(formula_product(ProductFormula::Commutator, d1, d2, 0.8, 1.7, 5) - oracle::eye(3)),
            1e-12);
}

TEST(ProductFormulas, BodyLayout) {
  const auto sum = formula_body(ProductFormula::Sum, 0.5, -1.0, 4);
  ASSERT_EQ(sum.size(), 2U);
  EXPECT_EQ(sum[0].generator, 0);
  EXPECT_DOUBLE_EQ(sum[1].time, -0.25);
  const auto comm = formula_body(ProductFormula::Commutator, 0.5, -1.0, 4);
  ASSERT_EQ(comm.size(), 4U);
  EXPECT_DOUBLE_EQ(comm[0].time, 0.25);
  EXPECT_DOUBLE_EQ(comm[2].time, -0.25);
  EXPECT_EQ(comm[3].generator, 1);
  EXPECT_THROW(formula_body(ProductFormula::Sum, 1, 1, 0), std::invalid_argument);
}

TEST(Program, FactorSegmentHasNonNegativeDuration) {
  const GateHamiltonian h = coupling(Coupling::E, 1, 2) + coupling(Coupling::F, 2, 3, 0.5);
  for (double t : {0.7, -0.7, 0.0}) {
    const Segment s = factor_segment(h, t);
    EXPECT_GE(s.duration, 0.0);
    const HamiltonianProgram p({{"single", 1, {s}}});
    const oracle::Mat want = oracle::unitary_from_hermitian(to_dense(h.to_operator(3)), -t);
    EXPECT_LE((program_unitary(p, 3) - want).norm(), 1e-12) << t;
  }
}

TEST(Program, CountsAndTimes) {
  const GateHamiltonian a = coupling(Coupling::E, 1, 2), b = coupling(Coupling::F, 1, 3);
  const HamiltonianProgram p = trotter_commutator(a, b, 0.5, 0.25, 16);
  EXPECT_EQ(p.body_size(), 4U);
  EXPECT_EQ(p.segment_count(), 64U);
  EXPECT_NEAR(p.total_time(), 16 * 2 * (0.5 + 0.25) / 4.0, 1e-12);
  HamiltonianProgram q;
  EXPECT_TRUE(q.empty());
  EXPECT_EQ(q.segment_count(), 0U);
  q.append({"x", 3, {factor_segment(a, 0.1)}});
  EXPECT_EQ(q.segment_count(), 3U);
  EXPECT_NEAR(q.total_time(), 0.3, 1e-15);
}

TEST(Program, LogicalUnitaryMatchesFormulaAndFullRegister) {
  const JumpCode code = jump_code(4);
  const auto basis = codeword_kets(code);
  const GateHamiltonian a = coupling(Coupling::E, 2, 3) - coupling(Coupling::F, 2, 3);
  const GateHamiltonian b = coupling(Coupling::E, 1, 3) - coupling(Coupling::F, 1, 3);
  const DenseOperator la = logical_matrix(a.to_operator(4), basis), lb = logical_matrix(b.to_operator(4), basis);
  DenseOperator frame(16, 3);
  for (Eigen::Index i = 0; i < 3; ++i) frame.col(i) = basis[static_cast<std::size_t>(i)].amplitudes();
  for (auto [f, prog] : {std::pair{ProductFormula::Sum, trotter_sum(a, b, 0.9, -0.4, 8)},
                         std::pair{ProductFormula::Commutator, trotter_commutator(a, b, 0.9, -0.4, 8)}}) {
    const DenseOperator logical = program_logical_unitary(prog, basis);
    EXPECT_LE((logical - formula_product(f, la, lb, 0.9, -0.4, 8)).norm(), 1e-12);
    const DenseOperator full = program_unitary(prog, 4);
    EXPECT_LE((frame.adjoint() * full * frame - logical).norm(), 1e-12);
    EXPECT_LE(unitarity_residual(full), 1e-12);
  }
}

TEST(Program, MatrixPower) {
  std::mt19937_64 rng(10);
  const oracle::Mat u = oracle::random_unitary(3, rng);
  oracle::Mat acc = oracle::eye(3);
  for (std::uint64_t e = 0; e <= 13; ++e) {
    EXPECT_LE((matrix_power(u, e) - acc).norm(), 1e-12) << e;
    acc = acc * u;
  }
}

TEST(Program, LeakageCertificate) {
  const auto basis = codeword_kets(jump_code(4));
  const GateHamiltonian a = coupling(Coupling::E, 2, 3) - coupling(Coupling::F, 2, 3);
  const GateHamiltonian b = coupling(Coupling::E, 1, 3) - coupling(Coupling::F, 1, 3);
  const LeakageCertificate ok = certify_leakage(trotter_commutator(a, b, 0.5, 0.5, 32), basis);
  EXPECT_LE(ok.boundary_leakage, 1e-12);
  EXPECT_LE(ok.segment_leakage, 1e-12);
  EXPECT_EQ(ok.boundaries_checked, 128U);
  // A single basis state is not invariant under a swap.
  const HamiltonianProgram swap({{"swap", 1, {Segment{coupling(Coupling::E, 2, 3), std::acos(-1.0) / 2}}}});
  const LeakageCertificate bad = certify_leakage(swap, {basis_ket("0011")});
  EXPECT_NEAR(bad.boundary_leakage, 1.0, 1e-12);
  EXPECT_GT(bad.segment_leakage, 0.5);
}
