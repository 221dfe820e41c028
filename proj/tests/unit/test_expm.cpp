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

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "jumpcode/expm.hpp"
#include "oracles.hpp"

using namespace jumpcode;

namespace {

LocalSum random_local_sum(int n, std::mt19937_64& rng, bool hermitian) {
  LocalSum h(n);
  for (int a = 1; a <= n; ++a) {
    const int b = a % n + 1;
    const auto blk = hermitian ? oracle::random_hermitian(4, rng) : oracle::random_matrix(4, 4, rng);
    if (a != b) h.add(LocalOperator({a, b}, blk));
  }
  return h;
}

}  // namespace

TEST(ExpmApply, ZeroTimeIsIdentity) {
  std::mt19937_64 rng(1);
  const LocalSum h = random_local_sum(3, rng, true);
  const Ket psi(3, oracle::random_state(8, rng));
  EXPECT_LE((expm_apply(h, 0.0, psi).amplitudes() - psi.amplitudes()).norm(), 0.0);
}

TEST(ExpmApply, MatchesDenseOracleUpToEightQubits) {
  std::mt19937_64 rng(2);
  for (int n : {1, 2, 4, 6, 8}) {
    for (bool hermitian : {true, false}) {
      LocalSum h(n);
      if (n == 1) {
        h.add(LocalOperator({1}, hermitian ? oracle::random_hermitian(2, rng) : oracle::random_matrix(2, 2, rng)));
      } else {
        h = random_local_sum(n, rng, hermitian);
      }
      const Ket psi(n, oracle::random_state(Eigen::Index{1} << n, rng));
      const double t = 0.37;
      const Eigen::VectorXcd expected = oracle::Mat(cplx(0, -t) * to_dense(h)).exp().eval() * psi.amplitudes();
      const Eigen::VectorXcd got = expm_apply(h, t, psi).amplitudes();
      EXPECT_LE((got - expected).norm() / expected.norm(), 1e-10) << "n=" << n << " hermitian=" << hermitian;
      const Eigen::VectorXcd dense_route = expm_apply(to_dense(h), t, psi).amplitudes();
      EXPECT_LE((dense_route - expected).norm() / expected.norm(), 1e-10);
    }
  }
}

TEST(ExpmDense, MatchesEigendecompositionOracle) {
  std::mt19937_64 rng(3);
  const auto h = oracle::random_hermitian(6, rng);
  EXPECT_LE((expm_dense(h, 1.7) - oracle::unitary_from_hermitian(h, 1.7)).norm(), 1e-12);
  EXPECT_LE((matrix_exp(DenseOperator::Zero(3, 3)) - DenseOperator::Identity(3, 3)).norm(), 0.0);
}

TEST(ExpmApply, HermitianPreservesNorm) {
  std::mt19937_64 rng(4);
  const LocalSum h = random_local_sum(5, rng, true);
  const Ket psi(5, oracle::random_state(32, rng));
  EXPECT_NEAR(expm_apply(h, 3.1, psi).norm(), 1.0, 1e-10);
}

TEST(ExpmApply, ScalarDecayOfExcitedQubit) {
  const double kappa = 0.8, t = 1.3;
  LocalSum h(1);
  h.add(LocalOperator({1}, cplx(0.0, -0.5 * kappa) * pauli::number()));
  const Ket out = expm_apply(h, t, basis_ket("1"));
  EXPECT_NEAR(std::abs(out[1] - cplx(std::exp(-0.5 * kappa * t))), 0.0, 1e-14);
}

TEST(ExpmApply, FlowProperty) {
  std::mt19937_64 rng(5);
  const LocalSum h = random_local_sum(4, rng, false).scaled(0.3);
  const Ket psi(4, oracle::random_state(16, rng));
  const Ket ab = expm_apply(h, 0.4, expm_apply(h, 0.9, psi));
  const Ket direct = expm_apply(h, 1.3, psi);
  EXPECT_LE((ab.amplitudes() - direct.amplitudes()).norm(), 1e-9 * direct.norm());
  const Ket back = expm_apply(h, -1.3, direct);
  EXPECT_LE((back.amplitudes() - psi.amplitudes()).norm(), 1e-9);
}

TEST(ExpmApply, DimensionMismatchThrows) {
  EXPECT_THROW(expm_apply(DenseOperator::Identity(4, 4), 1.0, basis_ket("0")), std::invalid_argument);
  LocalSum h(2);
  h.add(LocalOperator({1}, pauli::x()));
  EXPECT_THROW(expm_apply(h, 1.0, basis_ket("000")), std::invalid_argument);
}
