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

#include "jumpcode/checks.hpp"
#include "jumpcode/codes.hpp"
#include "jumpcode/gates.hpp"
#include "jumpcode/lie.hpp"
#include "oracles.hpp"

using namespace jumpcode;

TEST(Lie, GeneratorClosureIsU3) {
  std::vector<DenseOperator> gens;
  for (const auto& g : su3_generators(jump_code(4))) gens.push_back(g.logical);
  const ClosureReport r = lie_closure(gens);
  EXPECT_EQ(r.dimension, 9);
  EXPECT_EQ(r.traceless_dimension, 8);
  EXPECT_LE(span_inclusion_residual(r.traceless_basis, gell_mann()), 1e-10);
  EXPECT_LE(span_inclusion_residual(r.basis, {DenseOperator::Identity(3, 3)}), 1e-10);
  EXPECT_TRUE(check_closure().passed);
}

TEST(Lie, SmallClosures) {
  DenseOperator d = DenseOperator::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  EXPECT_EQ(lie_closure({d}).dimension, 1);
  EXPECT_EQ(lie_closure(gell_mann()).dimension, 8);
  EXPECT_EQ(lie_closure({oracle::sx(), oracle::sz()}).dimension, 3);
  EXPECT_THROW(lie_closure({oracle::sminus()}), std::invalid_argument);
}

TEST(Lie, GellMannIsOrthogonal) {
  const auto g = gell_mann();
  ASSERT_EQ(g.size(), 8U);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(std::abs(g[i].trace()), 0.0, 1e-15);
    for (std::size_t j = 0; j < 8; ++j)
      EXPECT_NEAR(std::abs((g[i] * g[j]).trace() - oracle::cplx(i == j ? 2.0 : 0.0)), 0.0, 1e-14);
  }
}

TEST(Lie, RealExpansionRecoversCoefficients) {
  std::mt19937_64 rng(5);
  const auto g = gell_mann();
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::VectorXd c(8);
  DenseOperator target = DenseOperator::Zero(3, 3);
  for (int i = 0; i < 8; ++i) {
    c(i) = u(rng);
    target += c(i) * g[static_cast<std::size_t>(i)];
  }
  const RealExpansion e = expand_real(g, target);
  EXPECT_LE((e.coefficients - c).norm(), 1e-12);
  EXPECT_LE(e.residual, 1e-12);
  const RealExpansion off = expand_real(g, DenseOperator::Identity(3, 3));
  EXPECT_NEAR(off.residual, std::sqrt(3.0), 1e-12);
}

TEST(Lie, OrthonormalBasisDropsDependentMembers) {
  const DenseOperator a = oracle::sx();
  const auto basis = real_orthonormal_basis({a, 2.0 * a, oracle::sz()});
  ASSERT_EQ(basis.size(), 2U);
  EXPECT_NEAR((basis[0].adjoint() * basis[1]).trace().real(), 0.0, 1e-14);
  EXPECT_NEAR(basis[0].squaredNorm(), 1.0, 1e-14);
}
