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

#include "jumpcode/checks.hpp"
#include "jumpcode/codes.hpp"
#include "jumpcode/gates.hpp"
#include "oracles.hpp"

using namespace jumpcode;

namespace {

int bit(std::uint64_t x, int q) { return static_cast<int>((x >> (q - 1)) & 1U); }

// Coupling action on amplitudes, straight from bit manipulation.
oracle::Vec apply_coupling(Coupling kind, int a, int b, const oracle::Vec& v) {
  oracle::Vec out = oracle::Vec::Zero(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const auto x = static_cast<std::uint64_t>(i);
    if (kind == Coupling::F) {
      if (bit(x, a) == bit(x, b)) out(i) += v(i);
    } else {
      std::uint64_t y = x & ~((std::uint64_t{1} << (a - 1)) | (std::uint64_t{1} << (b - 1)));
      y |= static_cast<std::uint64_t>(bit(x, a)) << (b - 1);
      y |= static_cast<std::uint64_t>(bit(x, b)) << (a - 1);
      out(static_cast<Eigen::Index>(y)) += v(i);
    }
  }
  return out;
}

oracle::Mat oracle_logical(Coupling kind, int a, int b, const std::vector<Ket>& basis) {
  const auto d = static_cast<Eigen::Index>(basis.size());
  oracle::Mat m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      m(i, j) = basis[static_cast<std::size_t>(i)].amplitudes().dot(
          apply_coupling(kind, a, b, basis[static_cast<std::size_t>(j)].amplitudes()));
  return m;
}

}  // namespace

TEST(Couplings, SwapAndEqualBitsOnPairStates) {
  for (const std::string s : {"00", "01", "10", "11"}) {
    const oracle::Vec v = oracle::basis(s);
    const std::string swapped{s[1], s[0]};
    EXPECT_LE((to_dense(e_op(1, 2), 2) * v - oracle::basis(swapped)).norm(), 1e-15);
    const double keep = s[0] == s[1] ? 1.0 : 0.0;
    EXPECT_LE((to_dense(f_op(1, 2), 2) * v - keep * v).norm(), 1e-15);
  }
  const DenseOperator f = to_dense(f_op(1, 2), 2);
  EXPECT_LE((f * f - f).norm(), 1e-15);
  const DenseOperator zz = oracle::kron(oracle::sz(), oracle::sz());
  EXPECT_LE((f - 0.5 * (oracle::eye(4) + zz)).norm(), 1e-15);
}

TEST(Couplings, ExamplesOnLargerRegisters) {
  const Ket psi = basis_ket("0011");
  EXPECT_GE(fidelity(apply_local(e_op(2, 3), psi), basis_ket("0101")), 1 - 1e-15);
  EXPECT_NEAR(apply_local(f_op(2, 3), psi).norm(), 0.0, 1e-15);
  EXPECT_NEAR(apply_local(f_op(1, 2), psi).norm(), 1.0, 1e-15);
  std::mt19937_64 rng(3);
  const oracle::Vec v = oracle::random_state(64, rng);
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      const Ket k(6, v);
      EXPECT_LE((apply_local(e_op(a, b), k).amplitudes() - apply_coupling(Coupling::E, a, b, v)).norm(), 1e-14);
      EXPECT_LE((apply_local(f_op(b, a), k).amplitudes() - apply_coupling(Coupling::F, a, b, v)).norm(), 1e-14);
    }
  EXPECT_THROW(e_op(2, 2), std::invalid_argument);
  EXPECT_THROW(f_op(0, 1), std::invalid_argument);
}

TEST(Couplings, LogicalTableMatchesBitOracle) {
  const auto reference = table1_reference();
  const auto named = qutrit_couplings();
  ASSERT_EQ(named.size(), 6U);
  ASSERT_EQ(reference.size(), 6U);
  for (double phase : {0.0, 0.9}) {
    const auto basis = codeword_kets(jump_code(4, phase));
    for (std::size_t i = 0; i < named.size(); ++i) {
      const auto& t = named[i].hamiltonian.terms().front();
      const oracle::Mat want = oracle_logical(t.kind, t.first, t.second, basis);
      const DenseOperator got = logical_matrix(named[i].hamiltonian.to_operator(4), basis);
      EXPECT_LE((got - want).norm(), 1e-12) << named[i].name;
      if (phase == 0.0) EXPECT_LE((got - reference[i]).norm(), 1e-12) << named[i].name;
    }
  }
  EXPECT_TRUE(check_table1().passed);
}

TEST(Couplings, LeakageDetected) {
  const auto basis = codeword_kets(jump_code(4));
  EXPECT_LE(leakage(GateHamiltonian::term(Coupling::E, 1, 2).to_operator(4), basis), 1e-15);
  const LocalSum x1(4, {LocalOperator({1}, oracle::sx())});
  EXPECT_NEAR(leakage(x1, basis), 1.0, 1e-12);
  try {
    logical_matrix(x1, basis);
    FAIL() << "expected LeakageError";
  } catch (const LeakageError& e) {
    EXPECT_NEAR(e.leakage(), 1.0, 1e-12);
  }
  EXPECT_THROW(leakage(x1, {}), std::invalid_argument);
}

TEST(GateHamiltonianTest, Canonicalization) {
  const GateHamiltonian a({{Coupling::F, 3, 1, 0.5}, {Coupling::E, 2, 1, 1.0}, {Coupling::F, 1, 3, 0.25}});
  ASSERT_EQ(a.terms().size(), 2U);
  EXPECT_EQ(a.terms()[0].kind, Coupling::E);
  EXPECT_EQ(a.terms()[0].first, 1);
  EXPECT_EQ(a.terms()[0].second, 2);
  EXPECT_EQ(a.terms()[1].coefficient, 0.75);
  EXPECT_TRUE((a - a).empty());
  EXPECT_TRUE(a.scaled(2.0) == a + a);
  EXPECT_EQ(a.max_qubit(), 3);
  EXPECT_THROW(a.to_operator(2), std::out_of_range);
  EXPECT_THROW(GateHamiltonian::term(Coupling::E, 1, 2, std::nan("")), std::invalid_argument);
  EXPECT_EQ(coupling_symbol(Coupling::E), 'E');
  EXPECT_EQ(coupling_from_symbol('F'), Coupling::F);
  EXPECT_THROW(coupling_from_symbol('X'), std::invalid_argument);
}

TEST(Generators, EightHermitianGenerators) {
  const auto gens = su3_generators(jump_code(4));
  ASSERT_EQ(gens.size(), 8U);
  std::vector<DenseOperator> mats;
  for (const auto& g : gens) {
    EXPECT_LE((g.logical - g.logical.adjoint()).norm(), 1e-12) << g.name;
    EXPECT_EQ(g.is_commutator, g.name.back() == '-') << g.name;
    mats.push_back(g.logical);
  }
  DenseOperator c12p = DenseOperator::Zero(3, 3);
  c12p(0, 1) = c12p(1, 0) = 1.0;
  EXPECT_EQ(gens[0].name, "C12+");
  EXPECT_LE((gens[0].logical - c12p).norm(), 1e-12);
  // Commutator generators are i[A, B] of the listed direct parts.
  const auto basis = codeword_kets(jump_code(4));
  for (const auto& g : gens) {
    if (!g.is_commutator) continue;
    const oracle::Mat a = logical_matrix(g.left.to_operator(4), basis);
    const oracle::Mat b = logical_matrix(g.right.to_operator(4), basis);
    EXPECT_LE((g.logical - oracle::cplx(0, 1) * (a * b - b * a)).norm(), 1e-12);
  }
  // Linear independence over the reals: the 8 x 18 real coordinate matrix has rank 8.
  Eigen::MatrixXd coords(18, 8);
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 9; ++i) {
      coords(i, k) = mats[static_cast<std::size_t>(k)](i / 3, i % 3).real();
      coords(9 + i, k) = mats[static_cast<std::size_t>(k)](i / 3, i % 3).imag();
    }
  EXPECT_EQ(Eigen::FullPivLU<Eigen::MatrixXd>(coords).rank(), 8);
  EXPECT_THROW(su3_generators(jump_code(6)), std::invalid_argument);
}
