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

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "jumpcode/codes.hpp"
#include "jumpcode/dynamics.hpp"
#include "oracles.hpp"

using namespace jumpcode;

namespace {

// Pascal's triangle in floating point; exact for the sizes used here.
double pascal(int n, int k) {
  std::vector<double> row{1.0};
  for (int i = 1; i <= n; ++i) {
    std::vector<double> next(static_cast<std::size_t>(i + 1), 1.0);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row.swap(next);
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace

TEST(Binomial, MatchesPascalAndOverflows) {
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) ASSERT_EQ(static_cast<double>(binomial(n, k)), pascal(n, k)) << n << "," << k;
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_THROW(binomial(70, 35), std::overflow_error);
}

TEST(DfsBasis, FourTwoListsSixStrings) {
  const auto labels = dfs_basis(4, 2).labels();
  const std::vector<std::string> expected{"0011", "0101", "0110", "1001", "1010", "1100"};
  EXPECT_EQ(labels, expected);
}

TEST(DfsBasis, DimensionsAndEdgeCases) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const DfsBasis b = dfs_basis(n, k);
      ASSERT_EQ(b.dimension(), binomial(n, k));
      std::set<std::uint64_t> unique(b.states.begin(), b.states.end());
      ASSERT_EQ(unique.size(), b.dimension());
      for (auto s : b.states) ASSERT_EQ(std::popcount(s), k);
      ASSERT_TRUE(std::is_sorted(b.states.begin(), b.states.end()));
    }
  }
  EXPECT_EQ(dfs_basis(5, 0).labels(), std::vector<std::string>{"00000"});
  EXPECT_EQ(dfs_basis(8, 4).dimension(), 70u);
  EXPECT_THROW(dfs_basis(4, 5), std::invalid_argument);
  EXPECT_THROW(dfs_basis(13, 2), std::invalid_argument);
  EXPECT_THROW(dfs_basis(4, -1), std::invalid_argument);
}

TEST(JumpCode, FourQubitPairs) {
  const JumpCode c = jump_code(4);
  ASSERT_EQ(c.count(), 3u);
  const std::vector<std::pair<std::string, std::string>> expected{{"0011", "1100"}, {"0101", "1010"}, {"0110", "1001"}};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(index_to_label(c.pairs()[i].first, 4), expected[i].first);
    EXPECT_EQ(index_to_label(c.pairs()[i].second, 4), expected[i].second);
  }
  EXPECT_EQ(c.redundancy(), 13u);
  EXPECT_TRUE(c.is_complete());
  EXPECT_EQ(jump_code(8).count(), 35u);
}

TEST(JumpCode, TwoQubitCodeword) {
  const double phi = 0.7;
  const JumpCode c = jump_code(2, phi);
  ASSERT_EQ(c.count(), 1u);
  const Ket k = codeword_ket(c, 0);
  EXPECT_NEAR(std::abs(k[1] - cplx(1.0 / std::sqrt(2.0))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(k[2] - std::exp(cplx(0, phi)) / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_EQ(logical_qubits(2), 0.0);
}

TEST(JumpCode, Validation) {
  EXPECT_THROW(jump_code(3), std::invalid_argument);
  EXPECT_THROW(jump_code(0), std::invalid_argument);
  EXPECT_THROW(JumpCode(4, 0.0, {{0b0011, 0b1101}}), std::invalid_argument);
  EXPECT_THROW(JumpCode(4, 0.0, {{0b1100, 0b0011}}), std::invalid_argument);
  EXPECT_THROW(JumpCode(4, 0.0, {{0b0101, 0b1010}, {0b0011, 0b1100}}), std::invalid_argument);
  EXPECT_THROW(JumpCode(4, 0.0, {{0b0001, 0b1110}}), std::invalid_argument);
  EXPECT_THROW(JumpCode(4, std::nan(""), {{0b0011, 0b1100}}), std::invalid_argument);
  const JumpCode partial(4, 0.0, {{0b0011, 0b1100}});
  EXPECT_FALSE(partial.is_complete());
  EXPECT_THROW(codeword_ket(partial, 1), std::out_of_range);
}

TEST(JumpCode, CountIdentityAndStructure) {
  for (int n = 2; n <= 24; n += 2) {
    ASSERT_EQ(binomial(n, n / 2) / 2, binomial(n - 1, n / 2 - 1));
    ASSERT_EQ(binomial(n, n / 2) % 2, 0u);
  }
  for (int n = 2; n <= 16; n += 2) {
    const JumpCode c = jump_code(n);
    ASSERT_EQ(c.count(), binomial(n - 1, n / 2 - 1));
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (const auto& [s, t] : c.pairs()) {
      ASSERT_EQ(s ^ full, t);
      ASSERT_EQ(std::popcount(s), n / 2);
      ASSERT_EQ((s >> (n - 1)) & 1U, 0U);
    }
  }
}

TEST(LogicalQubits, ValuesAndAsymptotics) {
  EXPECT_NEAR(logical_qubits(4), std::log2(3.0), 1e-15);
  EXPECT_NEAR(logical_qubits(8), std::log2(35.0), 1e-15);
  for (int n = 4; n <= 24; n += 2) {
    EXPECT_LE(std::abs(logical_qubits(n) - (n - std::log2(std::sqrt(n)))), 2.0) << n;
    EXPECT_NEAR(logical_qubits(n), std::log2(pascal(n - 1, n / 2 - 1)), 1e-12);
  }
  EXPECT_THROW(logical_qubits(5), std::invalid_argument);
}

TEST(Codewords, OrthonormalAndPhase) {
  const JumpCode c = jump_code(4);
  const Ket c0 = codeword_ket(c, 0);
  const oracle::Vec expected = (oracle::basis("0011") + oracle::basis("1100")) / std::sqrt(2.0);
  EXPECT_LE((c0.amplitudes() - expected).norm(), 1e-15);
  const auto kets = codeword_kets(jump_code(6));
  for (std::size_t i = 0; i < kets.size(); ++i)
    for (std::size_t j = 0; j < kets.size(); ++j)
      ASSERT_NEAR(std::abs(kets[i].inner(kets[j]) - cplx(i == j ? 1.0 : 0.0)), 0.0, 1e-15);
  const Ket flipped = codeword_ket(jump_code(4, std::numbers::pi), 0);
  EXPECT_LE((flipped.amplitudes() - (oracle::basis("0011") - oracle::basis("1100")) / std::sqrt(2.0)).norm(), 1e-15);
}

TEST(Codewords, EncodeDecodeRoundTrip) {
  std::mt19937_64 rng(31);
  const JumpCode c = jump_code(6, 0.4);
  const Eigen::VectorXcd a = oracle::random_state(static_cast<Eigen::Index>(c.count()), rng);
  const Ket psi = encode(c, a);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
  EXPECT_LE((decode(c, psi) - a).norm(), 1e-12);
  EXPECT_THROW(encode(c, Eigen::VectorXcd::Zero(2)), std::invalid_argument);
  EXPECT_THROW(decode(c, basis_ket("0011")), std::invalid_argument);
}

TEST(Projector, Properties) {
  const JumpCode c = jump_code(4);
  const DenseOperator p = projector(c);
  EXPECT_NEAR(p.trace().real(), 3.0, 1e-12);
  EXPECT_LE((p * p - p).norm(), 1e-12);
  EXPECT_LE(hermiticity_residual(p), 1e-12);
  const DenseOperator nop = excitation_number(4);
  EXPECT_LE((p * nop - nop * p).norm(), 1e-12);
  const DenseOperator pd = dfs_projector(dfs_basis(4, 2));
  EXPECT_NEAR(pd.trace().real(), 6.0, 1e-12);
  for (const auto& k : codeword_kets(c)) EXPECT_LE((pd * k.amplitudes() - k.amplitudes()).norm(), 1e-15);
  EXPECT_THROW(span_projector({}), std::invalid_argument);
}

TEST(Projector, DecayGeneratorIsScalarOnEveryDfs) {
  const double kappa = 0.6;
  for (int n = 2; n <= 6; ++n) {
    const auto m = LindbladModel::spontaneous_decay(n, kappa);
    DenseOperator sum = DenseOperator::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (const auto& ch : m.channels()) {
      const DenseOperator l = to_dense(m.jump_operator(ch), n);
      sum += l.adjoint() * l;
    }
    for (int k = 0; k <= n; ++k) {
      const DenseOperator p = dfs_projector(dfs_basis(n, k));
      EXPECT_LE((p * sum * p - k * kappa * p).norm(), 1e-12);
    }
  }
}

TEST(AffinePlane, Axioms) {
  const DesignPlane plane = affine_plane_4();
  EXPECT_EQ(plane.points.size(), 4u);
  EXPECT_EQ(plane.lines.size(), 6u);
  EXPECT_EQ(plane.parallel_classes.size(), 3u);
  for (int p : plane.points) {
    int on = 0;
    for (const auto& l : plane.lines) on += (l.first == p || l.second == p);
    EXPECT_EQ(on, 3);
  }
  // Any two points lie on exactly one line.
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      EXPECT_EQ(std::count(plane.lines.begin(), plane.lines.end(), DesignPlane::Line{a, b}), 1);
  for (const auto& [l, m] : plane.parallel_classes) {
    std::set<int> pts{l.first, l.second, m.first, m.second};
    EXPECT_EQ(pts.size(), 4u);
  }
}

TEST(AffinePlane, ParallelismGivesFourQubitCode) {
  const JumpCode from_plane = parallelism_to_code(affine_plane_4());
  const JumpCode direct = jump_code(4);
  std::set<JumpCode::Pair> a(from_plane.pairs().begin(), from_plane.pairs().end());
  std::set<JumpCode::Pair> b(direct.pairs().begin(), direct.pairs().end());
  EXPECT_EQ(a, b);
}

TEST(ProductBasis, MatchesPrintedStrings) {
  const std::vector<std::array<const char*, 4>> printed{
      {"00110011", "11001100", "00111100", "11000011"}, {"00110101", "11001010", "00111010", "11000101"},
      {"00110110", "11001001", "00111001", "11000110"}, {"01010011", "10101100", "01011100", "10100011"},
      {"01010101", "10101010", "01011010", "10100101"}, {"01010110", "10101001", "01011001", "10100110"},
      {"01100011", "10011100", "01101100", "10010011"}, {"01100101", "10011010", "01101010", "10010101"},
      {"01100110", "10011001", "01101001", "10010110"}};
  const auto basis = product_code_basis(jump_code(4), jump_code(4));
  ASSERT_EQ(basis.size(), 9u);
  const DenseOperator p35 = projector(jump_code(8));
  for (std::size_t i = 0; i < 9; ++i) {
    oracle::Vec expected = oracle::Vec::Zero(256);
    for (const char* s : printed[i]) expected += oracle::basis(s) / 2.0;
    EXPECT_LE((basis[i].amplitudes() - expected).norm(), 1e-15) << i;
    EXPECT_LE((p35 * basis[i].amplitudes() - basis[i].amplitudes()).norm(), 1e-12);
    for (std::size_t j = 0; j < 9; ++j)
      EXPECT_NEAR(std::abs(basis[i].inner(basis[j]) - cplx(i == j ? 1.0 : 0.0)), 0.0, 1e-15);
  }
  EXPECT_THROW(product_code_basis(jump_code(4, 0.0), jump_code(4, 0.3)), std::invalid_argument);
}
