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
#include <utility>
#include <vector>

#include "jumpcode/ket.hpp"
#include "jumpcode/operators.hpp"

namespace jumpcode {

/// Exact binomial coefficient; throws on overflow.
std::uint64_t binomial(int n, int k);

/// All N-qubit basis states with exactly k excitations. The masks use the
/// register bit order of `Ket`, and sorting them numerically sorts their
/// printed labels lexicographically.
struct DfsBasis {
  int n;
  int k;
  std::vector<std::uint64_t> states;

  std::size_t dimension() const { return states.size(); }
  std::vector<std::string> labels() const;
};

DfsBasis dfs_basis(int n, int k);

/// One-error-correcting jump code built from complementary pairs of
/// weight-N/2 basis states, |c_i> = (|s_i> + e^{i phase} |~s_i>) / sqrt(2).
///
/// The representative s_i of each pair has qubit N in |0>; codewords are
/// ordered by s_i.
class JumpCode {
 public:
  using Pair = std::pair<std::uint64_t, std::uint64_t>;

  /// Validates complementarity, weight N/2, disjointness and canonical order.
  JumpCode(int n, double phase, std::vector<Pair> pairs);

  int n() const { return n_; }
  int k() const { return n_ / 2; }
  double phase() const { return phase_; }
  const std::vector<Pair>& pairs() const { return pairs_; }

  std::size_t count() const { return pairs_.size(); }
  /// 2^N - count
  std::uint64_t redundancy() const;
  /// True when every weight-N/2 pair is present.
  bool is_complete() const;

 private:
  int n_;
  double phase_;
  std::vector<Pair> pairs_;
};

JumpCode jump_code(int n, double phase = 0.0);

/// log2 C(N-1, N/2-1)
double logical_qubits(int n);

Ket codeword_ket(const JumpCode& code, std::size_t i);
std::vector<Ket> codeword_kets(const JumpCode& code);
/// sum_i amplitudes[i] |c_i>; amplitudes are used as given.
Ket encode(const JumpCode& code, const Eigen::VectorXcd& amplitudes);
/// <c_i|psi> for every codeword.
Eigen::VectorXcd decode(const JumpCode& code, const Ket& psi);

DenseOperator projector(const JumpCode& code);
DenseOperator dfs_projector(const DfsBasis& basis);
/// Projector onto the span of orthonormal kets.
DenseOperator span_projector(const std::vector<Ket>& kets);

/// Affine plane of order two: four points, six lines, three parallel classes.
struct DesignPlane {
  using Line = std::pair<int, int>;
  std::vector<int> points;
  std::vector<Line> lines;
  std::vector<std::pair<Line, Line>> parallel_classes;
};

DesignPlane affine_plane_4();

/// Each parallel class {l, l'} becomes the codeword pairing the basis state
/// that excites the points of l with the one exciting the points of l'.
JumpCode parallelism_to_code(const DesignPlane& plane, double phase = 0.0);

/// |ij>_L = |c_i>_A (x) |c_j>_B with A on the high register; returned in
/// row-major (i, j) order.
std::vector<Ket> product_code_basis(const JumpCode& high, const JumpCode& low);

}  // namespace jumpcode
