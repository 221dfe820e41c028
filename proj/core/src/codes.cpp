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

#include "jumpcode/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <stdexcept>

namespace jumpcode {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const auto num = static_cast<std::uint64_t>(n - k + i);
    // result * num / i stays integral at every step.
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    const std::uint64_t r = result / g;
    const std::uint64_t d = static_cast<std::uint64_t>(i) / g;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      throw std::overflow_error("binomial: result does not fit in 64 bits");
    }
    result = r * (num / d);
  }
  return result;
}

std::vector<std::string> DfsBasis::labels() const {
  std::vector<std::string> out;
  out.reserve(states.size());
  for (auto s : states) out.push_back(index_to_label(s, n));
  return out;
}

DfsBasis dfs_basis(int n, int k) {
  if (n < 1 || n > 12 || k < 0 || k > n) {
    throw std::invalid_argument("dfs_basis: require 0 <= k <= N <= 12 and N >= 1");
  }
  DfsBasis basis{n, k, {}};
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) == k) basis.states.push_back(s);
  }
  return basis;
}

JumpCode::JumpCode(int n, double phase, std::vector<Pair> pairs)
    : n_(n), phase_(phase), pairs_(std::move(pairs)) {
  if (n < 2 || n % 2 != 0 || n > kMaxQubits) {
    throw std::invalid_argument("JumpCode: N must be even and between 2 and 24");
  }
  if (!std::isfinite(phase)) {
    throw std::invalid_argument("JumpCode: phase must be finite");
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto [s, c] = pairs_[i];
    if ((s | c) != full || (s & c) != 0) {
      throw std::invalid_argument("JumpCode: pair members must be bitwise complements");
    }
    if (std::popcount(s) != n / 2) {
      throw std::invalid_argument("JumpCode: codeword branches must have weight N/2");
    }
    if (s & top) {
      throw std::invalid_argument("JumpCode: pair representative must have qubit N unexcited");
    }
    if (i > 0 && pairs_[i - 1].first >= s) {
      throw std::invalid_argument("JumpCode: pairs must be distinct and sorted by representative");
    }
  }
}

std::uint64_t JumpCode::redundancy() const { return (std::uint64_t{1} << n_) - count(); }

bool JumpCode::is_complete() const {
  return count() == binomial(n_ - 1, n_ / 2 - 1);
}

JumpCode jump_code(int n, double phase) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("jump_code: N must be even and at least 2");
  }
  if (n > kMaxQubits) {
    throw std::invalid_argument("jump_code: N above the supported register size");
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  std::vector<JumpCode::Pair> pairs;
  for (std::uint64_t s = 0; s < top; ++s) {
    if (std::popcount(s) == n / 2) pairs.emplace_back(s, full ^ s);
  }
  return JumpCode(n, phase, std::move(pairs));
}

double logical_qubits(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("logical_qubits: N must be even and at least 2");
  }
  return std::log2(static_cast<double>(binomial(n - 1, n / 2 - 1)));
}

Ket codeword_ket(const JumpCode& code, std::size_t i) {
  if (i >= code.count()) {
    throw std::out_of_range("codeword_ket: codeword index out of range");
  }
  const auto [s, c] = code.pairs()[i];
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << code.n());
  v[static_cast<Eigen::Index>(s)] = std::numbers::sqrt2 / 2.0;
  v[static_cast<Eigen::Index>(c)] = std::polar(std::numbers::sqrt2 / 2.0, code.phase());
  return Ket(code.n(), std::move(v));
}

std::vector<Ket> codeword_kets(const JumpCode& code) {
  std::vector<Ket> out;
  out.reserve(code.count());
  for (std::size_t i = 0; i < code.count(); ++i) out.push_back(codeword_ket(code, i));
  return out;
}

Ket encode(const JumpCode& code, const Eigen::VectorXcd& amplitudes) {
  if (static_cast<std::size_t>(amplitudes.size()) != code.count()) {
    throw std::invalid_argument("encode: one amplitude per codeword required");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << code.n());
  const cplx phase = std::polar(1.0, code.phase());
  for (std::size_t i = 0; i < code.count(); ++i) {
    const auto [s, c] = code.pairs()[i];
    const cplx a = amplitudes[static_cast<Eigen::Index>(i)] * (std::numbers::sqrt2 / 2.0);
    v[static_cast<Eigen::Index>(s)] += a;
    v[static_cast<Eigen::Index>(c)] += a * phase;
  }
  return Ket(code.n(), std::move(v));
}

Eigen::VectorXcd decode(const JumpCode& code, const Ket& psi) {
  if (psi.n_qubits() != code.n()) {
    throw std::invalid_argument("decode: register size mismatch");
  }
  Eigen::VectorXcd out(static_cast<Eigen::Index>(code.count()));
  const cplx phase = std::polar(1.0, code.phase());
  for (std::size_t i = 0; i < code.count(); ++i) {
    const auto [s, c] = code.pairs()[i];
    out[static_cast<Eigen::Index>(i)] =
        (psi[static_cast<Eigen::Index>(s)] + std::conj(phase) * psi[static_cast<Eigen::Index>(c)]) *
        (std::numbers::sqrt2 / 2.0);
  }
  return out;
}

DenseOperator span_projector(const std::vector<Ket>& kets) {
  if (kets.empty()) {
    throw std::invalid_argument("span_projector: no kets");
  }
  const Eigen::Index dim = kets.front().dimension();
  if (dim > kDenseProjectorLimit) {
    throw std::invalid_argument("span_projector: register too large for a dense projector");
  }
  DenseOperator p = DenseOperator::Zero(dim, dim);
  for (const auto& k : kets) p.noalias() += k.amplitudes() * k.amplitudes().adjoint();
  return p;
}

DenseOperator projector(const JumpCode& code) { return span_projector(codeword_kets(code)); }

DenseOperator dfs_projector(const DfsBasis& basis) {
  const Eigen::Index dim = Eigen::Index{1} << basis.n;
  DenseOperator p = DenseOperator::Zero(dim, dim);
  for (auto s : basis.states) p(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = 1.0;
  return p;
}

DesignPlane affine_plane_4() {
  DesignPlane plane;
  plane.points = {1, 2, 3, 4};
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) plane.lines.emplace_back(a, b);
  }
  // Two lines are parallel when they share no point.
  for (std::size_t i = 0; i < plane.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < plane.lines.size(); ++j) {
      const auto& l = plane.lines[i];
      const auto& m = plane.lines[j];
      if (l.first != m.first && l.first != m.second && l.second != m.first && l.second != m.second) {
        plane.parallel_classes.emplace_back(l, m);
      }
    }
  }
  return plane;
}

JumpCode parallelism_to_code(const DesignPlane& plane, double phase) {
  const int n = static_cast<int>(plane.points.size());
  auto excite = [](const DesignPlane::Line& l) {
    return (std::uint64_t{1} << (l.first - 1)) | (std::uint64_t{1} << (l.second - 1));
  };
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  std::vector<JumpCode::Pair> pairs;
  for (const auto& [l, m] : plane.parallel_classes) {
    std::uint64_t s = excite(l);
    std::uint64_t c = excite(m);
    if (s & top) std::swap(s, c);
    pairs.emplace_back(s, c);
  }
  std::sort(pairs.begin(), pairs.end());
  return JumpCode(n, phase, std::move(pairs));
}

std::vector<Ket> product_code_basis(const JumpCode& high, const JumpCode& low) {
  if (high.phase() != low.phase()) {
    throw std::invalid_argument("product_code_basis: codes must share one phase");
  }
  std::vector<Ket> out;
  for (std::size_t i = 0; i < high.count(); ++i) {
    const Ket a = codeword_ket(high, i);
    for (std::size_t j = 0; j < low.count(); ++j) out.push_back(tensor(a, codeword_ket(low, j)));
  }
  return out;
}

}  // namespace jumpcode
