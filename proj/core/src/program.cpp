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

#include "jumpcode/program.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "jumpcode/expm.hpp"

namespace jumpcode {

HamiltonianProgram::HamiltonianProgram(std::vector<ProgramStage> stages) {
  for (auto& s : stages) append(std::move(s));
}

void HamiltonianProgram::append(ProgramStage stage) {
  for (const auto& seg : stage.body) {
    if (!(seg.duration >= 0.0) || !std::isfinite(seg.duration)) {
      throw std::invalid_argument("HamiltonianProgram: segment durations must be finite and non-negative");
    }
  }
  if (stage.repetitions == 0 || stage.body.empty()) return;
  stages_.push_back(std::move(stage));
}

std::uint64_t HamiltonianProgram::segment_count() const {
  std::uint64_t total = 0;
  for (const auto& s : stages_) total += s.repetitions * s.body.size();
  return total;
}

std::size_t HamiltonianProgram::body_size() const {
  std::size_t total = 0;
  for (const auto& s : stages_) total += s.body.size();
  return total;
}

double HamiltonianProgram::total_time() const {
  double total = 0.0;
  for (const auto& s : stages_) {
    double body = 0.0;
    for (const auto& seg : s.body) body += seg.duration;
    total += body * static_cast<double>(s.repetitions);
  }
  return total;
}

std::vector<FormulaFactor> formula_body(ProductFormula formula, double t1, double t2, std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("formula_body: n must be at least one");
  }
  if (formula == ProductFormula::Sum) {
    const auto steps = static_cast<double>(n);
    return {{0, t1 / steps}, {1, t2 / steps}};
  }
  const double root = std::sqrt(static_cast<double>(n));
  return {{0, t1 / root}, {1, t2 / root}, {0, -t1 / root}, {1, -t2 / root}};
}

DenseOperator formula_target(ProductFormula formula, const DenseOperator& h1, const DenseOperator& h2,
                             double t1, double t2) {
  const cplx i(0.0, 1.0);
  if (formula == ProductFormula::Sum) {
    return matrix_exp(i * (t1 * h1 + t2 * h2));
  }
  const DenseOperator a = t1 * h1;
  const DenseOperator b = t2 * h2;
  return matrix_exp(i * (i * (a * b - b * a)));
}

DenseOperator formula_product(ProductFormula formula, const DenseOperator& h1, const DenseOperator& h2,
                              double t1, double t2, std::uint64_t n) {
  const cplx i(0.0, 1.0);
  const DenseOperator* hs[] = {&h1, &h2};
  DenseOperator body = DenseOperator::Identity(h1.rows(), h1.cols());
  for (const auto& f : formula_body(formula, t1, t2, n)) {
    body = body * matrix_exp(i * f.time * *hs[f.generator]);
  }
  return matrix_power(body, n);
}

Segment factor_segment(const GateHamiltonian& h, double time) {
  // exp(i t H) = exp(-i |t| (-sign(t) H))
  if (time >= 0.0) return {h.scaled(-1.0), time};
  return {h, -time};
}

namespace {

HamiltonianProgram formula_program(ProductFormula formula, const std::string& name, const GateHamiltonian& h1,
                                   const GateHamiltonian& h2, double t1, double t2, std::uint64_t n) {
  const GateHamiltonian* hs[] = {&h1, &h2};
  const auto factors = formula_body(formula, t1, t2, n);
  ProgramStage stage{name, n, {}};
  // The rightmost factor acts first.
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    stage.body.push_back(factor_segment(*hs[it->generator], it->time));
  }
  return HamiltonianProgram({stage});
}

DenseOperator frame_of(const std::vector<Ket>& basis) {
  if (basis.empty()) {
    throw std::invalid_argument("program: empty code basis");
  }
  DenseOperator frame(basis.front().dimension(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) frame.col(static_cast<Eigen::Index>(i)) = basis[i].amplitudes();
  return frame;
}

template <typename SegmentUnitary>
DenseOperator evaluate(const HamiltonianProgram& program, Eigen::Index dim, SegmentUnitary&& unitary) {
  DenseOperator total = DenseOperator::Identity(dim, dim);
  for (const auto& stage : program.stages()) {
    DenseOperator body = DenseOperator::Identity(dim, dim);
    for (const auto& seg : stage.body) body = unitary(seg) * body;
    total = matrix_power(body, stage.repetitions) * total;
  }
  return total;
}

}  // namespace

HamiltonianProgram trotter_sum(const GateHamiltonian& h1, const GateHamiltonian& h2, double t1, double t2,
                               std::uint64_t n) {
  return formula_program(ProductFormula::Sum, "sum", h1, h2, t1, t2, n);
}

HamiltonianProgram trotter_commutator(const GateHamiltonian& h1, const GateHamiltonian& h2, double t1,
                                      double t2, std::uint64_t n) {
  return formula_program(ProductFormula::Commutator, "commutator", h1, h2, t1, t2, n);
}

DenseOperator matrix_power(const DenseOperator& m, std::uint64_t exponent) {
  DenseOperator result = DenseOperator::Identity(m.rows(), m.cols());
  DenseOperator base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

DenseOperator program_logical_unitary(const HamiltonianProgram& program, const std::vector<Ket>& basis) {
  if (basis.empty()) {
    throw std::invalid_argument("program_logical_unitary: empty basis");
  }
  const int n = basis.front().n_qubits();
  return evaluate(program, static_cast<Eigen::Index>(basis.size()), [&](const Segment& seg) {
    return expm_dense(logical_matrix(seg.hamiltonian.to_operator(n), basis), seg.duration);
  });
}

DenseOperator program_unitary(const HamiltonianProgram& program, int n_qubits) {
  return evaluate(program, Eigen::Index{1} << n_qubits, [&](const Segment& seg) {
    return expm_dense(to_dense(seg.hamiltonian.to_operator(n_qubits)), seg.duration);
  });
}

LeakageCertificate certify_leakage(const HamiltonianProgram& program, const std::vector<Ket>& basis,
                                   int grid_points) {
  if (grid_points < 1) {
    throw std::invalid_argument("certify_leakage: need at least one grid point");
  }
  // Propagation runs in extended precision so that rounding accumulated over
  // long programs stays below the certified level.
  using LdComplex = std::complex<long double>;
  using LdMatrix = Eigen::Matrix<LdComplex, Eigen::Dynamic, Eigen::Dynamic>;
  const LdMatrix frame = frame_of(basis).cast<LdComplex>();
  const int n = basis.front().n_qubits();
  // Frobenius norm bounds the spectral norm from above.
  auto outside = [&](const LdMatrix& x) {
    return static_cast<double>((x - frame * (frame.adjoint() * x)).norm());
  };
  auto evolve = [](const LdMatrix& h, double tau) -> LdMatrix {
    return (LdComplex(0.0L, -static_cast<long double>(tau)) * h).exp();
  };

  LeakageCertificate cert;
  std::vector<std::vector<LdMatrix>> unitaries;
  for (const auto& stage : program.stages()) {
    auto& us = unitaries.emplace_back();
    for (const auto& seg : stage.body) {
      const LdMatrix h = to_dense(seg.hamiltonian.to_operator(n)).cast<LdComplex>();
      for (int k = 1; k <= grid_points; ++k) {
        const double tau = seg.duration * k / grid_points;
        cert.segment_leakage = std::max(cert.segment_leakage, outside(evolve(h, tau) * frame));
      }
      us.push_back(evolve(h, seg.duration));
    }
  }

  LdMatrix x = frame;
  LdMatrix next(x.rows(), x.cols());
  for (std::size_t s = 0; s < program.stages().size(); ++s) {
    const auto& stage = program.stages()[s];
    for (std::uint64_t r = 0; r < stage.repetitions; ++r) {
      for (const auto& u : unitaries[s]) {
        next.noalias() = u * x;
        x.swap(next);
        cert.boundary_leakage = std::max(cert.boundary_leakage, outside(x));
        ++cert.boundaries_checked;
      }
    }
  }
  return cert;
}

}  // namespace jumpcode
