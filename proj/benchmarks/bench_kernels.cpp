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

#include <benchmark/benchmark.h>

#include <random>

#include "jumpcode/codes.hpp"
#include "jumpcode/dynamics.hpp"
#include "jumpcode/expm.hpp"
#include "jumpcode/gates.hpp"
#include "jumpcode/operators.hpp"
#include "jumpcode/qec.hpp"
#include "jumpcode/synthesis.hpp"

using namespace jumpcode;

namespace {

Ket random_ket(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (auto& a : v) a = cplx(g(rng), g(rng));
  return Ket(n, v.normalized());
}

void BM_ApplyLocalTwoQubit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ket psi = random_ket(n, 1);
  const LocalOperator op = e_op(1, n);
  for (auto _ : state) benchmark::DoNotOptimize(apply_local(op, psi));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplyLocalTwoQubit)->DenseRange(4, 16, 4);

void BM_ExpmApplyEffectiveHamiltonian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ket psi = encode(jump_code(n), Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(binomial(n - 1, n / 2 - 1))));
  const LocalSum heff = effective_hamiltonian(LindbladModel::spontaneous_decay(n, 1.0)) +
                        GateHamiltonian::term(Coupling::E, 1, 2).to_operator(n);
  for (auto _ : state) benchmark::DoNotOptimize(expm_apply(heff, 0.5, psi));
}
BENCHMARK(BM_ExpmApplyEffectiveHamiltonian)->DenseRange(4, 12, 4);

void BM_CorrectedTrajectory(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const JumpCode code = jump_code(n);
  const RecoveryTable table(code);
  const auto model = LindbladModel::spontaneous_decay(n, 1.0);
  const Eigen::VectorXcd logical = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(code.count()));
  std::uint64_t id = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_corrected(model, table, logical, 3.0, 9, id++));
}
BENCHMARK(BM_CorrectedTrajectory)->Arg(4)->Arg(6)->Arg(8);

void BM_SynthesizeHaarTarget(benchmark::State& state) {
  SynthesisOptions opts;
  opts.certify = false;
  std::uint64_t id = 0;
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_qutrit(random_su3(2026, id++ % 20), jump_code(4), opts));
}
BENCHMARK(BM_SynthesizeHaarTarget)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
