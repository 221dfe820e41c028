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

#include "jumpcode/checks.hpp"

#include <cmath>
#include <numbers>

#include "jumpcode/dynamics.hpp"
#include "jumpcode/entangle.hpp"
#include "jumpcode/gates.hpp"
#include "jumpcode/lie.hpp"

namespace jumpcode {

namespace {

DenseOperator from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  DenseOperator m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index k = 0;
    for (double v : r) m(i, k++) = v;
    ++i;
  }
  return m;
}

}  // namespace

std::vector<DenseOperator> table1_reference() {
  return {
      from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}),  // E12
      from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),  // E23
      from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}),  // E13
      from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),  // F12
      from_rows({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}),  // F13
      from_rows({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}),  // F23
  };
}

CheckResult check_table1(double phase, double tol) {
  CheckResult result{"table1", true, json::object()};
  const auto basis = codeword_kets(jump_code(4, phase));
  const auto couplings = qutrit_couplings();
  const auto reference = table1_reference();
  json matrices = json::object();
  for (std::size_t i = 0; i < couplings.size(); ++i) {
    const DenseOperator m = logical_matrix(couplings[i].hamiltonian.to_operator(4), basis, tol);
    const double residual = (m - reference[i]).cwiseAbs().maxCoeff();
    const bool ok = residual <= tol;
    result.passed = result.passed && ok;
    matrices[couplings[i].name] = {{"matrix", matrix_to_json(m)}, {"residual", residual}, {"exact", ok}};
  }
  result.details = {{"phase", phase}, {"tolerance", tol}, {"matrices", std::move(matrices)}};
  return result;
}

CheckResult check_kl(const JumpCode& code, const std::vector<int>& qubits, double kappa, double tol) {
  std::vector<DenseOperator> ops;
  for (int q : qubits) {
    ops.push_back(to_dense(LocalOperator({q}, pauli::lowering() * std::sqrt(kappa)), code.n()));
  }
  const KLReport report = kl_check(KrausSet(std::move(ops)), projector(code), tol);
  json details = kl_report_to_json(report);
  details["qubits"] = qubits;
  details["kappa"] = kappa;
  details["tolerance"] = tol;
  details["code"] = code_to_json(code);
  return {"kl", report.reversible, std::move(details)};
}

CheckResult check_dfs(int n, int k, double kappa, double t, double tol) {
  const auto model = LindbladModel::spontaneous_decay(n, kappa);
  const KrausSet kraus({no_jump_kraus(model, t)});
  const DfsReport report = dfs_check(kraus, dfs_projector(dfs_basis(n, k)), tol);
  const double expected = std::exp(-0.5 * k * kappa * t);
  const double lambda_error = std::abs(report.lambdas.front() - cplx(expected));
  json details = {{"n", n},
                  {"k", k},
                  {"kappa", kappa},
                  {"t", t},
                  {"lambda", complex_to_json(report.lambdas.front())},
                  {"expected_lambda", expected},
                  {"lambda_error", lambda_error},
                  {"residual", report.residuals.front()},
                  {"factorization_residual", report.factorization_residual},
                  {"tolerance", tol}};
  return {"dfs", report.passes && lambda_error <= tol, std::move(details)};
}

CheckResult check_closure(double tol) {
  std::vector<DenseOperator> gens;
  json names = json::array();
  for (const auto& g : su3_generators(jump_code(4))) {
    gens.push_back(g.logical);
    names.push_back(g.name);
  }
  const ClosureReport closure = lie_closure(gens, tol);
  const double inclusion = span_inclusion_residual(closure.traceless_basis, gell_mann());
  const int literal_span = static_cast<int>(real_orthonormal_basis(gens, tol).size());
  const bool ok = closure.dimension == 9 && closure.traceless_dimension == 8 && inclusion < tol;
  return {"closure",
          ok,
          {{"generators", std::move(names)},
           {"span_dimension", literal_span},
           {"closure_dimension", closure.dimension},
           {"traceless_dimension", closure.traceless_dimension},
           {"gell_mann_inclusion_residual", inclusion},
           {"tolerance", tol}}};
}

CheckResult check_entangle(double tol) {
  const JumpCode code4 = jump_code(4);
  const auto basis = product_code_basis(code4, code4);
  const auto code8 = codeword_kets(jump_code(8));

  // -U(pi) on the nine product states.
  const DenseOperator v = v_gate();
  DenseOperator frame(256, 9);
  for (Eigen::Index i = 0; i < 9; ++i) frame.col(i) = basis[static_cast<std::size_t>(i)].amplitudes();
  DenseOperator expected = DenseOperator::Identity(9, 9);
  expected(8, 8) = -1.0;
  const double diag_residual = operator_norm(v * frame - frame * expected);

  // Leakage out of the 35-dimensional code space.
  DenseOperator code_frame(256, static_cast<Eigen::Index>(code8.size()));
  for (std::size_t i = 0; i < code8.size(); ++i) code_frame.col(static_cast<Eigen::Index>(i)) = code8[i].amplitudes();
  const double pi = std::numbers::pi;
  json grid = json::array();
  double worst_leak = 0.0;
  for (double tau : {0.0, pi / 7.0, pi / 2.0, pi, 2.0 * pi}) {
    const DenseOperator u = ent_unitary(tau) * frame;
    const double leak = operator_norm(u - code_frame * (code_frame.adjoint() * u));
    worst_leak = std::max(worst_leak, leak);
    grid.push_back({{"tau", tau}, {"leakage", leak}});
  }
  const double h_leak = leakage(h_ent().to_operator(8), code8);

  const ThetaMatrix theta = theta_matrix(v, basis, tol);
  const PrimitivityReport prim = is_primitive_diagonal(theta);
  json violations = json::array();
  for (const auto& q : prim.violations) violations.push_back({q[0], q[1], q[2], q[3]});
  const double lhs = theta(1, 2) + theta(2, 1);
  const double rhs = theta(1, 1) + theta(2, 2);

  Eigen::VectorXcd uniform = Eigen::VectorXcd::Zero(256);
  for (const auto& b : basis) uniform += b.amplitudes() / 3.0;
  const Ket out(8, v * uniform);
  const int rank = schmidt_rank(out, 4);

  const bool ok = diag_residual <= tol && worst_leak <= 1e-12 && h_leak <= 1e-12 && !prim.primitive &&
                  circular_distance(rhs - lhs - pi) <= 1e-9 && rank == 2;
  return {"entangle",
          ok,
          {{"v_diagonal_residual", diag_residual},
           {"leakage_grid", std::move(grid)},
           {"max_leakage", worst_leak},
           {"hamiltonian_leakage", h_leak},
           {"theta", theta_to_json(theta)},
           {"primitive", prim.primitive},
           {"witness", violations.empty() ? json() : violations.front()},
           {"violations", std::move(violations)},
           {"theta12_plus_theta21", lhs},
           {"theta11_plus_theta22", rhs},
           {"schmidt_rank", rank},
           {"tolerance", tol}}};
}

}  // namespace jumpcode
