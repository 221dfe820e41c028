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

#include "jumpcode/serialization.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace jumpcode {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex value must be an [re, im] pair");
  }
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json ket_to_json(const Ket& psi) {
  json out = json::array();
  for (Eigen::Index i = 0; i < psi.dimension(); ++i) out.push_back(complex_to_json(psi[i]));
  return out;
}

Ket ket_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("ket must be a non-empty array");
  }
  const std::size_t dim = j.size();
  if ((dim & (dim - 1)) != 0) {
    throw std::invalid_argument("ket length must be a power of two");
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j.at(i));
  return Ket(std::countr_zero(dim), std::move(v));
}

json matrix_to_json(const DenseOperator& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseOperator matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("matrix must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  DenseOperator m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row.at(static_cast<std::size_t>(k)));
  }
  return m;
}

json density_to_json(const DensityMatrix& rho) {
  return {{"n_qubits", rho.n_qubits()}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityMatrix density_from_json(const json& j) {
  return DensityMatrix(j.at("n_qubits").get<int>(), matrix_from_json(j.at("matrix")));
}

json code_to_json(const JumpCode& code) {
  json pairs = json::array();
  for (const auto& [s, c] : code.pairs()) {
    pairs.push_back({index_to_label(s, code.n()), index_to_label(c, code.n())});
  }
  return {{"N", code.n()}, {"k", code.k()}, {"phase", code.phase()}, {"pairs", std::move(pairs)}};
}

JumpCode code_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("code description must be a JSON object");
  }
  const int n = j.at("N").get<int>();
  if (n % 2 != 0) {
    throw std::invalid_argument("code description: N must be even");
  }
  if (j.contains("k") && j.at("k").get<int>() != n / 2) {
    throw std::invalid_argument("code description: k must equal N/2");
  }
  const double phase = j.value("phase", 0.0);
  std::vector<JumpCode::Pair> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) {
      throw std::invalid_argument("code description: each pair must hold two labels");
    }
    const auto s = p.at(0).get<std::string>();
    const auto c = p.at(1).get<std::string>();
    if (static_cast<int>(s.size()) != n || static_cast<int>(c.size()) != n) {
      throw std::invalid_argument("code description: labels must have N characters");
    }
    pairs.emplace_back(label_to_index(s), label_to_index(c));
  }
  return JumpCode(n, phase, std::move(pairs));
}

json kl_report_to_json(const KLReport& report) {
  return {{"lambda", matrix_to_json(report.lambda)},
          {"residual", report.residual},
          {"worst_pair", {report.worst_l, report.worst_lp}},
          {"min_eigenvalue", report.min_eigenvalue},
          {"psd_ok", report.psd_ok},
          {"verdict", report.verdict()}};
}

json program_to_json(const HamiltonianProgram& program) {
  json stages = json::array();
  for (const auto& stage : program.stages()) {
    json segments = json::array();
    for (const auto& seg : stage.body) {
      json terms = json::array();
      for (const auto& t : seg.hamiltonian.terms()) {
        terms.push_back({std::string(1, coupling_symbol(t.kind)), t.first, t.second, t.coefficient});
      }
      segments.push_back({{"terms", std::move(terms)}, {"duration", seg.duration}});
    }
    stages.push_back(
        {{"formula", stage.formula}, {"repetitions", stage.repetitions}, {"segments", std::move(segments)}});
  }
  return {{"stages", std::move(stages)},
          {"segment_count", program.segment_count()},
          {"target_error", program.target_error},
          {"achieved_error", program.achieved_error}};
}

HamiltonianProgram program_from_json(const json& j) {
  HamiltonianProgram program;
  for (const auto& s : j.at("stages")) {
    ProgramStage stage;
    stage.formula = s.value("formula", std::string{});
    stage.repetitions = s.value("repetitions", std::uint64_t{1});
    for (const auto& seg : s.at("segments")) {
      std::vector<CouplingTerm> terms;
      for (const auto& t : seg.at("terms")) {
        const auto kind = t.at(0).get<std::string>();
        if (kind.size() != 1) {
          throw std::invalid_argument("program: coupling kind must be 'E' or 'F'");
        }
        terms.push_back({coupling_from_symbol(kind[0]), t.at(1).get<int>(), t.at(2).get<int>(),
                         t.at(3).get<double>()});
      }
      stage.body.push_back({GateHamiltonian(terms), seg.at("duration").get<double>()});
    }
    program.append(std::move(stage));
  }
  program.target_error = j.value("target_error", 0.0);
  program.achieved_error = j.value("achieved_error", 0.0);
  return program;
}

json theta_to_json(const ThetaMatrix& theta) {
  json rows = json::array();
  for (Eigen::Index j = 0; j < theta.size(); ++j) {
    json row = json::array();
    for (Eigen::Index k = 0; k < theta.size(); ++k) row.push_back(theta(j, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_jump_csv_header(std::ostream& out) { out << "trajectory_id,t,alpha\n"; }

void write_jump_csv_rows(std::ostream& out, std::uint64_t trajectory_id, const std::vector<Jump>& jumps) {
  for (const auto& j : jumps) {
    out << trajectory_id << ',' << format_double(j.time) << ',' << j.qubit << '\n';
  }
}

}  // namespace jumpcode
