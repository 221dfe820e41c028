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
#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "jumpcode/codes.hpp"
#include "jumpcode/density.hpp"
#include "jumpcode/dynamics.hpp"
#include "jumpcode/entangle.hpp"
#include "jumpcode/ket.hpp"
#include "jumpcode/program.hpp"
#include "jumpcode/qec.hpp"

namespace jumpcode {

using json = nlohmann::json;

/// [re, im]
json complex_to_json(cplx z);
/// Accepts an [re, im] pair or a bare real number.
cplx complex_from_json(const json& j);

/// Kets are arrays of [re, im] pairs in register index order.
json ket_to_json(const Ket& psi);
Ket ket_from_json(const json& j);

/// Row-major nested arrays of [re, im] pairs.
json matrix_to_json(const DenseOperator& m);
DenseOperator matrix_from_json(const json& j);

json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);

/// {"N":4,"k":2,"phase":0.0,"pairs":[["0011","1100"],...]}
json code_to_json(const JumpCode& code);
JumpCode code_from_json(const json& j);

json kl_report_to_json(const KLReport& report);

/// {"stages":[{"formula":..,"repetitions":n,"segments":[{"terms":[["F",2,6,0.5]],"duration":..}]}],
///  "target_error":..,"achieved_error":..}
json program_to_json(const HamiltonianProgram& program);
HamiltonianProgram program_from_json(const json& j);

json theta_to_json(const ThetaMatrix& theta);

/// Appends rows "trajectory_id,t,alpha"; the header is written by
/// `write_jump_csv_header`.
void write_jump_csv_header(std::ostream& out);
void write_jump_csv_rows(std::ostream& out, std::uint64_t trajectory_id, const std::vector<Jump>& jumps);

/// Shortest decimal form that round-trips.
std::string format_double(double value);

}  // namespace jumpcode
