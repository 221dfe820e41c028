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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jumpcode/checks.hpp"
#include "jumpcode/codes.hpp"
#include "jumpcode/experiment.hpp"
#include "jumpcode/expm.hpp"
#include "jumpcode/gates.hpp"
#include "jumpcode/serialization.hpp"
#include "jumpcode/synthesis.hpp"

namespace fs = std::filesystem;
using namespace jumpcode;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr double kLeakageLimit = 1e-12;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void emit(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << '\n';
}

fs::path default_output_dir() {
  const char* env = std::getenv("JUMPCODE_OUTPUT_DIR");
  return env != nullptr && *env != '\0' ? fs::path(env) : fs::current_path();
}

JumpCode load_or_build(const std::string& in, int n, double phase) {
  return in.empty() ? jump_code(n, phase) : code_from_json(read_json(in));
}

json report(const CheckResult& r) { return {{"check", r.name}, {"passed", r.passed}, {"details", r.details}}; }

int emit_check(const CheckResult& r, const std::string& out) {
  emit(report(r), out);
  return r.passed ? 0 : kExitFail;
}

struct CodeArgs {
  int n = 4;
  double phase = 0.0;
  std::string in;
  std::string out;
};

struct VerifyArgs {
  int n = 4;
  int k = 2;
  double phase = 0.0;
  double kappa = 1.0;
  double t = 1.0;
  double tol = 1e-9;
  bool known = false;
  bool unknown = false;
  std::vector<int> qubits;
  std::string in;
  std::string out;
};

struct SimArgs {
  ExperimentConfig config;
  std::string out;
};

struct GatesArgs {
  std::string target;
  std::string builtin;
  std::uint64_t seed = 0;
  double eps = 1e-2;
  std::uint64_t max_repetitions = std::uint64_t{1} << 16;
  int grid = 4;
  std::string out;
};

int cmd_code_generate(const CodeArgs& a) {
  emit(code_to_json(jump_code(a.n, a.phase)), a.out);
  return 0;
}

int cmd_code_inspect(const CodeArgs& a) {
  const JumpCode code = load_or_build(a.in, a.n, a.phase);
  emit({{"code", code_to_json(code)},
        {"dimension", code.count()},
        {"dfs_dimension", binomial(code.n(), code.k())},
        {"logical_qubits", logical_qubits(code.n())},
        {"redundancy", code.redundancy()},
        {"complete", code.is_complete()}},
       a.out);
  return 0;
}

int cmd_verify_kl(const VerifyArgs& a) {
  if (a.known && a.unknown) throw std::invalid_argument("choose one of --known-position, --unknown-position");
  std::vector<int> qubits = a.qubits;
  if (qubits.empty()) qubits = a.unknown ? std::vector<int>{1, 2} : std::vector<int>{1};
  if (!a.unknown && qubits.size() != 1) {
    throw std::invalid_argument("--known-position takes exactly one qubit");
  }
  const JumpCode code = load_or_build(a.in, a.n, a.phase);
  for (int q : qubits) {
    if (q < 1 || q > code.n()) throw std::invalid_argument("qubit " + std::to_string(q) + " outside the register");
  }
  CheckResult r = check_kl(code, qubits, a.kappa, a.tol);
  r.details["mode"] = a.unknown ? "unknown-position" : "known-position";
  return emit_check(r, a.out);
}

int cmd_sim_run(SimArgs& a) {
  const ExperimentResult result = run_experiment(a.config);
  const fs::path dir = a.out.empty() ? default_output_dir() : fs::path(a.out);
  fs::create_directories(dir);
  {
    std::ofstream csv(dir / "jumps.csv", std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + (dir / "jumps.csv").string());
    write_experiment_csv(csv, result);
  }
  const json summary = experiment_summary(a.config, result);
  emit(summary, (dir / "summary.json").string());
  std::cout << summary.dump(2) << '\n';
  return 0;
}

DenseOperator builtin_target(const GatesArgs& a, const JumpCode& code) {
  if (a.builtin == "identity") return DenseOperator::Identity(3, 3);
  if (a.builtin == "e12") {
    const DenseOperator e12 = logical_matrix(GateHamiltonian::term(Coupling::E, 1, 2).to_operator(4), codeword_kets(code));
    return expm_dense(e12, std::numbers::pi / 2.0);
  }
  if (a.builtin == "random") return random_su3(a.seed, 0);
  throw std::invalid_argument("unknown builtin target '" + a.builtin + "'");
}

int cmd_gates_synthesize(const GatesArgs& a) {
  if (a.target.empty() == a.builtin.empty()) throw std::invalid_argument("give exactly one of --target, --builtin");
  const JumpCode code = jump_code(4);
  const DenseOperator target = a.target.empty() ? builtin_target(a, code) : matrix_from_json(read_json(a.target));
  if (target.rows() != 3 || target.cols() != 3) throw std::invalid_argument("target must be 3x3");
  if (unitarity_residual(target) > 1e-9) throw std::invalid_argument("target is not unitary");

  SynthesisOptions options;
  options.epsilon = a.eps;
  options.max_repetitions = a.max_repetitions;
  options.leakage_grid_points = a.grid;
  const SynthesisResult r = synthesize_qutrit(target, code, options);

  json coefficients = json::object();
  for (const auto& [name, value] : r.coefficients) coefficients[name] = value;
  const bool leak_ok = r.leakage.boundary_leakage <= kLeakageLimit && r.leakage.segment_leakage <= kLeakageLimit;
  emit({{"target", matrix_to_json(target)},
        {"epsilon", a.eps},
        {"error", r.error},
        {"reached", r.reached},
        {"repetitions", r.repetitions},
        {"coefficients", std::move(coefficients)},
        {"achieved", matrix_to_json(r.achieved)},
        {"leakage",
         {{"boundary_leakage", r.leakage.boundary_leakage},
          {"segment_leakage", r.leakage.segment_leakage},
          {"boundaries_checked", r.leakage.boundaries_checked},
          {"grid_points", a.grid},
          {"limit", kLeakageLimit},
          {"certified", leak_ok}}},
        {"program", program_to_json(r.program)}},
       a.out);
  return r.reached && leak_ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jumpcode: jump codes, decay trajectories and coupling-gate synthesis"};
  app.require_subcommand(1);
  int exit_code = 0;
  std::function<int()> action;

  // code
  CodeArgs code_args;
  auto* code = app.add_subcommand("code", "Build or inspect jump codes");
  code->require_subcommand(1);
  auto* generate = code->add_subcommand("generate", "Emit the jump code JSON");
  generate->add_option("--n", code_args.n, "Number of qubits (even)")->required();
  generate->add_option("--phase", code_args.phase, "Relative codeword phase");
  generate->add_option("--out", code_args.out, "Output file (default stdout)");
  generate->callback([&] { action = [&] { return cmd_code_generate(code_args); }; });
  auto* inspect = code->add_subcommand("inspect", "Report dimension, logical qubits and redundancy");
  auto* in_opt = inspect->add_option("--in", code_args.in, "Code JSON file")->check(CLI::ExistingFile);
  inspect->add_option("--n", code_args.n, "Number of qubits when no file is given")->excludes(in_opt);
  inspect->add_option("--phase", code_args.phase, "Relative codeword phase")->excludes(in_opt);
  inspect->add_option("--out", code_args.out, "Output file (default stdout)");
  inspect->callback([&] { action = [&] { return cmd_code_inspect(code_args); }; });

  // verify
  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 0 only on pass");
  verify->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", v.tol, "Residual tolerance");
    sub->add_option("--out", v.out, "Output file (default stdout)");
  };
  auto* kl = verify->add_subcommand("kl", "Knill-Laflamme test for decay operators");
  kl->add_option("--n", v.n, "Number of qubits");
  kl->add_option("--phase", v.phase, "Relative codeword phase");
  kl->add_option("--in", v.in, "Code JSON file")->check(CLI::ExistingFile);
  kl->add_option("--kappa", v.kappa, "Decay rate")->check(CLI::NonNegativeNumber);
  kl->add_flag("--known-position", v.known, "Error set {L_q} for one qubit (default)");
  kl->add_flag("--unknown-position", v.unknown, "Error set {L_q} over several qubits");
  kl->add_option("--qubits", v.qubits, "Qubits (1-based); default 1, or 1 2 for --unknown-position");
  add_common(kl);
  kl->callback([&] { action = [&] { return cmd_verify_kl(v); }; });
  auto* dfs = verify->add_subcommand("dfs", "No-jump evolution acts as a scalar on DFS-(N,k)");
  dfs->add_option("--n", v.n, "Number of qubits");
  dfs->add_option("--k", v.k, "Excitation number");
  dfs->add_option("--kappa", v.kappa, "Decay rate")->check(CLI::NonNegativeNumber);
  dfs->add_option("--t", v.t, "Evolution time")->check(CLI::NonNegativeNumber);
  add_common(dfs);
  dfs->callback([&] { action = [&] { return emit_check(check_dfs(v.n, v.k, v.kappa, v.t, v.tol), v.out); }; });
  auto* table1 = verify->add_subcommand("table1", "Logical matrices of the six couplings");
  table1->add_option("--phase", v.phase, "Relative codeword phase");
  add_common(table1);
  table1->callback([&] { action = [&] { return emit_check(check_table1(v.phase, std::min(v.tol, 1e-12)), v.out); }; });
  auto* closure = verify->add_subcommand("closure", "Lie closure of the eight qutrit generators");
  add_common(closure);
  closure->callback([&] { action = [&] { return emit_check(check_closure(std::min(v.tol, 1e-10)), v.out); }; });
  auto* entangle = verify->add_subcommand("entangle", "Entangling gate on the eight-qubit register");
  add_common(entangle);
  entangle->callback([&] { action = [&] { return emit_check(check_entangle(std::min(v.tol, 1e-10)), v.out); }; });

  // sim
  SimArgs s;
  auto* sim = app.add_subcommand("sim", "Closed-loop decay simulation");
  sim->require_subcommand(1);
  auto* run = sim->add_subcommand("run", "Simulate trajectories with recovery; writes jumps.csv and summary.json");
  run->add_option("--n", s.config.n, "Number of qubits");
  run->add_option("--phase", s.config.phase, "Relative codeword phase");
  run->add_option("--kappa", s.config.kappa, "Decay rate, one value or one per qubit");
  run->add_option("--mismatch", s.config.mismatch, "Per-qubit factors applied to the physical rates");
  run->add_option("--t-final", s.config.t_final, "Horizon T")->check(CLI::NonNegativeNumber);
  run->add_option("--trajectories", s.config.trajectories, "Trajectory count")->check(CLI::PositiveNumber);
  run->add_option("--seed", s.config.seed, "Master seed")->required();
  run->add_option("--delay", s.config.delay, "Recovery delay")->check(CLI::NonNegativeNumber);
  run->add_option("--p-miss", s.config.p_miss, "Probability of an undetected jump")->check(CLI::Range(0.0, 1.0));
  run->add_option("--threads", s.config.threads, "Worker threads (0 = hardware)");
  run->add_option("--out", s.out, "Output directory (default $JUMPCODE_OUTPUT_DIR or cwd)");
  run->callback([&] { action = [&] { return cmd_sim_run(s); }; });

  // gates
  GatesArgs g;
  auto* gates = app.add_subcommand("gates", "Coupling-gate programs on the four-qubit code");
  gates->require_subcommand(1);
  auto* synth = gates->add_subcommand("synthesize", "Emit a program approximating a 3x3 logical unitary");
  synth->add_option("--target", g.target, "JSON 3x3 matrix file")->check(CLI::ExistingFile);
  synth->add_option("--builtin", g.builtin, "Builtin target: identity, e12, random");
  synth->add_option("--seed", g.seed, "Seed for --builtin random");
  synth->add_option("--eps", g.eps, "Target phase-aligned error")->check(CLI::PositiveNumber);
  synth->add_option("--max-repetitions", g.max_repetitions, "Cap on product-formula repetitions");
  synth->add_option("--grid", g.grid, "Leakage grid points per segment")->check(CLI::PositiveNumber);
  synth->add_option("--out", g.out, "Output file (default stdout)");
  synth->callback([&] { action = [&] { return cmd_gates_synthesize(g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    exit_code = action ? action() : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return exit_code;
}
