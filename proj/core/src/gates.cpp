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

#include "jumpcode/gates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace jumpcode {

namespace {

void check_pair(int a, int b) {
  if (a == b) {
    throw std::invalid_argument("coupling requires two distinct qubits");
  }
  if (a < 1 || b < 1) {
    throw std::invalid_argument("qubit indices start at 1");
  }
}

DenseOperator frame_of(const std::vector<Ket>& basis) {
  const Eigen::Index dim = basis.front().dimension();
  DenseOperator frame(dim, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) frame.col(static_cast<Eigen::Index>(i)) = basis[i].amplitudes();
  return frame;
}

}  // namespace

LocalOperator e_op(int a, int b) {
  check_pair(a, b);
  const DenseOperator block =
      0.5 * (DenseOperator::Identity(4, 4) + kron(pauli::x(), pauli::x()) +
             kron(pauli::y(), pauli::y()) + kron(pauli::z(), pauli::z()));
  return LocalOperator({a, b}, block);
}

LocalOperator f_op(int a, int b) {
  check_pair(a, b);
  const DenseOperator block = 0.5 * (DenseOperator::Identity(4, 4) + kron(pauli::z(), pauli::z()));
  return LocalOperator({a, b}, block);
}

char coupling_symbol(Coupling kind) { return kind == Coupling::E ? 'E' : 'F'; }

Coupling coupling_from_symbol(char symbol) {
  switch (symbol) {
    case 'E':
      return Coupling::E;
    case 'F':
      return Coupling::F;
    default:
      throw std::invalid_argument(std::string("unknown coupling kind '") + symbol + "'");
  }
}

GateHamiltonian::GateHamiltonian(const std::vector<CouplingTerm>& terms) {
  std::map<std::tuple<int, int, int>, double> merged;
  for (const auto& t : terms) {
    check_pair(t.first, t.second);
    if (!std::isfinite(t.coefficient)) {
      throw std::invalid_argument("coupling coefficients must be finite");
    }
    const int lo = std::min(t.first, t.second);
    const int hi = std::max(t.first, t.second);
    merged[{static_cast<int>(t.kind), lo, hi}] += t.coefficient;
  }
  for (const auto& [key, c] : merged) {
    if (c == 0.0) continue;
    terms_.push_back({static_cast<Coupling>(std::get<0>(key)), std::get<1>(key), std::get<2>(key), c});
  }
}

GateHamiltonian GateHamiltonian::term(Coupling kind, int a, int b, double coefficient) {
  return GateHamiltonian({{kind, a, b, coefficient}});
}

int GateHamiltonian::max_qubit() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max({m, t.first, t.second});
  return m;
}

GateHamiltonian GateHamiltonian::scaled(double factor) const {
  std::vector<CouplingTerm> out = terms_;
  for (auto& t : out) t.coefficient *= factor;
  return GateHamiltonian(out);
}

GateHamiltonian GateHamiltonian::operator+(const GateHamiltonian& other) const {
  std::vector<CouplingTerm> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return GateHamiltonian(out);
}

GateHamiltonian GateHamiltonian::operator-(const GateHamiltonian& other) const {
  return *this + other.scaled(-1.0);
}

bool GateHamiltonian::operator==(const GateHamiltonian& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& a = terms_[i];
    const auto& b = other.terms_[i];
    if (a.kind != b.kind || a.first != b.first || a.second != b.second || a.coefficient != b.coefficient) {
      return false;
    }
  }
  return true;
}

LocalSum GateHamiltonian::to_operator(int n_qubits) const {
  if (max_qubit() > n_qubits) {
    throw std::out_of_range("GateHamiltonian: coupling outside the register");
  }
  LocalSum out(n_qubits);
  for (const auto& t : terms_) {
    const LocalOperator base = t.kind == Coupling::E ? e_op(t.first, t.second) : f_op(t.first, t.second);
    out.add(base.scaled(t.coefficient));
  }
  return out;
}

double leakage(const LocalSum& h, const std::vector<Ket>& basis) {
  if (basis.empty()) {
    throw std::invalid_argument("leakage: empty basis");
  }
  const DenseOperator frame = frame_of(basis);
  DenseOperator image(frame.rows(), frame.cols());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    image.col(static_cast<Eigen::Index>(j)) = apply(h, basis[j]).amplitudes();
  }
  const DenseOperator outside = image - frame * (frame.adjoint() * image);
  return operator_norm(outside);
}

DenseOperator logical_matrix(const LocalSum& h, const std::vector<Ket>& basis, double tol) {
  if (basis.empty()) {
    throw std::invalid_argument("logical_matrix: empty basis");
  }
  const DenseOperator frame = frame_of(basis);
  DenseOperator image(frame.rows(), frame.cols());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    image.col(static_cast<Eigen::Index>(j)) = apply(h, basis[j]).amplitudes();
  }
  DenseOperator m = frame.adjoint() * image;
  const double leak = operator_norm(image - frame * m);
  if (leak > tol) {
    throw LeakageError("logical_matrix: Hamiltonian leaks out of the subspace", leak);
  }
  return m;
}

std::vector<NamedHamiltonian> qutrit_couplings() {
  return {
      {"E12", GateHamiltonian::term(Coupling::E, 1, 2)}, {"E23", GateHamiltonian::term(Coupling::E, 2, 3)},
      {"E13", GateHamiltonian::term(Coupling::E, 1, 3)}, {"F12", GateHamiltonian::term(Coupling::F, 1, 2)},
      {"F13", GateHamiltonian::term(Coupling::F, 1, 3)}, {"F23", GateHamiltonian::term(Coupling::F, 2, 3)},
  };
}

std::vector<LogicalGenerator> su3_generators(const JumpCode& code) {
  if (code.n() != 4) {
    throw std::invalid_argument("su3_generators: expects the four-qubit jump code");
  }
  const auto basis = codeword_kets(code);
  auto logical = [&](const GateHamiltonian& h) { return logical_matrix(h.to_operator(4), basis); };
  auto e = [](int a, int b) { return GateHamiltonian::term(Coupling::E, a, b); };
  auto f = [](int a, int b) { return GateHamiltonian::term(Coupling::F, a, b); };

  const GateHamiltonian c12p = e(2, 3) - f(2, 3);
  const GateHamiltonian c13p = e(1, 3) - f(1, 3);
  const GateHamiltonian c23p = e(1, 2) - f(1, 2);

  std::vector<LogicalGenerator> out;
  auto add_direct = [&](std::string name, const GateHamiltonian& h) {
    LogicalGenerator g;
    g.name = std::move(name);
    g.logical = logical(h);
    g.direct = h;
    out.push_back(std::move(g));
  };
  auto add_commutator = [&](std::string name, const GateHamiltonian& l, const GateHamiltonian& r) {
    LogicalGenerator g;
    g.name = std::move(name);
    const DenseOperator a = logical(l);
    const DenseOperator b = logical(r);
    g.logical = cplx(0.0, 1.0) * (a * b - b * a);
    g.is_commutator = true;
    g.left = l;
    g.right = r;
    out.push_back(std::move(g));
  };
  add_direct("C12+", c12p);
  add_direct("C13+", c13p);
  add_direct("C23+", c23p);
  add_commutator("C12-", c13p, c23p);
  add_commutator("C13-", c12p, c23p);
  add_commutator("C23-", c12p, c13p);
  add_direct("F12", f(1, 2));
  add_direct("F13", f(1, 3));
  return out;
}

}  // namespace jumpcode
