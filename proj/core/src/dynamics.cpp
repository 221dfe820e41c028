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

#include "jumpcode/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "jumpcode/expm.hpp"
#include "jumpcode/parallel.hpp"

namespace jumpcode {

namespace {

constexpr std::size_t kBlockSize = 64;
constexpr Eigen::Index kDenseTrajectoryLimit = 256;

}  // namespace

LindbladModel::LindbladModel(int n_qubits, LocalSum hamiltonian, std::vector<DecayChannel> channels)
    : n_qubits_(n_qubits), hamiltonian_(std::move(hamiltonian)), channels_(std::move(channels)) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("LindbladModel: qubit count out of range");
  }
  if (hamiltonian_.n_qubits() != n_qubits && hamiltonian_.n_qubits() != 0) {
    throw std::invalid_argument("LindbladModel: Hamiltonian acts on a different register");
  }
  if (hamiltonian_.empty()) hamiltonian_ = LocalSum(n_qubits);
  for (std::size_t i = 0; i < channels_.size(); ++i) {
    const auto& c = channels_[i];
    if (c.qubit < 1 || c.qubit > n_qubits) {
      throw std::invalid_argument("LindbladModel: channel qubit out of range");
    }
    if (!(c.rate >= 0.0) || !std::isfinite(c.rate)) {
      throw std::invalid_argument("LindbladModel: decay rates must be finite and non-negative");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (channels_[j].qubit == c.qubit) {
        throw std::invalid_argument("LindbladModel: duplicate channel qubit");
      }
    }
  }
}

LindbladModel LindbladModel::spontaneous_decay(int n_qubits, double rate) {
  return spontaneous_decay(std::vector<double>(static_cast<std::size_t>(n_qubits), rate));
}

LindbladModel LindbladModel::spontaneous_decay(const std::vector<double>& rates) {
  std::vector<DecayChannel> channels;
  for (std::size_t a = 0; a < rates.size(); ++a) {
    channels.push_back({static_cast<int>(a) + 1, rates[a]});
  }
  const int n = static_cast<int>(rates.size());
  return LindbladModel(n, LocalSum(n), std::move(channels));
}

LocalOperator LindbladModel::jump_operator(const DecayChannel& channel) const {
  return LocalOperator({channel.qubit}, pauli::lowering() * std::sqrt(channel.rate));
}

LocalSum effective_hamiltonian(const LindbladModel& model) {
  LocalSum heff = model.hamiltonian();
  for (const auto& c : model.channels()) {
    if (c.rate == 0.0) continue;
    heff.add(LocalOperator({c.qubit}, pauli::number() * cplx(0.0, -0.5 * c.rate)));
  }
  return heff;
}

DenseOperator no_jump_kraus(const LindbladModel& model, double t) {
  if (model.has_hamiltonian()) {
    throw std::logic_error("no_jump_kraus: only defined for the memory model (H = 0)");
  }
  if (t < 0.0) {
    throw std::invalid_argument("no_jump_kraus: negative time");
  }
  const Eigen::Index dim = Eigen::Index{1} << model.n_qubits();
  Eigen::VectorXd rate_sum = Eigen::VectorXd::Zero(dim);
  for (const auto& c : model.channels()) {
    const std::uint64_t bit = std::uint64_t{1} << (c.qubit - 1);
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (static_cast<std::uint64_t>(i) & bit) rate_sum[i] += c.rate;
    }
  }
  return (-0.5 * t * rate_sum).array().exp().matrix().cast<cplx>().asDiagonal();
}

KrausSet decay_kraus(const LindbladModel& model, double t) {
  if (model.has_hamiltonian()) {
    throw std::logic_error("decay_kraus: only defined for the memory model (H = 0)");
  }
  const auto& channels = model.channels();
  if (channels.size() > 12) {
    throw std::invalid_argument("decay_kraus: too many channels");
  }
  const int n = model.n_qubits();
  std::vector<DenseOperator> ops;
  for (std::uint64_t fired = 0; fired < (std::uint64_t{1} << channels.size()); ++fired) {
    DenseOperator k = DenseOperator::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (std::size_t c = 0; c < channels.size(); ++c) {
      const double rate = channels[c].rate;
      DenseOperator block = DenseOperator::Zero(2, 2);
      if ((fired >> c) & 1U) {
        block(0, 1) = std::sqrt(1.0 - std::exp(-rate * t));
      } else {
        block(0, 0) = 1.0;
        block(1, 1) = std::exp(-0.5 * rate * t);
      }
      k = to_dense(LocalOperator({channels[c].qubit}, block), n) * k;
    }
    ops.push_back(std::move(k));
  }
  return KrausSet(std::move(ops));
}

DenseOperator lindblad_rhs(const LindbladModel& model, const DenseOperator& rho) {
  const DenseOperator h = to_dense(model.hamiltonian());
  DenseOperator out = cplx(0.0, -1.0) * (h * rho - rho * h);
  for (const auto& c : model.channels()) {
    const DenseOperator l = to_dense(model.jump_operator(c), model.n_qubits());
    const DenseOperator ldl = l.adjoint() * l;
    out += l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl);
  }
  return out;
}

DensityMatrix integrate_master(const LindbladModel& model, const DensityMatrix& rho0, double t_final,
                               double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("integrate_master: dt must be positive");
  }
  if (t_final < 0.0) {
    throw std::invalid_argument("integrate_master: negative horizon");
  }
  if (model.n_qubits() > 8) {
    throw std::invalid_argument("integrate_master: dense integration limited to 8 qubits");
  }
  if (rho0.n_qubits() != model.n_qubits()) {
    throw std::invalid_argument("integrate_master: state and model registers differ");
  }
  const int n = model.n_qubits();
  const DenseOperator h = to_dense(model.hamiltonian());
  std::vector<DenseOperator> ls;
  DenseOperator drift = cplx(0.0, -1.0) * h;
  for (const auto& c : model.channels()) {
    ls.push_back(to_dense(model.jump_operator(c), n));
    drift -= 0.5 * ls.back().adjoint() * ls.back();
  }
  // d rho = G rho + rho G^dagger + sum L rho L^dagger with G = -iH - 1/2 sum L^dagger L.
  auto rhs = [&](const DenseOperator& r) {
    DenseOperator out = drift * r;
    out += r * drift.adjoint();
    for (const auto& l : ls) out.noalias() += l * r * l.adjoint();
    return out;
  };

  const auto steps = static_cast<long>(std::ceil(t_final / dt - 1e-12));
  const double step = steps > 0 ? t_final / static_cast<double>(steps) : 0.0;
  DenseOperator rho = rho0.matrix();
  for (long s = 0; s < steps; ++s) {
    const DenseOperator k1 = rhs(rho);
    const DenseOperator k2 = rhs(rho + 0.5 * step * k1);
    const DenseOperator k3 = rhs(rho + 0.5 * step * k2);
    const DenseOperator k4 = rhs(rho + step * k3);
    rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(n, std::move(rho));
}

TrajectorySimulator::TrajectorySimulator(const LindbladModel& model, const Ket& psi0,
                                         RandomStream stream)
    : model_(model), heff_(effective_hamiltonian(model)), stream_(std::move(stream)) {
  if (psi0.n_qubits() != model.n_qubits()) {
    throw std::invalid_argument("TrajectorySimulator: state and model registers differ");
  }
  if (!psi0.is_normalized(1e-10)) {
    throw std::invalid_argument("TrajectorySimulator: initial state must be normalized");
  }
  if (psi0.dimension() <= kDenseTrajectoryLimit) {
    use_dense_ = true;
    heff_dense_ = to_dense(heff_);
    norm_bound_ = heff_dense_.cwiseAbs().colwise().sum().maxCoeff();
  } else {
    norm_bound_ = heff_.norm1_bound();
  }
  for (const auto& c : model.channels()) jumps_.push_back(model.jump_operator(c));
  unnormalized_ = psi0.amplitudes();
  threshold_ = stream_.uniform();
}

Eigen::VectorXcd TrajectorySimulator::propagate(const Eigen::VectorXcd& v, double dt) const {
  const Ket k(model_.n_qubits(), v);
  return use_dense_ ? expm_apply(heff_dense_, dt, k).amplitudes() : expm_apply(heff_, dt, k).amplitudes();
}

Ket TrajectorySimulator::state() const {
  return Ket(model_.n_qubits(), unnormalized_ / unnormalized_.norm());
}

void TrajectorySimulator::apply_unitary(const DenseOperator& u) {
  if (u.rows() != unnormalized_.size() || u.cols() != unnormalized_.size()) {
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  }
  unnormalized_ = u * unnormalized_;
}

void TrajectorySimulator::apply_unitary(const LocalOperator& u) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(unnormalized_.size());
  apply_local_accumulate(u, model_.n_qubits(), unnormalized_, out);
  unnormalized_.swap(out);
}

int TrajectorySimulator::draw_channel() {
  std::vector<double> w(jumps_.size(), 0.0);
  double total = 0.0;
  for (std::size_t a = 0; a < jumps_.size(); ++a) {
    const auto& c = model_.channels()[a];
    const std::uint64_t bit = std::uint64_t{1} << (c.qubit - 1);
    double excited = 0.0;
    for (Eigen::Index i = 0; i < unnormalized_.size(); ++i) {
      if (static_cast<std::uint64_t>(i) & bit) excited += std::norm(unnormalized_[i]);
    }
    w[a] = c.rate * excited;
    total += w[a];
  }
  if (!(total > 0.0)) return -1;
  const double u = stream_.uniform() * total;
  double acc = 0.0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    acc += w[a];
    if (u < acc) return static_cast<int>(a);
  }
  for (std::size_t a = w.size(); a-- > 0;) {
    if (w[a] > 0.0) return static_cast<int>(a);
  }
  return -1;
}

std::optional<Jump> TrajectorySimulator::advance(double t_stop) {
  if (absorbed_ || t_stop <= time_) return std::nullopt;
  if (norm_bound_ == 0.0) {
    time_ = t_stop;
    return std::nullopt;
  }
  const double max_chunk = 1.0 / norm_bound_;
  while (time_ < t_stop) {
    const double h = std::min(max_chunk, t_stop - time_);
    Eigen::VectorXcd next = propagate(unnormalized_, h);
    if (next.squaredNorm() > threshold_) {
      unnormalized_.swap(next);
      time_ = (h == t_stop - time_) ? t_stop : time_ + h;
      continue;
    }
    // The squared norm is non-increasing, so the crossing lies in (0, h].
    double lo = 0.0;
    double hi = h;
    while (hi - lo > 1e-10 * std::max(1.0, time_ + hi)) {
      const double mid = 0.5 * (lo + hi);
      if (propagate(unnormalized_, mid).squaredNorm() > threshold_) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    unnormalized_ = propagate(unnormalized_, hi);
    time_ += hi;
    const int a = draw_channel();
    if (a < 0) {
      absorbed_ = true;
      return std::nullopt;
    }
    Eigen::VectorXcd jumped = Eigen::VectorXcd::Zero(unnormalized_.size());
    apply_local_accumulate(jumps_[static_cast<std::size_t>(a)], model_.n_qubits(), unnormalized_, jumped);
    const double jump_norm2 = jumped.squaredNorm();
    weight_ *= jump_norm2;
    if (!(jump_norm2 > 0.0) || !(weight_ > 0.0)) {
      absorbed_ = true;
      return std::nullopt;
    }
    unnormalized_ = jumped / std::sqrt(jump_norm2);
    threshold_ = stream_.uniform();
    return Jump{time_, model_.channels()[static_cast<std::size_t>(a)].qubit};
  }
  return std::nullopt;
}

TrajectoryRecord run_trajectory(const LindbladModel& model, const Ket& psi0, double t_final,
                                std::uint64_t seed, std::uint64_t trajectory_id) {
  if (t_final < 0.0) {
    throw std::invalid_argument("run_trajectory: negative horizon");
  }
  TrajectorySimulator sim(model, psi0, RandomStream(seed, trajectory_id));
  TrajectoryRecord rec;
  while (sim.time() < t_final && !sim.absorbed()) {
    if (auto jump = sim.advance(t_final)) rec.jumps.push_back(*jump);
  }
  rec.absorbed = sim.absorbed();
  rec.weight = sim.weight();
  rec.final_state = sim.state();
  return rec;
}

DenseOperator pairwise_sum(std::vector<DenseOperator> parts) {
  if (parts.empty()) {
    throw std::invalid_argument("pairwise_sum: nothing to sum");
  }
  while (parts.size() > 1) {
    std::vector<DenseOperator> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts.swap(next);
  }
  return std::move(parts.front());
}

DensityMatrix average_trajectories(const LindbladModel& model, const Ket& psi0, double t_final,
                                   std::size_t count, std::uint64_t seed, unsigned threads) {
  if (count == 0) {
    throw std::invalid_argument("average_trajectories: count must be at least one");
  }
  const Eigen::Index dim = psi0.dimension();
  const std::size_t blocks = (count + kBlockSize - 1) / kBlockSize;
  std::vector<DenseOperator> sums(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    DenseOperator acc = DenseOperator::Zero(dim, dim);
    const std::size_t end = std::min(count, (b + 1) * kBlockSize);
    for (std::size_t i = b * kBlockSize; i < end; ++i) {
      const auto rec = run_trajectory(model, psi0, t_final, seed, i);
      const auto& v = rec.final_state.amplitudes();
      acc.noalias() += v * v.adjoint();
    }
    sums[b] = std::move(acc);
  });
  DenseOperator mean = pairwise_sum(std::move(sums)) / static_cast<double>(count);
  mean = 0.5 * (mean + mean.adjoint()).eval();
  return DensityMatrix(model.n_qubits(), std::move(mean));
}

}  // namespace jumpcode
