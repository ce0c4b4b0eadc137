// Copyright 2026 The lpnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lpnc/dense.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "lpnc/errors.h"

namespace lpnc {

namespace {

using Complex = std::complex<double>;
using Matrix = DensityMatrix::Matrix;

constexpr Complex kI{0.0, 1.0};

void check_qubit_count(int qubits) {
  if (qubits < 1 || qubits > kMaxDenseQubits) {
    throw std::invalid_argument("dense engine supports 1 to " + std::to_string(kMaxDenseQubits) + " qubits, got " +
                                std::to_string(qubits));
  }
}

// m -> U m on the row index, U acting on `qubits`.
void left_apply(Matrix& m, std::span<const int> qubits, const Matrix& u) {
  const std::size_t k = qubits.size();
  const Eigen::Index sub = Eigen::Index{1} << k;
  std::vector<Eigen::Index> offset(static_cast<std::size_t>(sub), 0);
  Eigen::Index mask = 0;
  for (Eigen::Index s = 0; s < sub; ++s) {
    for (std::size_t b = 0; b < k; ++b) {
      if ((s >> b) & 1) {
        offset[static_cast<std::size_t>(s)] |= Eigen::Index{1} << qubits[b];
      }
    }
  }
  for (int q : qubits) {
    mask |= Eigen::Index{1} << q;
  }
  Eigen::VectorXcd in(sub);
  Eigen::VectorXcd out(sub);
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r & mask) {
        continue;
      }
      for (Eigen::Index s = 0; s < sub; ++s) {
        in(s) = m(r | offset[static_cast<std::size_t>(s)], c);
      }
      out.noalias() = u * in;
      for (Eigen::Index s = 0; s < sub; ++s) {
        m(r | offset[static_cast<std::size_t>(s)], c) = out(s);
      }
    }
  }
}

double z_product(Eigen::Index index, std::span<const int> support) {
  int parity = 0;
  for (int q : support) {
    parity ^= static_cast<int>((index >> q) & 1);
  }
  return parity ? -1.0 : 1.0;
}

}  // namespace

DensityMatrix::DensityMatrix(int qubits, Matrix rho) : qubits_(qubits), rho_(std::move(rho)) {
  check_qubit_count(qubits);
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  if (rho_.rows() != dim || rho_.cols() != dim) {
    throw std::invalid_argument("density matrix must be " + std::to_string(dim) + " x " + std::to_string(dim));
  }
}

DensityMatrix DensityMatrix::basis_state(std::span<const std::uint8_t> bits) {
  const int q = static_cast<int>(bits.size());
  check_qubit_count(q);
  Eigen::Index index = 0;
  for (int k = 0; k < q; ++k) {
    if (bits[static_cast<std::size_t>(k)]) {
      index |= Eigen::Index{1} << k;
    }
  }
  Matrix rho = Matrix::Zero(Eigen::Index{1} << q, Eigen::Index{1} << q);
  rho(index, index) = 1.0;
  return DensityMatrix(q, std::move(rho));
}

DensityMatrix DensityMatrix::feasible_projector_state(const SubsystemSpec& spec) {
  spec.validate();
  const int q = spec.kappa * spec.subsystems;
  check_qubit_count(q);
  const Eigen::Index dim = Eigen::Index{1} << q;
  const std::uint64_t block = (std::uint64_t{1} << spec.kappa) - 1;
  Matrix rho = Matrix::Zero(dim, dim);
  double count = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    bool feasible = true;
    for (int b = 0; b < spec.subsystems && feasible; ++b) {
      const auto bits = (static_cast<std::uint64_t>(i) >> (b * spec.kappa)) & block;
      feasible = std::popcount(bits) == spec.particle_number;
    }
    if (feasible) {
      rho(i, i) = 1.0;
      count += 1.0;
    }
  }
  rho /= count;
  return DensityMatrix(q, std::move(rho));
}

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
  check_qubit_count(qubits);
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  return DensityMatrix(qubits, Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

void DensityMatrix::apply_unitary(std::span<const int> qubits, const Matrix& u) {
  const Eigen::Index sub = Eigen::Index{1} << qubits.size();
  if (u.rows() != sub || u.cols() != sub) {
    throw std::invalid_argument("unitary size does not match its qubit count");
  }
  for (int q : qubits) {
    if (q < 0 || q >= qubits_) {
      throw std::invalid_argument("unitary qubit " + std::to_string(q) + " out of range");
    }
  }
  left_apply(rho_, qubits, u);
  rho_.adjointInPlace();
  left_apply(rho_, qubits, u);
  rho_.adjointInPlace();
}

void DensityMatrix::apply_diagonal(const Eigen::VectorXcd& phases) {
  if (phases.size() != rho_.rows()) {
    throw std::invalid_argument("phase vector size does not match the density matrix");
  }
  for (Eigen::Index c = 0; c < rho_.cols(); ++c) {
    const Complex pc = std::conj(phases(c));
    for (Eigen::Index r = 0; r < rho_.rows(); ++r) {
      rho_(r, c) *= phases(r) * pc;
    }
  }
}

void DensityMatrix::depolarize(int qubit, double eta) {
  if (eta == 0.0) {
    return;
  }
  const Eigen::Index m = Eigen::Index{1} << qubit;
  const double flip = 2.0 * eta / 3.0;
  const double contract = 1.0 - 4.0 * eta / 3.0;
  for (Eigen::Index c = 0; c < rho_.cols(); ++c) {
    if (c & m) {
      continue;
    }
    for (Eigen::Index r = 0; r < rho_.rows(); ++r) {
      if (r & m) {
        continue;
      }
      const Complex a = rho_(r, c);
      const Complex d = rho_(r | m, c | m);
      rho_(r, c) = (1.0 - flip) * a + flip * d;
      rho_(r | m, c | m) = flip * a + (1.0 - flip) * d;
      rho_(r | m, c) *= contract;
      rho_(r, c | m) *= contract;
    }
  }
}

void DensityMatrix::depolarize_all(double eta) {
  for (int q = 0; q < qubits_; ++q) {
    depolarize(q, eta);
  }
}

void DensityMatrix::reset(int qubit) {
  const Eigen::Index m = Eigen::Index{1} << qubit;
  for (Eigen::Index c = 0; c < rho_.cols(); ++c) {
    if (c & m) {
      continue;
    }
    for (Eigen::Index r = 0; r < rho_.rows(); ++r) {
      if (r & m) {
        continue;
      }
      rho_(r, c) += rho_(r | m, c | m);
      rho_(r | m, c | m) = 0.0;
      rho_(r | m, c) = 0.0;
      rho_(r, c | m) = 0.0;
    }
  }
}

void DensityMatrix::dephase(int qubit) {
  const Eigen::Index m = Eigen::Index{1} << qubit;
  for (Eigen::Index c = 0; c < rho_.cols(); ++c) {
    for (Eigen::Index r = 0; r < rho_.rows(); ++r) {
      if ((r ^ c) & m) {
        rho_(r, c) = 0.0;
      }
    }
  }
}

double DensityMatrix::trace() const { return rho_.trace().real(); }

std::string DensityMatrix::check_valid() const {
  std::ostringstream why;
  const double asym = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    why << "not Hermitian (max deviation " << asym << ")";
    return why.str();
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > 1e-9) {
    why << "trace " << tr.real() << (tr.imag() >= 0 ? "+" : "") << tr.imag() << "i";
    return why.str();
  }
  const Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_, Eigen::EigenvaluesOnly);
  const double smallest = solver.eigenvalues().minCoeff();
  if (smallest < -1e-9) {
    why << "negative eigenvalue " << smallest;
    return why.str();
  }
  return {};
}

Matrix gate_unitary(const Gate& gate) {
  const auto k = gate.qubits.size();
  const Eigen::Index sub = Eigen::Index{1} << k;
  switch (gate.kind) {
    case GateKind::kXYPair: {
      Matrix u = Matrix::Identity(4, 4);
      u(1, 1) = u(2, 2) = std::cos(gate.angle);
      u(1, 2) = u(2, 1) = -kI * std::sin(gate.angle);
      return u;
    }
    case GateKind::kZZPair:
    case GateKind::kZString: {
      Matrix u = Matrix::Zero(sub, sub);
      for (Eigen::Index s = 0; s < sub; ++s) {
        u(s, s) = std::exp(-kI * gate.angle * (std::popcount(static_cast<std::uint64_t>(s)) % 2 ? -1.0 : 1.0));
      }
      return u;
    }
    case GateKind::kXYClique: {
      Matrix h = Matrix::Zero(sub, sub);
      for (Eigen::Index s = 0; s < sub; ++s) {
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = i + 1; j < k; ++j) {
            if (((s >> i) & 1) != ((s >> j) & 1)) {
              h((s ^ (Eigen::Index{1} << i)) ^ (Eigen::Index{1} << j), s) += 1.0;
            }
          }
        }
      }
      const Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
      Eigen::VectorXcd phase(sub);
      for (Eigen::Index s = 0; s < sub; ++s) {
        phase(s) = std::exp(-kI * gate.angle * solver.eigenvalues()(s));
      }
      return solver.eigenvectors() * phase.asDiagonal() * solver.eigenvectors().adjoint();
    }
    case GateKind::kLocalX: {
      Matrix u(2, 2);
      u << std::cos(gate.angle), -kI * std::sin(gate.angle), -kI * std::sin(gate.angle), std::cos(gate.angle);
      return u;
    }
    case GateKind::kCnot: {
      Matrix u = Matrix::Zero(4, 4);
      u(0, 0) = u(2, 2) = 1.0;
      u(3, 1) = u(1, 3) = 1.0;
      return u;
    }
    case GateKind::kPrepZero:
    case GateKind::kMeasureZ:
    case GateKind::kConditionalX:
      break;
  }
  throw UnsupportedGate(to_string(gate.kind) + " has no unitary");
}

DensityMatrix dense_run(const LayeredCircuit& circuit, const NoiseModel& noise, DensityMatrix initial) {
  noise.validate();
  if (circuit.qubit_count() != initial.qubit_count()) {
    throw std::invalid_argument("initial state has " + std::to_string(initial.qubit_count()) +
                                " qubits, circuit has " + std::to_string(circuit.qubit_count()));
  }
  DensityMatrix rho = std::move(initial);
  const Eigen::Index dim = static_cast<Eigen::Index>(rho.dimension());
  for (const Layer& layer : circuit.layers()) {
    Eigen::VectorXcd phases = Eigen::VectorXcd::Ones(dim);
    bool diagonal = false;
    for (const Gate& g : layer.gates) {
      switch (g.kind) {
        case GateKind::kZZPair:
        case GateKind::kZString:
          for (Eigen::Index s = 0; s < dim; ++s) {
            phases(s) *= std::exp(-kI * g.angle * z_product(s, g.qubits));
          }
          diagonal = true;
          break;
        case GateKind::kXYPair:
        case GateKind::kXYClique:
        case GateKind::kLocalX:
        case GateKind::kCnot:
          rho.apply_unitary(g.qubits, gate_unitary(g));
          break;
        case GateKind::kPrepZero:
          rho.reset(g.qubits[0]);
          break;
        case GateKind::kMeasureZ:
          rho.dephase(g.qubits[0]);
          break;
        case GateKind::kConditionalX:
          throw UnsupportedGate("dense engine does not track classical bits; ConditionalX is unsupported");
      }
    }
    if (diagonal) {
      rho.apply_diagonal(phases);
    }
    if (layer.noisy) {
      rho.depolarize_all(noise.eta);
    }
  }
  return rho;
}

double feasibility_expectation(const DensityMatrix& rho, const SubsystemSpec& spec) {
  spec.validate();
  if (rho.qubit_count() != spec.kappa * spec.subsystems) {
    throw std::invalid_argument("density matrix has " + std::to_string(rho.qubit_count()) + " qubits, layout needs " +
                                std::to_string(spec.kappa * spec.subsystems));
  }
  const std::uint64_t block = (std::uint64_t{1} << spec.kappa) - 1;
  double total = 0.0;
  for (Eigen::Index i = 0; i < rho.matrix().rows(); ++i) {
    bool feasible = true;
    for (int b = 0; b < spec.subsystems && feasible; ++b) {
      const auto bits = (static_cast<std::uint64_t>(i) >> (b * spec.kappa)) & block;
      feasible = std::popcount(bits) == spec.particle_number;
    }
    if (feasible) {
      total += rho.matrix()(i, i).real();
    }
  }
  if (total < -1e-9 || total > 1.0 + 1e-9) {
    throw std::invalid_argument("feasibility " + std::to_string(total) + " is not a probability");
  }
  return std::clamp(total, 0.0, 1.0);
}

MixerBound mixer_bound_check(double beta_x, double beta_xy, double eta) {
  const SubsystemSpec spec{3, 1, 1};
  const NoiseModel noise{eta, 0.0};
  LayeredCircuit x_circuit(3);
  x_circuit.append_layer({Gate::local_x(0, beta_x), Gate::local_x(1, beta_x), Gate::local_x(2, beta_x)});
  LayeredCircuit xy_circuit(3);
  xy_circuit.append_layer({Gate::xy_clique({0, 1, 2}, beta_xy)});

  MixerBound out;
  out.lhs = feasibility_expectation(dense_run(x_circuit, noise, DensityMatrix::feasible_projector_state(spec)), spec);
  out.rhs = feasibility_expectation(dense_run(xy_circuit, noise, DensityMatrix::feasible_projector_state(spec)), spec);
  out.holds = out.lhs <= out.rhs + 1e-12;
  return out;
}

std::vector<PenaltyAngles> reference_penalty_angle_sets() {
  return {
      {{1.5, 0.2, 0.9, 3.8}, {1.5, 3.2, 0.9}},
      {{1.5, 1.7, 1.9, 0.8}, {0.4, 1.2, 1.7}},
      {{2.2, 3.7, 2.9, 2.8}, {1.4, 0.9, 3.1}},
  };
}

std::vector<MixerComparisonRow> mixer_comparison_sweep(const std::vector<PenaltyAngles>& sets,
                                                      std::span<const double> etas,
                                                      const MixerComparisonOptions& options) {
  if (sets.empty()) {
    throw std::invalid_argument("mixer comparison needs at least one angle set");
  }
  const int blocks = static_cast<int>(sets.front().betas.size());
  for (const PenaltyAngles& s : sets) {
    if (static_cast<int>(s.betas.size()) != blocks) {
      throw std::invalid_argument("all angle sets need the same number of blocks");
    }
  }
  const SubsystemSpec spec{3, 1, 1};
  PenaltyQaoaOptions x_options;
  x_options.noise_per = options.noise_per;
  PenaltyQaoaOptions xy_options = x_options;
  xy_options.mixer = MixerKind::kXYClique;

  std::vector<LayeredCircuit> x_circuits;
  for (const PenaltyAngles& s : sets) {
    x_circuits.push_back(build_x_qaoa_circuit(3, blocks, s.betas, s.gammas, options.alpha, x_options));
  }
  const std::vector<double>& xy_betas = options.xy_betas.empty() ? sets.front().betas : options.xy_betas;
  const LayeredCircuit xy_circuit =
      build_x_qaoa_circuit(3, blocks, xy_betas, sets.front().gammas, options.alpha, xy_options);

  std::vector<MixerComparisonRow> rows;
  for (double eta : etas) {
    const NoiseModel noise{eta, 0.0};
    MixerComparisonRow row;
    row.eta = eta;
    row.noisy_layers = xy_circuit.noisy_layer_count();
    row.xy = feasibility_expectation(dense_run(xy_circuit, noise, DensityMatrix::feasible_projector_state(spec)), spec);
    for (const LayeredCircuit& c : x_circuits) {
      row.x.push_back(feasibility_expectation(dense_run(c, noise, DensityMatrix::feasible_projector_state(spec)), spec));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lpnc
