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

#ifndef LPNC_DENSE_H_
#define LPNC_DENSE_H_

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lpnc/analytic.h"
#include "lpnc/builders.h"
#include "lpnc/circuit.h"
#include "lpnc/encodings.h"

namespace lpnc {

/// Largest register the dense engine accepts; 12 qubits already take 256 MiB.
inline constexpr int kMaxDenseQubits = 12;

/// Density matrix on q qubits. Qubit k is bit k of the basis index, so the
/// basis state of a Bitstring b has index sum_k b[k] 2^k.
class DensityMatrix {
 public:
  using Matrix = Eigen::MatrixXcd;

  /// Throws std::invalid_argument when q is outside [1, kMaxDenseQubits] or
  /// `rho` is not 2^q square.
  DensityMatrix(int qubits, Matrix rho);

  static DensityMatrix basis_state(std::span<const std::uint8_t> bits);
  /// P_feas / Tr P_feas for the given subsystem layout.
  static DensityMatrix feasible_projector_state(const SubsystemSpec& spec);
  static DensityMatrix maximally_mixed(int qubits);

  int qubit_count() const { return qubits_; }
  std::size_t dimension() const { return static_cast<std::size_t>(rho_.rows()); }
  const Matrix& matrix() const { return rho_; }
  Matrix& mutable_matrix() { return rho_; }

  /// rho -> U rho U^dagger with U acting on `qubits` (qubits[0] is the lowest
  /// bit of U's index).
  void apply_unitary(std::span<const int> qubits, const Matrix& u);
  /// rho_ij -> phase_i conj(phase_j) rho_ij.
  void apply_diagonal(const Eigen::VectorXcd& phases);
  /// Local depolarizing channel with rate eta on one qubit.
  void depolarize(int qubit, double eta);
  /// Depolarizing channel on every qubit.
  void depolarize_all(double eta);
  /// Non-selective reset of one qubit to |0>.
  void reset(int qubit);
  /// Non-selective Z measurement (full dephasing) of one qubit.
  void dephase(int qubit);

  double trace() const;
  /// Checks Hermiticity (1e-10), unit trace (1e-9) and positivity (smallest
  /// eigenvalue >= -1e-9). Returns an empty string when valid, else the reason.
  std::string check_valid() const;

 private:
  int qubits_;
  Matrix rho_;
};

/// Unitary of a single gate on its own qubits (qubits[0] is bit 0). Throws
/// UnsupportedGate for non-unitary kinds.
DensityMatrix::Matrix gate_unitary(const Gate& gate);

/// Runs every layer: its gates, then, when the layer is noisy, the
/// depolarizing channel on all qubits. ConditionalX is rejected with
/// UnsupportedGate; MeasureZ acts as a non-selective measurement. Readout
/// error does not enter the density matrix.
DensityMatrix dense_run(const LayeredCircuit& circuit, const NoiseModel& noise, DensityMatrix initial);

/// Tr[P_feas rho], clamped to [0, 1] when within 1e-9 of the range. Throws
/// std::invalid_argument when the register size is not kappa * subsystems or
/// the value is further outside.
double feasibility_expectation(const DensityMatrix& rho, const SubsystemSpec& spec);

struct MixerBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// One mixer layer followed by one noise layer on P_F / 3 for kappa = 3,
/// N = 1: lhs uses exp(-i beta_x sum X), rhs uses exp(-i beta_xy H_XY).
/// holds = lhs <= rhs + 1e-12.
MixerBound mixer_bound_check(double beta_x, double beta_xy, double eta);

/// Transverse-field QAOA parameters: betas (b_1..b_p), gammas (g_2..g_p).
struct PenaltyAngles {
  std::vector<double> betas;
  std::vector<double> gammas;
};

/// The three X-QAOA parameter sets of the four-block comparison.
std::vector<PenaltyAngles> reference_penalty_angle_sets();

struct MixerComparisonRow {
  double eta = 0.0;
  double xy = 0.0;
  /// One value per angle set, same order as the input.
  std::vector<double> x;
  int noisy_layers = 0;
};

struct MixerComparisonOptions {
  double alpha = 1.0;
  NoisePer noise_per = NoisePer::kLayer;
  /// Mixer angles for the XY circuit; the result does not depend on them.
  std::vector<double> xy_betas;
};

/// kappa = 3, N = 1 starting from P_F / 3. For each eta the X circuits use the
/// given angle sets; the XY circuit is the same alternation with the XY
/// mixer in place of the transverse field. All sets need the same block count.
std::vector<MixerComparisonRow> mixer_comparison_sweep(const std::vector<PenaltyAngles>& sets,
                                                      std::span<const double> etas,
                                                      const MixerComparisonOptions& options = {});

}  // namespace lpnc

#endif  // LPNC_DENSE_H_
