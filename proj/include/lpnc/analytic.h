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

#ifndef LPNC_ANALYTIC_H_
#define LPNC_ANALYTIC_H_

#include <cstdint>

namespace lpnc {

/// Local depolarizing noise applied to every qubit after every layer, plus a
/// symmetric readout error.
struct NoiseModel {
  /// Probability that one of X, Y, Z (each eta/3) hits a qubit in a layer.
  double eta = 0.0;
  /// Probability that a measured bit is reported flipped.
  double roe = 0.0;

  /// Throws std::invalid_argument unless 0 <= eta <= 1 and 0 <= roe <= 0.5.
  void validate() const;

  /// Per-layer bit-flip probability; only the X and Y Kraus terms flip.
  double flip_probability() const { return 2.0 * eta / 3.0; }
};

/// n subsystems of kappa qubits, each holding particle_number excitations.
struct SubsystemSpec {
  int kappa = 1;
  int particle_number = 0;
  int subsystems = 1;

  /// Throws std::invalid_argument unless 1 <= kappa <= 64,
  /// 0 <= particle_number <= kappa and subsystems >= 1.
  void validate() const;

  /// Number of weight-N basis states of one subsystem.
  std::uint64_t local_dimension() const;
};

/// Exact binomial coefficient for n <= 64. Throws std::invalid_argument on
/// negative arguments or n > 64; returns 0 for k > n.
std::uint64_t binomial(int n, int k);

/// Probability that a single bit shows its initial value after `depth`
/// independent flip processes with flip probability 2*eta/3 each.
///
/// Evaluates the sum over even flip counts,
///   sum_k C(d, d-2k) (1-q)^(d-2k) q^(2k),  q = 2 eta / 3,
/// by walking the binomial weights outward from their mode and normalizing by
/// the full binomial mass, which keeps the sum accurate for d in the
/// thousands and for q close to 0 or 1/2.
double bit_persistence(const NoiseModel& noise, int depth);

/// Probability that one subsystem is still at weight N after `depth` noisy
/// layers. The circuit's gates do not enter: any gate that commutes with the
/// local particle number leaves this value unchanged.
double subspace_weight(const SubsystemSpec& spec, const NoiseModel& noise, int depth);

/// subspace_weight(...)^n.
double feasible_probability(const SubsystemSpec& spec, const NoiseModel& noise, int depth);

/// n * log(subspace_weight(...)); exact factorization of the feasible
/// probability, usable where the probability itself underflows.
double log_feasible_probability(const SubsystemSpec& spec, const NoiseModel& noise, int depth);

/// Feasible fraction of the fully mixed state, (C(kappa, N) / 2^kappa)^n.
double mixed_state_baseline(const SubsystemSpec& spec);

}  // namespace lpnc

#endif  // LPNC_ANALYTIC_H_
