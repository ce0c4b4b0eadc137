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

#ifndef LPNC_QEC_H_
#define LPNC_QEC_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lpnc/analytic.h"
#include "lpnc/circuit.h"
#include "lpnc/encodings.h"
#include "lpnc/flip_frame.h"

namespace lpnc {

/// Duplication code for one kappa = 3, N = 1 subsystem. Data qubits 0..5 hold
/// the pairs (0,1), (2,3), (4,5), one per logical qubit; qubits 6, 7, 8 are
/// the ancillas of the three checks.
struct CodeLayout {
  static constexpr int kDataQubits = 6;
  static constexpr int kAncillas = 3;
  static constexpr int kQubits = kDataQubits + kAncillas;
  static constexpr int ancilla(int check) { return kDataQubits + check; }

  /// Z-string checks: {0,1,2,3}, {2,3,4,5}, {0,2,4}.
  static const std::array<std::vector<int>, 3>& checks();
  /// 110000, 001100, 000011.
  static const std::array<Bitstring, 3>& codewords();
};

/// Doubles every bit of a one-hot 3-bit string. Throws InfeasibleAssignment
/// for any other input.
Bitstring encode(std::span<const std::uint8_t> logical);

bool is_codeword(std::span<const std::uint8_t> data);
/// Within Hamming distance 1 of a codeword.
bool is_near_codeword(std::span<const std::uint8_t> data);

/// Parities of the three checks on six data bits.
std::array<std::uint8_t, 3> check_parities(std::span<const std::uint8_t> data);

enum class RecoveryKind { kIdentity, kFlip, kNotDecodable };

struct Recovery {
  RecoveryKind kind = RecoveryKind::kIdentity;
  /// Data qubit to flip for kFlip; -1 otherwise.
  int qubit = -1;

  friend bool operator==(const Recovery&, const Recovery&) = default;
};

/// Violation bits v_j = measured parity of check j XOR its code-space value.
using Violation = std::array<std::uint8_t, 3>;

class SyndromeTable {
 public:
  SyndromeTable(Violation baseline, std::array<Recovery, 8> actions);

  /// Check parities shared by all codewords.
  const Violation& baseline() const { return baseline_; }
  const Recovery& lookup(const Violation& v) const { return actions_[index(v)]; }
  /// v = measured ^ baseline.
  Violation violation(const std::array<std::uint8_t, 3>& measured) const;

  static std::size_t index(const Violation& v) { return static_cast<std::size_t>(v[0] * 4 + v[1] * 2 + v[2]); }

 private:
  Violation baseline_;
  std::array<Recovery, 8> actions_;
};

/// Builds the table from the checks: each single data flip maps to its
/// violation pattern, no violation maps to identity and the one pattern no
/// single flip produces is not decodable. Throws std::logic_error if the
/// checks do not have a common code-space value or single flips collide.
SyndromeTable derive_syndrome_table();

struct SyndromeCircuitOptions {
  /// Re-prepare the ancillas in |0> before the checks (a noiseless layer).
  bool reset_ancillas = true;
};

/// Optional reset layer, the check CNOTs in 4 noisy layers (data -> ancilla,
/// colored by the bipartite edge coloring), a noiseless measurement layer
/// whose errors are the readout error, and one noisy recovery layer of
/// ConditionalX gates. Classical bits 0..2 hold the measured parities.
LayeredCircuit build_syndrome_circuit(const SyndromeCircuitOptions& options = {});

/// Number of layers holding CNOTs in `circuit`.
int cnot_layer_count(const LayeredCircuit& circuit);

/// Layers of `depth` noisy idle layers on `qubits` qubits.
LayeredCircuit idle_circuit(int qubits, int depth);

struct QecRunOptions {
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  /// Accept data strings within distance 1 of a codeword.
  bool lenient = false;
  bool reset_ancillas = true;
  /// Logical color of the starting state (0, 1 or 2).
  int logical = 0;
  unsigned threads = 0;
};

struct QecResult {
  RunResult result;
  /// Fraction of syndrome readouts that hit the not-decodable pattern.
  double nd_rate = 0.0;
  /// Noisy layers seen by a shot.
  int layers = 0;
};

/// d noisy layers on all 9 qubits, then the syndrome circuit, then the final
/// data readout with roe. A shot is valid when the data is a codeword.
QecResult run_corrected_segment(int prior_depth, const NoiseModel& noise, const QecRunOptions& options = {});

/// d noisy layers on the 3-qubit unencoded subsystem, read with roe.
QecResult run_uncorrected_segment(int depth, const NoiseModel& noise, const QecRunOptions& options = {});

struct InterleavedOptions {
  int vertices = 30;
  /// Noisy layers per QAOA block.
  int block_depth = 7;
  int max_blocks = 30;
  /// Correct after every `correction_period` blocks.
  int correction_period = 3;
  QecRunOptions run;
};

struct InterleavedPoint {
  int blocks = 0;
  /// Noisy layers up to this point, corrections included.
  int layers = 0;
  /// Estimated per-vertex feasibility.
  double vertex_estimate = 0.0;
  double vertex_stderr = 0.0;
  /// vertex_estimate^vertices with a first-order error.
  RunResult total;
  double nd_rate = 0.0;
};

/// Checkpoint sweep for p = 0..max_blocks. Every vertex is simulated as its
/// own stream (keyed by shot * vertices + vertex), which is exact because the
/// noise is local and feasibility does not depend on the gates.
std::vector<InterleavedPoint> run_interleaved(const NoiseModel& noise, const InterleavedOptions& options,
                                              bool corrected);

}  // namespace lpnc

#endif  // LPNC_QEC_H_
