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

#ifndef LPNC_FLIP_FRAME_H_
#define LPNC_FLIP_FRAME_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lpnc/analytic.h"
#include "lpnc/circuit.h"
#include "lpnc/encodings.h"
#include "lpnc/rng.h"

namespace lpnc {

/// Bernoulli estimate with its binomial standard error.
struct RunResult {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  /// standard_error = sqrt(estimate (1 - estimate) / shots).
  static RunResult from_counts(std::uint64_t hits, std::uint64_t shots, std::uint64_t seed);
};

using BitPredicate = std::function<bool(std::span<const std::uint8_t>)>;

/// Accepts bitstrings whose consecutive kappa-bit blocks all have weight N.
BitPredicate weight_predicate(const SubsystemSpec& spec);

/// Lexicographically smallest feasible bitstring: every block reads 0..01..1.
Bitstring lowest_feasible_bitstring(const SubsystemSpec& spec);

/// Accumulated X flips relative to the noiseless reference trajectory.
/// Z components are never tracked: every quantity read out is a Z-basis
/// function, and Z errors commute with all particle number projectors.
struct FlipFrame {
  std::vector<std::uint64_t> x_mask;

  explicit FlipFrame(int qubits = 0) : x_mask((static_cast<std::size_t>(qubits) + 63) / 64, 0) {}
  bool get(int q) const { return (x_mask[static_cast<std::size_t>(q) >> 6] >> (q & 63)) & 1U; }
  void toggle(int q) { x_mask[static_cast<std::size_t>(q) >> 6] ^= std::uint64_t{1} << (q & 63); }
  void clear(int q) { x_mask[static_cast<std::size_t>(q) >> 6] &= ~(std::uint64_t{1} << (q & 63)); }
};

/// Per-shot mutable state; survives across programs so that circuits can be
/// run segment by segment.
struct ShotState {
  FlipFrame frame;
  /// Last measured value of every classical bit, readout error included.
  Bitstring classical;
  /// Non-flipping noise sites left before the next flip.
  std::uint64_t gap = 0;
};

/// A circuit compiled for flip-frame sampling. LPNC gates are dropped: they
/// map weight sectors to themselves, so they cannot change any feasibility
/// statistic. CNOT propagates flips control -> target, PrepZero clears the
/// flip, MeasureZ reports reference ^ flip ^ readout error, ConditionalX
/// toggles the flip when its firing differs from the reference's.
class FlipFrameProgram {
 public:
  /// `reference_initial` is the basis state the circuit starts from (all
  /// zeros when empty). Throws UnsupportedGate for LocalX, whose arbitrary
  /// angle has no flip-frame semantics.
  FlipFrameProgram(const LayeredCircuit& circuit, const NoiseModel& noise, Bitstring reference_initial = {});

  int qubit_count() const { return qubits_; }
  const NoiseModel& noise() const { return noise_; }
  /// Noiseless final bits.
  const Bitstring& reference_final() const { return reference_final_; }
  /// Noiseless measurement record.
  const Bitstring& reference_classical() const { return reference_classical_; }

  /// Fresh state: empty frame, first noise gap drawn from `noise_rng`.
  ShotState start_shot(SplitMix64& noise_rng) const;
  /// Runs the whole circuit once. Noise decisions come from `noise_rng` and
  /// readout decisions from `readout_rng`, one uniform per measured bit
  /// regardless of roe, so runs at different roe stay aligned.
  void run(ShotState& state, SplitMix64& noise_rng, SplitMix64& readout_rng) const;
  /// Final bits of `qubits` (all qubits when empty), with readout error `roe`.
  Bitstring read(const ShotState& state, std::span<const int> qubits, SplitMix64& readout_rng,
                 double roe) const;

 private:
  enum class Op : std::uint8_t { kNoise, kCnot, kPrep, kMeasure, kConditionalX };
  struct Instr {
    Op op;
    int a = 0;
    int b = 0;
    /// Index into conditions_ / reference_fired_ for ConditionalX.
    int index = 0;
  };

  void apply_noise(ShotState& state, SplitMix64& rng) const;

  int qubits_;
  NoiseModel noise_;
  GeometricGap gap_;
  std::vector<Instr> program_;
  std::vector<ClassicalCondition> conditions_;
  std::vector<std::uint8_t> reference_fired_;
  Bitstring reference_final_;
  Bitstring reference_classical_;
};

struct FlipFrameOptions {
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  /// Starting basis state; all zeros when empty.
  Bitstring initial;
  /// Feasibility test applied to the final readout; required.
  BitPredicate valid;
  /// Qubits read at the end; all qubits when empty.
  std::vector<int> data_qubits;
  /// Apply roe to the final readout.
  bool final_readout_error = true;
  /// Worker threads; 0 means hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

/// Samples `shots` runs; shot s draws from keyed_stream(seed, s, lane) with
/// lane 0 for noise and lane 1 for readout. When `samples` is non-null it
/// receives every final readout in shot order.
RunResult flip_frame_run(const LayeredCircuit& circuit, const NoiseModel& noise, const FlipFrameOptions& options,
                         std::vector<Bitstring>* samples = nullptr);

}  // namespace lpnc

#endif  // LPNC_FLIP_FRAME_H_
