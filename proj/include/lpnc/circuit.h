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

#ifndef LPNC_CIRCUIT_H_
#define LPNC_CIRCUIT_H_

#include <cstdint>
#include <string>
#include <vector>

namespace lpnc {

/// Gate kinds and their unitaries (angles in radians):
///   XYPair(i, j, b)   exp(-i b (X_i X_j + Y_i Y_j) / 2)
///   ZZPair(i, j, g)   exp(-i g Z_i Z_j)
///   ZString(S, g)     exp(-i g prod_{q in S} Z_q),   1 <= |S| <= 4
///   XYClique(S, b)    exp(-i b sum_{i<j in S} (X_i X_j + Y_i Y_j) / 2)
///   LocalX(i, b)      exp(-i b X_i)
///   CNOT(c, t), PrepZero(i), MeasureZ(i -> bit), ConditionalX(i | bits == values)
enum class GateKind {
  kXYPair,
  kZZPair,
  kZString,
  kXYClique,
  kLocalX,
  kCnot,
  kPrepZero,
  kMeasureZ,
  kConditionalX,
};

std::string to_string(GateKind kind);

/// Measured classical bits that must all match for a ConditionalX to fire.
struct ClassicalCondition {
  std::vector<int> bits;
  std::vector<std::uint8_t> values;

  friend bool operator==(const ClassicalCondition&, const ClassicalCondition&) = default;
};

struct Gate {
  GateKind kind = GateKind::kZString;
  /// Touched qubits. CNOT stores {control, target}.
  std::vector<int> qubits;
  double angle = 0.0;
  /// Destination bit of a MeasureZ; -1 otherwise.
  int classical_bit = -1;
  ClassicalCondition condition;

  static Gate xy_pair(int i, int j, double beta);
  static Gate zz_pair(int i, int j, double gamma);
  static Gate z_string(std::vector<int> support, double gamma);
  static Gate xy_clique(std::vector<int> support, double beta);
  static Gate local_x(int i, double beta);
  static Gate cnot(int control, int target);
  static Gate prep_zero(int i);
  static Gate measure_z(int i, int classical_bit);
  static Gate conditional_x(int i, ClassicalCondition condition);

  /// True for gates that commute with the Hamming-weight operator of every
  /// qubit subset containing their support: XYPair, ZZPair, ZString and
  /// XYClique. An XYPair or XYClique spanning two subsystems still breaks the
  /// local count; see is_lpnc(const LayeredCircuit&, int).
  bool is_lpnc() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// A set of gates with pairwise-disjoint supports, optionally followed by
/// one application of the noise channel on every qubit.
struct Layer {
  std::vector<Gate> gates;
  bool noisy = true;

  friend bool operator==(const Layer&, const Layer&) = default;
};

class LayeredCircuit {
 public:
  explicit LayeredCircuit(int qubit_count = 0, int classical_bit_count = 0);

  int qubit_count() const { return qubit_count_; }
  int classical_bit_count() const { return classical_bit_count_; }
  const std::vector<Layer>& layers() const { return layers_; }

  /// Number of layers; the d consumed by the analytic formulas when every
  /// layer is noisy.
  int depth() const { return static_cast<int>(layers_.size()); }
  int noisy_layer_count() const;
  std::size_t gate_count() const;
  std::size_t gate_count(GateKind kind) const;

  /// Validates supports (range, distinctness, disjointness) and classical bit
  /// indices, then appends. Throws std::invalid_argument on violation.
  void append_layer(Layer layer);
  void append_layer(std::vector<Gate> gates, bool noisy = true);
  /// Appends every layer of `other`, which must have the same qubit count.
  void append(const LayeredCircuit& other);
  /// Grows the classical register.
  void reserve_classical_bits(int count);

  /// First `depth` layers.
  LayeredCircuit prefix(int depth) const;

  friend bool operator==(const LayeredCircuit&, const LayeredCircuit&) = default;

 private:
  int qubit_count_;
  int classical_bit_count_;
  std::vector<Layer> layers_;
};

/// Every gate is LPNC-flagged and no XYPair/XYClique spans two consecutive
/// blocks of `qubits_per_subsystem` qubits.
bool is_lpnc(const LayeredCircuit& circuit, int qubits_per_subsystem);

/// Packs gates into layers first-fit: each gate, in the given order, lands in
/// the earliest layer where all of its qubits are still free. Reorders gates
/// on shared qubits, so only use it for mutually commuting gates.
std::vector<Layer> pack_first_fit(const std::vector<Gate>& gates, bool noisy = true);

}  // namespace lpnc

#endif  // LPNC_CIRCUIT_H_
