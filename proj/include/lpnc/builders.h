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

#ifndef LPNC_BUILDERS_H_
#define LPNC_BUILDERS_H_

#include <cstdint>
#include <span>

#include "lpnc/analytic.h"
#include "lpnc/circuit.h"
#include "lpnc/encodings.h"
#include "lpnc/graph.h"

namespace lpnc {

/// How many layers a phase or mixer unitary occupies.
enum class DepthRule {
  /// Closed-form depths for fully connected hardware. The scheduled layers are
  /// padded with idle (still noisy) layers up to the formula value; a schedule
  /// that needs more layers than the formula keeps its own count.
  kPaper,
  /// Exactly the layers the schedulers produce.
  kScheduler,
};

/// Whether a multi-layer unitary gets noise after each of its layers or once.
enum class NoisePer { kLayer, kBlock };

/// Phase-separation depth on fully connected hardware for max degree k:
/// k + 1 for odd k, k for even k (one-hot); four times that for two-hot,
/// whose edges need one 2-local layer and three 4-local layers.
int formula_phase_depth(int max_degree, Encoding encoding);

/// XY-mixer depth: kappa - 1 for even kappa, kappa for odd (one-hot); 4 for
/// the two-hot 4-qubit mixer.
int formula_mixer_depth(int qubits_per_vertex, Encoding encoding);

struct QaoaBlockDepth {
  int phase = 0;
  int mixer = 0;
  int per_block() const { return phase + mixer; }
};

struct XyQaoaOptions {
  DepthRule phase_rule = DepthRule::kPaper;
  DepthRule mixer_rule = DepthRule::kPaper;
  /// Seeds the edge processing order and the clique relabeling; 0 keeps the
  /// natural order.
  std::uint64_t seed = 0;
};

/// The encoding the spec implies: N = 1 is one-hot with kappa colors, N = 2
/// on 4 qubits is two-hot with 6 colors. Anything else throws
/// std::invalid_argument.
ColoringInstance instance_for(const Graph& graph, const SubsystemSpec& spec);

/// p blocks of [problem unitary exp(-i gamma_b H_P), XY mixer exp(-i beta_b H_XY)
/// on every vertex]. The problem unitary is scheduled by edge color class;
/// within a class each edge's terms are packed first-fit. The mixer is the
/// round-robin clique schedule run on all vertices in parallel. Every gate is
/// LPNC. Throws std::invalid_argument unless both angle lists have length p.
LayeredCircuit build_xy_qaoa_circuit(const Graph& graph, const SubsystemSpec& spec, int blocks,
                                     std::span<const double> betas, std::span<const double> gammas,
                                     const XyQaoaOptions& options = {});

/// Depth of one block as built by build_xy_qaoa_circuit.
QaoaBlockDepth xy_qaoa_block_depth(const Graph& graph, const SubsystemSpec& spec,
                                   const XyQaoaOptions& options = {});

enum class MixerKind {
  /// exp(-i beta sum_j X_j): one LocalX layer.
  kTransverseField,
  /// exp(-i beta H_XY) on the whole subsystem as one XYClique gate.
  kXYClique,
};

struct PenaltyQaoaOptions {
  /// Drop the first penalty unitary; it acts on a feasible basis state and
  /// only adds a phase.
  bool omit_first_penalty = true;
  NoisePer noise_per = NoisePer::kLayer;
  MixerKind mixer = MixerKind::kTransverseField;
};

/// Single-subsystem penalty QAOA: p blocks of [exp(-i gamma_b H_pen), mixer(beta_b)].
/// The penalty's ZZ pairs follow the round-robin schedule and its local Z
/// rotations are packed into free slots. `gammas` has p - 1 entries when the
/// first penalty is omitted, p otherwise. Throws std::invalid_argument for
/// alpha <= 0, p < 1 or mismatched angle lists.
LayeredCircuit build_x_qaoa_circuit(int kappa, int blocks, std::span<const double> betas,
                                    std::span<const double> gammas, double alpha,
                                    const PenaltyQaoaOptions& options = {});

}  // namespace lpnc

#endif  // LPNC_BUILDERS_H_
