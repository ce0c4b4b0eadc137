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

#include "lpnc/qec.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lpnc/errors.h"
#include "lpnc/graph.h"
#include "lpnc/parallel.h"
#include "lpnc/scheduling.h"

namespace lpnc {

const std::array<std::vector<int>, 3>& CodeLayout::checks() {
  static const std::array<std::vector<int>, 3> kChecks = {
      std::vector<int>{0, 1, 2, 3}, std::vector<int>{2, 3, 4, 5}, std::vector<int>{0, 2, 4}};
  return kChecks;
}

const std::array<Bitstring, 3>& CodeLayout::codewords() {
  static const std::array<Bitstring, 3> kCodewords = {
      Bitstring{1, 1, 0, 0, 0, 0}, Bitstring{0, 0, 1, 1, 0, 0}, Bitstring{0, 0, 0, 0, 1, 1}};
  return kCodewords;
}

Bitstring encode(std::span<const std::uint8_t> logical) {
  if (logical.size() != 3 || logical[0] + logical[1] + logical[2] != 1) {
    throw InfeasibleAssignment("only one-hot 3-bit strings can be encoded");
  }
  Bitstring out;
  for (std::uint8_t b : logical) {
    out.push_back(b);
    out.push_back(b);
  }
  return out;
}

bool is_codeword(std::span<const std::uint8_t> data) {
  for (const Bitstring& c : CodeLayout::codewords()) {
    if (std::equal(data.begin(), data.end(), c.begin(), c.end())) {
      return true;
    }
  }
  return false;
}

bool is_near_codeword(std::span<const std::uint8_t> data) {
  if (data.size() != static_cast<std::size_t>(CodeLayout::kDataQubits)) {
    return false;
  }
  for (const Bitstring& c : CodeLayout::codewords()) {
    int distance = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      distance += data[i] != c[i] ? 1 : 0;
    }
    if (distance <= 1) {
      return true;
    }
  }
  return false;
}

std::array<std::uint8_t, 3> check_parities(std::span<const std::uint8_t> data) {
  if (data.size() < static_cast<std::size_t>(CodeLayout::kDataQubits)) {
    throw std::invalid_argument("check parities need six data bits");
  }
  std::array<std::uint8_t, 3> out{};
  for (std::size_t j = 0; j < 3; ++j) {
    for (int q : CodeLayout::checks()[j]) {
      out[j] ^= data[static_cast<std::size_t>(q)];
    }
  }
  return out;
}

SyndromeTable::SyndromeTable(Violation baseline, std::array<Recovery, 8> actions)
    : baseline_(baseline), actions_(actions) {}

Violation SyndromeTable::violation(const std::array<std::uint8_t, 3>& measured) const {
  return {static_cast<std::uint8_t>(measured[0] ^ baseline_[0]), static_cast<std::uint8_t>(measured[1] ^ baseline_[1]),
          static_cast<std::uint8_t>(measured[2] ^ baseline_[2])};
}

SyndromeTable derive_syndrome_table() {
  const auto& words = CodeLayout::codewords();
  const Violation baseline = check_parities(words[0]);
  for (const Bitstring& w : words) {
    if (check_parities(w) != baseline) {
      throw std::logic_error("codewords disagree on the check parities");
    }
  }
  std::array<Recovery, 8> actions;
  std::array<bool, 8> assigned{};
  actions[0] = {RecoveryKind::kIdentity, -1};
  assigned[0] = true;
  for (int q = 0; q < CodeLayout::kDataQubits; ++q) {
    std::size_t slot = 8;
    for (const Bitstring& w : words) {
      Bitstring flipped = w;
      flipped[static_cast<std::size_t>(q)] ^= 1;
      const auto parities = check_parities(flipped);
      const Violation v = {static_cast<std::uint8_t>(parities[0] ^ baseline[0]),
                           static_cast<std::uint8_t>(parities[1] ^ baseline[1]),
                           static_cast<std::uint8_t>(parities[2] ^ baseline[2])};
      const std::size_t here = SyndromeTable::index(v);
      if (slot != 8 && slot != here) {
        throw std::logic_error("violation of a flip on qubit " + std::to_string(q) + " depends on the codeword");
      }
      slot = here;
    }
    if (assigned[slot]) {
      throw std::logic_error("two single flips share a violation pattern");
    }
    actions[slot] = {RecoveryKind::kFlip, q};
    assigned[slot] = true;
  }
  for (std::size_t i = 0; i < 8; ++i) {
    if (!assigned[i]) {
      actions[i] = {RecoveryKind::kNotDecodable, -1};
    }
  }
  return SyndromeTable(baseline, actions);
}

LayeredCircuit build_syndrome_circuit(const SyndromeCircuitOptions& options) {
  LayeredCircuit circuit(CodeLayout::kQubits, 3);
  if (options.reset_ancillas) {
    std::vector<Gate> prep;
    for (int j = 0; j < CodeLayout::kAncillas; ++j) {
      prep.push_back(Gate::prep_zero(CodeLayout::ancilla(j)));
    }
    circuit.append_layer(std::move(prep), false);
  }

  std::vector<Edge> edges;
  for (int j = 0; j < 3; ++j) {
    for (int q : CodeLayout::checks()[static_cast<std::size_t>(j)]) {
      edges.push_back({q, CodeLayout::ancilla(j)});
    }
  }
  const Graph graph(CodeLayout::kQubits, edges);
  const EdgeColoring coloring = color_bipartite_edges(graph);
  for (const auto& cls : coloring.classes()) {
    std::vector<Gate> layer;
    for (int e : cls) {
      const Edge& edge = graph.edges()[static_cast<std::size_t>(e)];
      layer.push_back(Gate::cnot(edge.u, edge.v));
    }
    circuit.append_layer(std::move(layer));
  }

  std::vector<Gate> measure;
  for (int j = 0; j < CodeLayout::kAncillas; ++j) {
    measure.push_back(Gate::measure_z(CodeLayout::ancilla(j), j));
  }
  circuit.append_layer(std::move(measure), false);

  const SyndromeTable table = derive_syndrome_table();
  std::vector<Gate> recovery;
  for (std::size_t i = 0; i < 8; ++i) {
    const Violation v = {static_cast<std::uint8_t>((i >> 2) & 1), static_cast<std::uint8_t>((i >> 1) & 1),
                         static_cast<std::uint8_t>(i & 1)};
    const Recovery& r = table.lookup(v);
    if (r.kind != RecoveryKind::kFlip) {
      continue;
    }
    const auto measured = table.violation(v);
    recovery.push_back(Gate::conditional_x(r.qubit, {{0, 1, 2}, {measured[0], measured[1], measured[2]}}));
  }
  circuit.append_layer(std::move(recovery));
  return circuit;
}

int cnot_layer_count(const LayeredCircuit& circuit) {
  int count = 0;
  for (const Layer& layer : circuit.layers()) {
    for (const Gate& g : layer.gates) {
      if (g.kind == GateKind::kCnot) {
        ++count;
        break;
      }
    }
  }
  return count;
}

LayeredCircuit idle_circuit(int qubits, int depth) {
  if (depth < 0) {
    throw std::invalid_argument("depth must be non-negative");
  }
  LayeredCircuit circuit(qubits);
  for (int d = 0; d < depth; ++d) {
    circuit.append_layer(std::vector<Gate>{}, true);
  }
  return circuit;
}

namespace {

Bitstring logical_state(int logical) {
  if (logical < 0 || logical > 2) {
    throw std::invalid_argument("logical color must be 0, 1 or 2");
  }
  Bitstring bits(3, 0);
  bits[static_cast<std::size_t>(logical)] = 1;
  return bits;
}

Bitstring corrected_initial(int logical) {
  Bitstring bits = encode(logical_state(logical));
  bits.resize(CodeLayout::kQubits, 0);
  return bits;
}

const std::vector<int>& data_qubits() {
  static const std::vector<int> kData = {0, 1, 2, 3, 4, 5};
  return kData;
}

bool data_valid(const Bitstring& data, bool lenient) { return lenient ? is_near_codeword(data) : is_codeword(data); }

bool one_hot(const Bitstring& bits) { return bits[0] + bits[1] + bits[2] == 1; }

struct Tally {
  std::uint64_t hits = 0;
  std::uint64_t nd = 0;
};

bool not_decodable(const SyndromeTable& table, const ShotState& state) {
  const Violation v = table.violation({state.classical[0], state.classical[1], state.classical[2]});
  return table.lookup(v).kind == RecoveryKind::kNotDecodable;
}

}  // namespace

QecResult run_corrected_segment(int prior_depth, const NoiseModel& noise, const QecRunOptions& options) {
  LayeredCircuit circuit = idle_circuit(CodeLayout::kQubits, prior_depth);
  circuit.reserve_classical_bits(3);
  circuit.append(build_syndrome_circuit({options.reset_ancillas}));
  const FlipFrameProgram program(circuit, noise, corrected_initial(options.logical));
  const SyndromeTable table = derive_syndrome_table();

  const auto tallies = parallel_chunks(options.shots, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    Tally t;
    for (std::uint64_t s = begin; s < end; ++s) {
      SplitMix64 noise_rng = keyed_stream(options.seed, s, 0);
      SplitMix64 readout_rng = keyed_stream(options.seed, s, 1);
      ShotState state = program.start_shot(noise_rng);
      program.run(state, noise_rng, readout_rng);
      t.nd += not_decodable(table, state) ? 1 : 0;
      t.hits += data_valid(program.read(state, data_qubits(), readout_rng, noise.roe), options.lenient) ? 1 : 0;
    }
    return t;
  });
  Tally total;
  for (const Tally& t : tallies) {
    total.hits += t.hits;
    total.nd += t.nd;
  }
  QecResult out;
  out.result = RunResult::from_counts(total.hits, options.shots, options.seed);
  out.nd_rate = static_cast<double>(total.nd) / static_cast<double>(options.shots);
  out.layers = circuit.noisy_layer_count();
  return out;
}

QecResult run_uncorrected_segment(int depth, const NoiseModel& noise, const QecRunOptions& options) {
  FlipFrameOptions ff;
  ff.shots = options.shots;
  ff.seed = options.seed;
  ff.initial = logical_state(options.logical);
  ff.valid = weight_predicate({3, 1, 1});
  ff.threads = options.threads;
  QecResult out;
  out.result = flip_frame_run(idle_circuit(3, depth), noise, ff);
  out.layers = depth;
  return out;
}

std::vector<InterleavedPoint> run_interleaved(const NoiseModel& noise, const InterleavedOptions& options,
                                              bool corrected) {
  if (options.vertices < 1 || options.block_depth < 0 || options.max_blocks < 0 || options.correction_period < 1) {
    throw std::invalid_argument("interleaved run needs vertices >= 1, block_depth >= 0, max_blocks >= 0 and "
                                "correction_period >= 1");
  }
  const QecRunOptions& run = options.run;
  const int qubits = corrected ? CodeLayout::kQubits : 3;
  const Bitstring initial = corrected ? corrected_initial(run.logical) : logical_state(run.logical);
  const FlipFrameProgram block(idle_circuit(qubits, options.block_depth), noise, initial);
  const LayeredCircuit syndrome_circuit = build_syndrome_circuit({true});
  const FlipFrameProgram syndrome(corrected ? syndrome_circuit : idle_circuit(qubits, 0), noise, initial);
  const SyndromeTable table = derive_syndrome_table();
  const std::vector<int> read_qubits = corrected ? data_qubits() : std::vector<int>{0, 1, 2};
  const auto points = static_cast<std::size_t>(options.max_blocks) + 1;
  const auto vertices = static_cast<std::uint64_t>(options.vertices);

  struct Counts {
    std::vector<std::uint64_t> hits;
    std::vector<std::uint64_t> nd;
  };
  const auto chunks = parallel_chunks(run.shots, run.threads, [&](std::uint64_t begin, std::uint64_t end) {
    Counts c{std::vector<std::uint64_t>(points, 0), std::vector<std::uint64_t>(points, 0)};
    for (std::uint64_t s = begin; s < end; ++s) {
      for (std::uint64_t v = 0; v < vertices; ++v) {
        SplitMix64 noise_rng = keyed_stream(run.seed, s * vertices + v, 0);
        SplitMix64 readout_rng = keyed_stream(run.seed, s * vertices + v, 1);
        ShotState state = block.start_shot(noise_rng);
        std::uint64_t nd = 0;
        for (std::size_t b = 0; b < points; ++b) {
          if (b > 0) {
            block.run(state, noise_rng, readout_rng);
            if (corrected && b % static_cast<std::size_t>(options.correction_period) == 0) {
              syndrome.run(state, noise_rng, readout_rng);
              nd += not_decodable(table, state) ? 1 : 0;
            }
          }
          const Bitstring bits = block.read(state, read_qubits, readout_rng, noise.roe);
          const bool ok = corrected ? data_valid(bits, run.lenient) : one_hot(bits);
          c.hits[b] += ok ? 1 : 0;
          c.nd[b] += nd;
        }
      }
    }
    return c;
  });

  const int syndrome_layers = syndrome_circuit.noisy_layer_count();
  std::vector<InterleavedPoint> out(points);
  const double samples = static_cast<double>(run.shots * vertices);
  for (std::size_t b = 0; b < points; ++b) {
    std::uint64_t hits = 0;
    std::uint64_t nd = 0;
    for (const Counts& c : chunks) {
      hits += c.hits[b];
      nd += c.nd[b];
    }
    InterleavedPoint& p = out[b];
    const int corrections = corrected ? static_cast<int>(b) / options.correction_period : 0;
    p.blocks = static_cast<int>(b);
    p.layers = static_cast<int>(b) * options.block_depth + corrections * syndrome_layers;
    p.vertex_estimate = static_cast<double>(hits) / samples;
    p.vertex_stderr = std::sqrt(p.vertex_estimate * (1.0 - p.vertex_estimate) / samples);
    p.total.shots = run.shots;
    p.total.seed = run.seed;
    p.total.estimate = std::pow(p.vertex_estimate, options.vertices);
    p.total.standard_error =
        options.vertices * std::pow(p.vertex_estimate, options.vertices - 1) * p.vertex_stderr;
    p.nd_rate = corrections > 0 ? static_cast<double>(nd) / (samples * corrections) : 0.0;
  }
  return out;
}

}  // namespace lpnc
