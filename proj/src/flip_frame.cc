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

#include "lpnc/flip_frame.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lpnc/errors.h"
#include "lpnc/parallel.h"

namespace lpnc {

RunResult RunResult::from_counts(std::uint64_t hits, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument("a sampled estimate needs at least one shot");
  }
  RunResult r;
  r.shots = shots;
  r.seed = seed;
  r.estimate = static_cast<double>(hits) / static_cast<double>(shots);
  r.standard_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(shots));
  return r;
}

BitPredicate weight_predicate(const SubsystemSpec& spec) {
  spec.validate();
  return [kappa = spec.kappa, n = spec.particle_number, blocks = spec.subsystems](std::span<const std::uint8_t> bits) {
    if (bits.size() != static_cast<std::size_t>(kappa) * static_cast<std::size_t>(blocks)) {
      return false;
    }
    for (int b = 0; b < blocks; ++b) {
      int weight = 0;
      for (int j = 0; j < kappa; ++j) {
        weight += bits[static_cast<std::size_t>(b * kappa + j)];
      }
      if (weight != n) {
        return false;
      }
    }
    return true;
  };
}

Bitstring lowest_feasible_bitstring(const SubsystemSpec& spec) {
  spec.validate();
  Bitstring bits;
  for (int b = 0; b < spec.subsystems; ++b) {
    for (int j = 0; j < spec.kappa; ++j) {
      bits.push_back(j >= spec.kappa - spec.particle_number ? 1 : 0);
    }
  }
  return bits;
}

namespace {

bool condition_holds(const ClassicalCondition& cond, const Bitstring& classical) {
  for (std::size_t i = 0; i < cond.bits.size(); ++i) {
    if (classical[static_cast<std::size_t>(cond.bits[i])] != cond.values[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

FlipFrameProgram::FlipFrameProgram(const LayeredCircuit& circuit, const NoiseModel& noise, Bitstring reference_initial)
    : qubits_(circuit.qubit_count()), noise_(noise), gap_(noise.flip_probability()) {
  noise_.validate();
  if (reference_initial.empty()) {
    reference_initial.assign(static_cast<std::size_t>(qubits_), 0);
  }
  if (reference_initial.size() != static_cast<std::size_t>(qubits_)) {
    throw std::invalid_argument("initial bitstring has " + std::to_string(reference_initial.size()) +
                                " bits for a " + std::to_string(qubits_) + "-qubit circuit");
  }
  Bitstring ref = std::move(reference_initial);
  reference_classical_.assign(static_cast<std::size_t>(circuit.classical_bit_count()), 0);
  auto at = [](Bitstring& bits, int q) -> std::uint8_t& { return bits[static_cast<std::size_t>(q)]; };

  for (const Layer& layer : circuit.layers()) {
    for (const Gate& g : layer.gates) {
      switch (g.kind) {
        case GateKind::kXYPair:
        case GateKind::kZZPair:
        case GateKind::kZString:
        case GateKind::kXYClique:
          break;
        case GateKind::kLocalX:
          throw UnsupportedGate("flip-frame engine cannot run LocalX; use the dense engine");
        case GateKind::kCnot:
          at(ref, g.qubits[1]) ^= at(ref, g.qubits[0]);
          program_.push_back({Op::kCnot, g.qubits[0], g.qubits[1], 0});
          break;
        case GateKind::kPrepZero:
          at(ref, g.qubits[0]) = 0;
          program_.push_back({Op::kPrep, g.qubits[0], 0, 0});
          break;
        case GateKind::kMeasureZ:
          at(reference_classical_, g.classical_bit) = at(ref, g.qubits[0]);
          program_.push_back({Op::kMeasure, g.qubits[0], g.classical_bit, 0});
          break;
        case GateKind::kConditionalX: {
          const bool fired = condition_holds(g.condition, reference_classical_);
          at(ref, g.qubits[0]) ^= fired ? 1 : 0;
          program_.push_back({Op::kConditionalX, g.qubits[0], 0, static_cast<int>(conditions_.size())});
          conditions_.push_back(g.condition);
          reference_fired_.push_back(fired ? 1 : 0);
          break;
        }
      }
    }
    if (layer.noisy) {
      program_.push_back({Op::kNoise, 0, 0, 0});
    }
  }
  reference_final_ = std::move(ref);
}

ShotState FlipFrameProgram::start_shot(SplitMix64& noise_rng) const {
  ShotState state;
  state.frame = FlipFrame(qubits_);
  state.classical = reference_classical_;
  state.gap = gap_(noise_rng);
  return state;
}

void FlipFrameProgram::apply_noise(ShotState& state, SplitMix64& rng) const {
  // Sites of this layer are the qubits 0..Q-1; the gap carries over between
  // layers, which is exact because the geometric distribution is memoryless.
  std::uint64_t pos = 0;
  const auto sites = static_cast<std::uint64_t>(qubits_);
  while (state.gap < sites - pos) {
    pos += state.gap;
    state.frame.toggle(static_cast<int>(pos));
    ++pos;
    state.gap = gap_(rng);
  }
  if (state.gap != UINT64_MAX) {
    state.gap -= sites - pos;
  }
}

void FlipFrameProgram::run(ShotState& state, SplitMix64& noise_rng, SplitMix64& readout_rng) const {
  if (state.frame.x_mask.size() != FlipFrame(qubits_).x_mask.size()) {
    throw std::invalid_argument("shot state does not match the program's register");
  }
  if (state.classical.size() < reference_classical_.size()) {
    state.classical.resize(reference_classical_.size(), 0);
  }
  for (const Instr& in : program_) {
    switch (in.op) {
      case Op::kNoise:
        apply_noise(state, noise_rng);
        break;
      case Op::kCnot:
        if (state.frame.get(in.a)) {
          state.frame.toggle(in.b);
        }
        break;
      case Op::kPrep:
        state.frame.clear(in.a);
        break;
      case Op::kMeasure: {
        const bool readout_flip = readout_rng.uniform() < noise_.roe;
        state.classical[static_cast<std::size_t>(in.b)] = static_cast<std::uint8_t>(
            reference_classical_[static_cast<std::size_t>(in.b)] ^ (state.frame.get(in.a) ? 1 : 0) ^
            (readout_flip ? 1 : 0));
        break;
      }
      case Op::kConditionalX: {
        const bool fired = condition_holds(conditions_[static_cast<std::size_t>(in.index)], state.classical);
        if (fired != static_cast<bool>(reference_fired_[static_cast<std::size_t>(in.index)])) {
          state.frame.toggle(in.a);
        }
        break;
      }
    }
  }
}

Bitstring FlipFrameProgram::read(const ShotState& state, std::span<const int> qubits, SplitMix64& readout_rng,
                                 double roe) const {
  Bitstring out;
  auto read_one = [&](int q) {
    const bool readout_flip = readout_rng.uniform() < roe;
    out.push_back(static_cast<std::uint8_t>(reference_final_[static_cast<std::size_t>(q)] ^
                                            (state.frame.get(q) ? 1 : 0) ^ (readout_flip ? 1 : 0)));
  };
  if (qubits.empty()) {
    out.reserve(static_cast<std::size_t>(qubits_));
    for (int q = 0; q < qubits_; ++q) {
      read_one(q);
    }
  } else {
    out.reserve(qubits.size());
    for (int q : qubits) {
      read_one(q);
    }
  }
  return out;
}

RunResult flip_frame_run(const LayeredCircuit& circuit, const NoiseModel& noise, const FlipFrameOptions& options,
                         std::vector<Bitstring>* samples) {
  if (!options.valid) {
    throw std::invalid_argument("flip_frame_run needs a feasibility predicate");
  }
  const FlipFrameProgram program(circuit, noise, options.initial);
  const double roe = options.final_readout_error ? noise.roe : 0.0;
  if (samples != nullptr) {
    samples->assign(options.shots, Bitstring{});
  }
  const auto counts = parallel_chunks(options.shots, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      SplitMix64 noise_rng = keyed_stream(options.seed, s, 0);
      SplitMix64 readout_rng = keyed_stream(options.seed, s, 1);
      ShotState state = program.start_shot(noise_rng);
      program.run(state, noise_rng, readout_rng);
      Bitstring bits = program.read(state, options.data_qubits, readout_rng, roe);
      hits += options.valid(bits) ? 1 : 0;
      if (samples != nullptr) {
        (*samples)[s] = std::move(bits);
      }
    }
    return hits;
  });
  return RunResult::from_counts(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}), options.shots,
                                options.seed);
}

}  // namespace lpnc
