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

#include "lpnc/circuit.h"

#include <algorithm>
#include <stdexcept>

namespace lpnc {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kXYPair:
      return "XYPair";
    case GateKind::kZZPair:
      return "ZZPair";
    case GateKind::kZString:
      return "ZString";
    case GateKind::kXYClique:
      return "XYClique";
    case GateKind::kLocalX:
      return "LocalX";
    case GateKind::kCnot:
      return "CNOT";
    case GateKind::kPrepZero:
      return "PrepZero";
    case GateKind::kMeasureZ:
      return "MeasureZ";
    case GateKind::kConditionalX:
      return "ConditionalX";
  }
  return "?";
}

namespace {

void require_distinct(const std::vector<int>& qubits, const char* what) {
  for (std::size_t a = 0; a < qubits.size(); ++a) {
    for (std::size_t b = a + 1; b < qubits.size(); ++b) {
      if (qubits[a] == qubits[b]) {
        throw std::invalid_argument(std::string(what) + " acts twice on qubit " +
                                    std::to_string(qubits[a]));
      }
    }
  }
}

}  // namespace

Gate Gate::xy_pair(int i, int j, double beta) {
  require_distinct({i, j}, "XYPair");
  return Gate{GateKind::kXYPair, {i, j}, beta, -1, {}};
}

Gate Gate::zz_pair(int i, int j, double gamma) {
  require_distinct({i, j}, "ZZPair");
  return Gate{GateKind::kZZPair, {i, j}, gamma, -1, {}};
}

Gate Gate::z_string(std::vector<int> support, double gamma) {
  if (support.empty() || support.size() > 4) {
    throw std::invalid_argument("ZString support must hold 1 to 4 qubits");
  }
  require_distinct(support, "ZString");
  std::sort(support.begin(), support.end());
  return Gate{GateKind::kZString, std::move(support), gamma, -1, {}};
}

Gate Gate::xy_clique(std::vector<int> support, double beta) {
  if (support.size() < 2 || support.size() > 8) {
    throw std::invalid_argument("XYClique support must hold 2 to 8 qubits");
  }
  require_distinct(support, "XYClique");
  std::sort(support.begin(), support.end());
  return Gate{GateKind::kXYClique, std::move(support), beta, -1, {}};
}

Gate Gate::local_x(int i, double beta) { return Gate{GateKind::kLocalX, {i}, beta, -1, {}}; }

Gate Gate::cnot(int control, int target) {
  require_distinct({control, target}, "CNOT");
  return Gate{GateKind::kCnot, {control, target}, 0.0, -1, {}};
}

Gate Gate::prep_zero(int i) { return Gate{GateKind::kPrepZero, {i}, 0.0, -1, {}}; }

Gate Gate::measure_z(int i, int classical_bit) {
  if (classical_bit < 0) {
    throw std::invalid_argument("MeasureZ needs a non-negative classical bit");
  }
  return Gate{GateKind::kMeasureZ, {i}, 0.0, classical_bit, {}};
}

Gate Gate::conditional_x(int i, ClassicalCondition condition) {
  if (condition.bits.size() != condition.values.size() || condition.bits.empty()) {
    throw std::invalid_argument("ConditionalX condition needs one value per classical bit");
  }
  return Gate{GateKind::kConditionalX, {i}, 0.0, -1, std::move(condition)};
}

bool Gate::is_lpnc() const {
  switch (kind) {
    case GateKind::kXYPair:
    case GateKind::kZZPair:
    case GateKind::kZString:
    case GateKind::kXYClique:
      return true;
    default:
      return false;
  }
}

LayeredCircuit::LayeredCircuit(int qubit_count, int classical_bit_count)
    : qubit_count_(qubit_count), classical_bit_count_(classical_bit_count) {
  if (qubit_count < 0 || classical_bit_count < 0) {
    throw std::invalid_argument("register sizes must be non-negative");
  }
}

int LayeredCircuit::noisy_layer_count() const {
  return static_cast<int>(
      std::count_if(layers_.begin(), layers_.end(), [](const Layer& l) { return l.noisy; }));
}

std::size_t LayeredCircuit::gate_count() const {
  std::size_t n = 0;
  for (const Layer& l : layers_) {
    n += l.gates.size();
  }
  return n;
}

std::size_t LayeredCircuit::gate_count(GateKind kind) const {
  std::size_t n = 0;
  for (const Layer& l : layers_) {
    n += static_cast<std::size_t>(std::count_if(
        l.gates.begin(), l.gates.end(), [kind](const Gate& g) { return g.kind == kind; }));
  }
  return n;
}

void LayeredCircuit::append_layer(Layer layer) {
  std::vector<bool> used(static_cast<std::size_t>(qubit_count_), false);
  for (const Gate& g : layer.gates) {
    if (g.qubits.empty()) {
      throw std::invalid_argument(to_string(g.kind) + " has an empty support");
    }
    for (int q : g.qubits) {
      if (q < 0 || q >= qubit_count_) {
        throw std::invalid_argument(to_string(g.kind) + " touches qubit " + std::to_string(q) +
                                    " outside a " + std::to_string(qubit_count_) +
                                    "-qubit register");
      }
      if (used[static_cast<std::size_t>(q)]) {
        throw std::invalid_argument("layer " + std::to_string(layers_.size()) +
                                    " uses qubit " + std::to_string(q) + " twice");
      }
      used[static_cast<std::size_t>(q)] = true;
    }
    if (g.classical_bit >= classical_bit_count_) {
      throw std::invalid_argument("MeasureZ writes classical bit " +
                                  std::to_string(g.classical_bit) + " outside the register");
    }
    for (int b : g.condition.bits) {
      if (b < 0 || b >= classical_bit_count_) {
        throw std::invalid_argument("ConditionalX reads classical bit " + std::to_string(b) +
                                    " outside the register");
      }
    }
  }
  layers_.push_back(std::move(layer));
}

void LayeredCircuit::append_layer(std::vector<Gate> gates, bool noisy) {
  append_layer(Layer{std::move(gates), noisy});
}

void LayeredCircuit::append(const LayeredCircuit& other) {
  if (other.qubit_count_ != qubit_count_) {
    throw std::invalid_argument("cannot append a " + std::to_string(other.qubit_count_) +
                                "-qubit circuit to a " + std::to_string(qubit_count_) +
                                "-qubit circuit");
  }
  reserve_classical_bits(other.classical_bit_count_);
  for (const Layer& l : other.layers_) {
    append_layer(l);
  }
}

void LayeredCircuit::reserve_classical_bits(int count) {
  classical_bit_count_ = std::max(classical_bit_count_, count);
}

LayeredCircuit LayeredCircuit::prefix(int depth) const {
  if (depth < 0 || depth > this->depth()) {
    throw std::invalid_argument("prefix depth " + std::to_string(depth) + " outside [0, " +
                                std::to_string(this->depth()) + "]");
  }
  LayeredCircuit out(qubit_count_, classical_bit_count_);
  out.layers_.assign(layers_.begin(), layers_.begin() + depth);
  return out;
}

bool is_lpnc(const LayeredCircuit& circuit, int qubits_per_subsystem) {
  if (qubits_per_subsystem <= 0) {
    throw std::invalid_argument("qubits per subsystem must be positive");
  }
  for (const Layer& l : circuit.layers()) {
    for (const Gate& g : l.gates) {
      if (!g.is_lpnc()) {
        return false;
      }
      if (g.kind == GateKind::kXYPair || g.kind == GateKind::kXYClique) {
        const int block = g.qubits.front() / qubits_per_subsystem;
        for (int q : g.qubits) {
          if (q / qubits_per_subsystem != block) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::vector<Layer> pack_first_fit(const std::vector<Gate>& gates, bool noisy) {
  std::vector<Layer> layers;
  std::vector<std::vector<int>> occupied;
  for (const Gate& g : gates) {
    std::size_t slot = 0;
    for (; slot < layers.size(); ++slot) {
      const auto& used = occupied[slot];
      const bool clash = std::any_of(g.qubits.begin(), g.qubits.end(), [&](int q) {
        return std::find(used.begin(), used.end(), q) != used.end();
      });
      if (!clash) {
        break;
      }
    }
    if (slot == layers.size()) {
      layers.push_back(Layer{{}, noisy});
      occupied.emplace_back();
    }
    layers[slot].gates.push_back(g);
    occupied[slot].insert(occupied[slot].end(), g.qubits.begin(), g.qubits.end());
  }
  return layers;
}

}  // namespace lpnc
