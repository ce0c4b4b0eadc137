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

#include "lpnc/builders.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "lpnc/scheduling.h"

namespace lpnc {

int formula_phase_depth(int max_degree, Encoding encoding) {
  if (max_degree < 0) {
    throw std::invalid_argument("degree must be non-negative");
  }
  const int one_hot = max_degree % 2 == 1 ? max_degree + 1 : max_degree;
  return encoding == Encoding::kOneHot ? one_hot : 4 * one_hot;
}

int formula_mixer_depth(int qubits_per_vertex, Encoding encoding) {
  if (encoding == Encoding::kTwoHot) {
    return 4;
  }
  if (qubits_per_vertex < 2) {
    return 0;
  }
  return qubits_per_vertex % 2 == 0 ? qubits_per_vertex - 1 : qubits_per_vertex;
}

ColoringInstance instance_for(const Graph& graph, const SubsystemSpec& spec) {
  spec.validate();
  if (spec.particle_number == 1) {
    return ColoringInstance::one_hot(graph, spec.kappa);
  }
  if (spec.particle_number == 2 && spec.kappa == 4) {
    return ColoringInstance::two_hot(graph);
  }
  throw std::invalid_argument("XY-QAOA encodings are one-hot (N=1) or two-hot (N=2, 4 qubits); got kappa=" +
                              std::to_string(spec.kappa) + " N=" + std::to_string(spec.particle_number));
}

namespace {

Gate gate_for_term(const ZTerm& term, double gamma) {
  const double angle = gamma * term.coefficient;
  if (term.support.size() == 2) {
    return Gate::zz_pair(term.support[0], term.support[1], angle);
  }
  return Gate::z_string(term.support, angle);
}

/// Problem-unitary terms grouped by edge color class.
struct PhasePlan {
  std::vector<std::vector<ZTerm>> class_terms;
  int scheduled_depth = 0;
  int padded_depth = 0;
};

PhasePlan plan_phase(const ColoringInstance& instance, const XyQaoaOptions& options) {
  const Graph& graph = instance.graph;
  const ZPolynomial h = build_problem_hamiltonian(instance);
  const EdgeColoring coloring = schedule_edge_coloring(graph, options.seed);

  std::map<Edge, int> edge_color;
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    edge_color[graph.edges()[i]] = coloring.color[i];
  }
  PhasePlan plan;
  plan.class_terms.resize(static_cast<std::size_t>(coloring.color_count));
  const int width = instance.qubits_per_vertex();
  for (const ZTerm& t : h.terms()) {
    const int a = t.support.front() / width;
    const int b = t.support.back() / width;
    const auto it = edge_color.find(Edge{std::min(a, b), std::max(a, b)});
    if (it == edge_color.end()) {
      throw std::logic_error("problem Hamiltonian term does not sit on a graph edge");
    }
    plan.class_terms[static_cast<std::size_t>(it->second)].push_back(t);
  }
  for (const auto& terms : plan.class_terms) {
    std::vector<Gate> gates;
    for (const ZTerm& t : terms) {
      gates.push_back(gate_for_term(t, 0.0));
    }
    plan.scheduled_depth += static_cast<int>(pack_first_fit(gates).size());
  }
  plan.padded_depth = plan.scheduled_depth;
  if (options.phase_rule == DepthRule::kPaper) {
    plan.padded_depth = std::max(plan.scheduled_depth, formula_phase_depth(graph.max_degree(), instance.encoding));
  }
  return plan;
}

int mixer_depth(const ColoringInstance& instance, const XyQaoaOptions& options) {
  const int width = instance.qubits_per_vertex();
  const int scheduled = width >= 2 ? static_cast<int>(round_robin_rounds(width).size()) : 0;
  if (options.mixer_rule == DepthRule::kPaper) {
    return std::max(scheduled, formula_mixer_depth(width, instance.encoding));
  }
  return scheduled;
}

}  // namespace

QaoaBlockDepth xy_qaoa_block_depth(const Graph& graph, const SubsystemSpec& spec, const XyQaoaOptions& options) {
  const ColoringInstance instance = instance_for(graph, spec);
  return QaoaBlockDepth{plan_phase(instance, options).padded_depth, mixer_depth(instance, options)};
}

LayeredCircuit build_xy_qaoa_circuit(const Graph& graph, const SubsystemSpec& spec, int blocks,
                                     std::span<const double> betas, std::span<const double> gammas,
                                     const XyQaoaOptions& options) {
  if (blocks < 0) {
    throw std::invalid_argument("block count must be non-negative");
  }
  if (betas.size() != static_cast<std::size_t>(blocks) || gammas.size() != static_cast<std::size_t>(blocks)) {
    throw std::invalid_argument("need " + std::to_string(blocks) + " betas and gammas, got " +
                                std::to_string(betas.size()) + " and " + std::to_string(gammas.size()));
  }
  const ColoringInstance instance = instance_for(graph, spec);
  const PhasePlan phase = plan_phase(instance, options);
  const int width = instance.qubits_per_vertex();
  const auto rounds = width >= 2 ? round_robin_rounds(width, options.seed) : std::vector<std::vector<QubitPair>>{};
  const int mixer_layers = mixer_depth(instance, options);

  LayeredCircuit circuit(instance.qubit_count());
  for (int b = 0; b < blocks; ++b) {
    const double gamma = gammas[static_cast<std::size_t>(b)];
    const double beta = betas[static_cast<std::size_t>(b)];

    int phase_layers = 0;
    for (const auto& terms : phase.class_terms) {
      std::vector<Gate> gates;
      for (const ZTerm& t : terms) {
        gates.push_back(gate_for_term(t, gamma));
      }
      for (Layer& layer : pack_first_fit(gates)) {
        circuit.append_layer(std::move(layer));
        ++phase_layers;
      }
    }
    for (; phase_layers < phase.padded_depth; ++phase_layers) {
      circuit.append_layer(Layer{});
    }

    int layers = 0;
    for (const auto& round : rounds) {
      std::vector<Gate> gates;
      for (int v = 0; v < graph.vertex_count(); ++v) {
        for (const auto& [a, c] : round) {
          gates.push_back(Gate::xy_pair(instance.qubit(v, a), instance.qubit(v, c), beta));
        }
      }
      circuit.append_layer(std::move(gates));
      ++layers;
    }
    for (; layers < mixer_layers; ++layers) {
      circuit.append_layer(Layer{});
    }
  }
  return circuit;
}

LayeredCircuit build_x_qaoa_circuit(int kappa, int blocks, std::span<const double> betas,
                                    std::span<const double> gammas, double alpha,
                                    const PenaltyQaoaOptions& options) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("penalty weight alpha must be positive");
  }
  if (blocks < 1) {
    throw std::invalid_argument("penalty QAOA needs at least one block");
  }
  if (kappa < 2) {
    throw std::invalid_argument("penalty QAOA needs kappa >= 2");
  }
  const std::size_t expected_gammas = static_cast<std::size_t>(options.omit_first_penalty ? blocks - 1 : blocks);
  if (betas.size() != static_cast<std::size_t>(blocks) || gammas.size() != expected_gammas) {
    throw std::invalid_argument("need " + std::to_string(blocks) + " betas and " +
                                std::to_string(expected_gammas) + " gammas, got " +
                                std::to_string(betas.size()) + " and " + std::to_string(gammas.size()));
  }

  // Pair terms in round-robin order so the ZZ layers match the clique
  // schedule; the local Z terms then fill the idle slots.
  const ZPolynomial penalty = build_penalty_hamiltonian(kappa, 1, alpha);
  std::vector<ZTerm> ordered;
  for (const auto& round : round_robin_rounds(kappa)) {
    for (const auto& [a, b] : round) {
      for (const ZTerm& t : penalty.terms()) {
        if (t.support == std::vector<int>{a, b}) {
          ordered.push_back(t);
        }
      }
    }
  }
  for (const ZTerm& t : penalty.terms()) {
    if (t.support.size() == 1) {
      ordered.push_back(t);
    }
  }

  LayeredCircuit circuit(kappa);
  std::size_t next_gamma = 0;
  for (int b = 0; b < blocks; ++b) {
    if (b > 0 || !options.omit_first_penalty) {
      const double gamma = gammas[next_gamma++];
      std::vector<Gate> gates;
      for (const ZTerm& t : ordered) {
        gates.push_back(gate_for_term(t, gamma));
      }
      auto layers = pack_first_fit(gates);
      if (options.noise_per == NoisePer::kBlock) {
        for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
          layers[i].noisy = false;
        }
      }
      for (Layer& layer : layers) {
        circuit.append_layer(std::move(layer));
      }
    }
    const double beta = betas[static_cast<std::size_t>(b)];
    std::vector<Gate> mixer;
    if (options.mixer == MixerKind::kTransverseField) {
      for (int q = 0; q < kappa; ++q) {
        mixer.push_back(Gate::local_x(q, beta));
      }
    } else {
      std::vector<int> all(static_cast<std::size_t>(kappa));
      for (int q = 0; q < kappa; ++q) {
        all[static_cast<std::size_t>(q)] = q;
      }
      mixer.push_back(Gate::xy_clique(all, beta));
    }
    circuit.append_layer(std::move(mixer));
  }
  return circuit;
}

}  // namespace lpnc
