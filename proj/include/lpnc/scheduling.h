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

#ifndef LPNC_SCHEDULING_H_
#define LPNC_SCHEDULING_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "lpnc/circuit.h"
#include "lpnc/graph.h"

namespace lpnc {

using QubitPair = std::pair<int, int>;

/// Rounds of a round-robin tournament on `kappa` players (circle method).
/// Every unordered pair appears in exactly one round; no player appears twice
/// in a round. Uses kappa - 1 rounds for even kappa and kappa for odd kappa.
/// A nonzero seed relabels the players with a seeded permutation.
std::vector<std::vector<QubitPair>> round_robin_rounds(int kappa, std::uint64_t seed = 0);

/// One XYPair per unordered pair of `kappa` qubits, one layer per
/// round-robin round. Throws std::invalid_argument for kappa < 2.
LayeredCircuit schedule_clique_mixer(int kappa, double beta, std::uint64_t seed = 0);

/// Layer (color) of every edge, indexed like Graph::edges().
struct EdgeColoring {
  std::vector<int> color;
  int color_count = 0;

  /// Edge indices grouped by color, colors in increasing order.
  std::vector<std::vector<int>> classes() const;
};

/// Proper edge coloring with at most max_degree + 1 colors (Misra-Gries fan
/// rotation). Edges are processed in input order, or in a seeded permutation
/// of it when seed != 0.
EdgeColoring schedule_edge_coloring(const Graph& graph, std::uint64_t seed = 0);

/// Proper edge coloring of a bipartite graph with exactly max_degree colors
/// (alternating-path recoloring). Throws std::invalid_argument if the graph
/// has an odd cycle.
EdgeColoring color_bipartite_edges(const Graph& graph);

/// True iff every edge has a color in [0, color_count) and no two edges
/// sharing a vertex share a color.
bool is_proper_edge_coloring(const Graph& graph, const EdgeColoring& coloring);

}  // namespace lpnc

#endif  // LPNC_SCHEDULING_H_
