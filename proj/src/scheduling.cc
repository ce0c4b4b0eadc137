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

#include "lpnc/scheduling.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lpnc/rng.h"

namespace lpnc {

std::vector<std::vector<QubitPair>> round_robin_rounds(int kappa, std::uint64_t seed) {
  if (kappa < 2) {
    throw std::invalid_argument("a clique schedule needs kappa >= 2, got " + std::to_string(kappa));
  }
  std::vector<int> label(static_cast<std::size_t>(kappa));
  std::iota(label.begin(), label.end(), 0);
  if (seed != 0) {
    SplitMix64 rng = keyed_stream(seed, 0x636c69717565ULL);
    for (std::size_t i = label.size(); i > 1; --i) {
      std::swap(label[i - 1], label[rng.below(i)]);
    }
  }
  // Odd kappa gets a phantom player; its partner sits out the round.
  const int m = kappa % 2 == 0 ? kappa : kappa + 1;
  const int pivot = m - 1;
  std::vector<std::vector<QubitPair>> rounds;
  for (int r = 0; r < m - 1; ++r) {
    std::vector<QubitPair> round;
    auto add = [&](int a, int b) {
      if (a < kappa && b < kappa) {
        const int qa = label[static_cast<std::size_t>(a)];
        const int qb = label[static_cast<std::size_t>(b)];
        round.emplace_back(std::min(qa, qb), std::max(qa, qb));
      }
    };
    add(r, pivot);
    for (int i = 1; i < m / 2; ++i) {
      add((r + i) % (m - 1), (r - i + (m - 1)) % (m - 1));
    }
    rounds.push_back(std::move(round));
  }
  return rounds;
}

LayeredCircuit schedule_clique_mixer(int kappa, double beta, std::uint64_t seed) {
  LayeredCircuit circuit(kappa);
  for (const auto& round : round_robin_rounds(kappa, seed)) {
    std::vector<Gate> gates;
    for (const auto& [a, b] : round) {
      gates.push_back(Gate::xy_pair(a, b, beta));
    }
    circuit.append_layer(std::move(gates));
  }
  return circuit;
}

std::vector<std::vector<int>> EdgeColoring::classes() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(color_count));
  for (std::size_t e = 0; e < color.size(); ++e) {
    out[static_cast<std::size_t>(color[e])].push_back(static_cast<int>(e));
  }
  return out;
}

namespace {

/// slot[v][c] is the neighbor joined to v by the edge of color c, or -1.
class ColorTable {
 public:
  ColorTable(int vertices, int colors)
      : slot_(static_cast<std::size_t>(vertices), std::vector<int>(static_cast<std::size_t>(colors), -1)) {}

  int colors() const { return static_cast<int>(slot_.front().size()); }
  int at(int v, int c) const { return slot_[idx(v)][idx(c)]; }
  bool is_free(int v, int c) const { return at(v, c) == -1; }

  int free_color(int v) const {
    for (int c = 0; c < colors(); ++c) {
      if (is_free(v, c)) {
        return c;
      }
    }
    throw std::logic_error("edge coloring ran out of colors");
  }

  int color_of(int u, int v) const {
    for (int c = 0; c < colors(); ++c) {
      if (at(u, c) == v) {
        return c;
      }
    }
    return -1;
  }

  void set(int u, int v, int c) {
    slot_[idx(u)][idx(c)] = v;
    slot_[idx(v)][idx(c)] = u;
  }

  void clear(int u, int v) {
    const int c = color_of(u, v);
    if (c >= 0) {
      slot_[idx(u)][idx(c)] = -1;
      slot_[idx(v)][idx(c)] = -1;
    }
  }

  /// Swaps colors a and b along the maximal path that leaves `start` on an
  /// a-colored edge.
  void flip_path(int start, int a, int b) {
    std::vector<std::pair<int, int>> path;
    int x = start;
    int c = a;
    while (!is_free(x, c)) {
      const int y = at(x, c);
      path.emplace_back(x, y);
      x = y;
      c = c == a ? b : a;
      if (path.size() > slot_.size()) {
        break;  // cycles cannot occur on a path leaving a free endpoint
      }
    }
    std::vector<int> old(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      old[i] = color_of(path[i].first, path[i].second);
      clear(path[i].first, path[i].second);
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      set(path[i].first, path[i].second, old[i] == a ? b : a);
    }
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
  std::vector<std::vector<int>> slot_;
};

EdgeColoring read_back(const Graph& graph, const ColorTable& table) {
  EdgeColoring out;
  out.color.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    const int c = table.color_of(e.u, e.v);
    if (c < 0) {
      throw std::logic_error("edge coloring left an edge uncolored");
    }
    out.color.push_back(c);
    out.color_count = std::max(out.color_count, c + 1);
  }
  return out;
}

}  // namespace

EdgeColoring schedule_edge_coloring(const Graph& graph, std::uint64_t seed) {
  if (graph.edge_count() == 0) {
    return EdgeColoring{};
  }
  const int palette = graph.max_degree() + 1;
  ColorTable table(graph.vertex_count(), palette);

  std::vector<std::size_t> order(graph.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed != 0) {
    SplitMix64 rng = keyed_stream(seed, 0x65646765636fULL);
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.below(i)]);
    }
  }
  const auto adj = graph.adjacency();

  for (std::size_t index : order) {
    const int u = graph.edges()[index].u;
    const int v = graph.edges()[index].v;

    // Maximal fan of u starting at v: each next edge (u, f) is colored with a
    // color that is free on the previous fan vertex.
    std::vector<int> fan{v};
    for (bool grown = true; grown;) {
      grown = false;
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (std::find(fan.begin(), fan.end(), w) != fan.end()) {
          continue;
        }
        const int cw = table.color_of(u, w);
        if (cw >= 0 && table.is_free(fan.back(), cw)) {
          fan.push_back(w);
          grown = true;
          break;
        }
      }
    }

    const int c = table.free_color(u);
    const int d = table.free_color(fan.back());
    // c is free on u, so the cd-path from u starts with a d edge.
    table.flip_path(u, d, c);

    // First fan vertex w with d free such that the prefix up to w is still a
    // fan after the flip.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        const int ci = table.color_of(u, fan[i]);
        if (ci < 0 || !table.is_free(fan[i - 1], ci)) {
          break;
        }
      }
      if (table.is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) {
      throw std::logic_error("Misra-Gries found no rotatable fan prefix");
    }

    // Rotate the fan prefix: edge (u, fan[i]) takes the color of (u, fan[i+1]).
    for (std::size_t i = 0; i < w; ++i) {
      const int next = table.color_of(u, fan[i + 1]);
      table.clear(u, fan[i + 1]);
      table.set(u, fan[i], next);
    }
    table.set(u, fan[w], d);
  }

  EdgeColoring out = read_back(graph, table);
  if (!is_proper_edge_coloring(graph, out)) {
    throw std::logic_error("Misra-Gries produced an improper coloring");
  }
  return out;
}

EdgeColoring color_bipartite_edges(const Graph& graph) {
  // Two-color the vertices to confirm bipartiteness.
  const auto adj = graph.adjacency();
  std::vector<int> side(static_cast<std::size_t>(graph.vertex_count()), -1);
  for (int s = 0; s < graph.vertex_count(); ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) {
      continue;
    }
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        auto& sy = side[static_cast<std::size_t>(y)];
        const int want = 1 - side[static_cast<std::size_t>(x)];
        if (sy == -1) {
          sy = want;
          stack.push_back(y);
        } else if (sy != want) {
          throw std::invalid_argument("graph is not bipartite");
        }
      }
    }
  }
  if (graph.edge_count() == 0) {
    return EdgeColoring{};
  }

  ColorTable table(graph.vertex_count(), graph.max_degree());
  for (const Edge& e : graph.edges()) {
    const int a = table.free_color(e.u);
    const int b = table.free_color(e.v);
    if (!table.is_free(e.v, a)) {
      // The a/b path from v cannot reach u in a bipartite graph, so after the
      // swap a is free at both ends.
      table.flip_path(e.v, a, b);
    }
    table.set(e.u, e.v, a);
  }
  EdgeColoring out = read_back(graph, table);
  if (!is_proper_edge_coloring(graph, out)) {
    throw std::logic_error("bipartite edge coloring produced an improper coloring");
  }
  return out;
}

bool is_proper_edge_coloring(const Graph& graph, const EdgeColoring& coloring) {
  if (coloring.color.size() != graph.edge_count()) {
    return false;
  }
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(graph.vertex_count()),
                                      std::vector<char>(static_cast<std::size_t>(coloring.color_count), 0));
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    const int c = coloring.color[i];
    if (c < 0 || c >= coloring.color_count) {
      return false;
    }
    for (int v : {graph.edges()[i].u, graph.edges()[i].v}) {
      char& slot = seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
      if (slot) {
        return false;
      }
      slot = 1;
    }
  }
  return true;
}

}  // namespace lpnc
