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

#include "lpnc/graph.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lpnc/rng.h"

namespace lpnc {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::optional<int> regularity)
    : vertex_count_(vertex_count), edges_(std::move(edges)), regularity_(regularity) {
  if (vertex_count_ < 0) {
    throw std::invalid_argument("vertex count must be non-negative");
  }
  std::set<Edge> seen;
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") references a vertex outside [0, " +
                                  std::to_string(vertex_count_) + ")");
    }
    if (e.u > e.v) {
      std::swap(e.u, e.v);
    }
    if (!seen.insert(e).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ")");
    }
  }
  if (regularity_) {
    for (int d : degrees()) {
      if (d != *regularity_) {
        throw std::invalid_argument("graph tagged " + std::to_string(*regularity_) +
                                    "-regular has a vertex of degree " + std::to_string(d));
      }
    }
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
  for (const Edge& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

int Graph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count_));
  for (const Edge& e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges), n > 0 ? std::optional<int>(n - 1) : std::nullopt);
}

Graph Graph::cycle(int n) {
  if (n < 3) {
    throw std::invalid_argument("a cycle needs at least 3 vertices");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
  }
  return Graph(n, std::move(edges), 2);
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
  }
  return Graph(n, std::move(edges));
}

Graph read_edge_list(std::istream& in, std::optional<int> vertex_count) {
  std::vector<Edge> edges;
  int max_index = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream fields(line);
    Edge e;
    std::string extra;
    if (!(fields >> e.u >> e.v) || (fields >> extra)) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected `u v`, got `" + line + "`");
    }
    max_index = std::max({max_index, e.u, e.v});
    edges.push_back(e);
  }
  return Graph(vertex_count.value_or(max_index + 1), std::move(edges));
}

Graph read_edge_list_file(const std::string& path, std::optional<int> vertex_count) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open graph file " + path);
  }
  try {
    return read_edge_list(in, vertex_count);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  for (const Edge& e : graph.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
}

Graph generate_regular_graph(int n, int k, std::uint64_t seed, int max_attempts) {
  if (n <= 0 || k < 0) {
    throw std::invalid_argument("regular graph needs n >= 1 and k >= 0");
  }
  if ((static_cast<long long>(n) * k) % 2 != 0) {
    throw std::invalid_argument("no " + std::to_string(k) + "-regular graph on " +
                                std::to_string(n) + " vertices: n*k is odd");
  }
  if (n <= k) {
    throw std::invalid_argument("a simple " + std::to_string(k) + "-regular graph needs n > k");
  }
  SplitMix64 rng = keyed_stream(seed, 0x67726170680aULL);
  std::vector<int> points(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      points[i] = static_cast<int>(i) / k;
    }
    // Fisher-Yates; pairs (points[2i], points[2i+1]) form the matching.
    for (std::size_t i = points.size(); i > 1; --i) {
      std::swap(points[i - 1], points[rng.below(i)]);
    }
    std::set<Edge> seen;
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      Edge e{std::min(points[i], points[i + 1]), std::max(points[i], points[i + 1])};
      if (e.u == e.v || !seen.insert(e).second) {
        simple = false;
        break;
      }
      edges.push_back(e);
    }
    if (simple) {
      std::sort(edges.begin(), edges.end());
      return Graph(n, std::move(edges), k);
    }
  }
  throw std::runtime_error("pairing model found no simple " + std::to_string(k) +
                           "-regular graph on " + std::to_string(n) + " vertices after " +
                           std::to_string(max_attempts) + " attempts");
}

}  // namespace lpnc
