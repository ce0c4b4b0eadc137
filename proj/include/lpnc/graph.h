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

#ifndef LPNC_GRAPH_H_
#define LPNC_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lpnc {

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph. Edges are stored with u < v.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops, duplicate edges or vertex
  /// indices outside [0, vertex_count).
  Graph(int vertex_count, std::vector<Edge> edges, std::optional<int> regularity = std::nullopt);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::optional<int> regularity() const { return regularity_; }

  std::vector<int> degrees() const;
  int max_degree() const;
  /// Neighbor lists in edge order.
  std::vector<std::vector<int>> adjacency() const;

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<int> regularity_;
};

/// Reads a `u v` edge list, one pair per line, 0-indexed. Blank lines and
/// lines starting with '#' are skipped. The vertex count is one more than
/// the largest index unless `vertex_count` is given.
Graph read_edge_list(std::istream& in, std::optional<int> vertex_count = std::nullopt);
Graph read_edge_list_file(const std::string& path, std::optional<int> vertex_count = std::nullopt);
void write_edge_list(std::ostream& out, const Graph& graph);

/// Random simple k-regular graph on n vertices via the pairing model with
/// rejection. Deterministic per seed. Throws std::invalid_argument when n*k
/// is odd or n <= k, and std::runtime_error if `max_attempts` pairings all
/// contain loops or multi-edges.
Graph generate_regular_graph(int n, int k, std::uint64_t seed, int max_attempts = 100000);

}  // namespace lpnc

#endif  // LPNC_GRAPH_H_
