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

#ifndef LPNC_ENCODINGS_H_
#define LPNC_ENCODINGS_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "lpnc/graph.h"

namespace lpnc {

/// One computational-basis bit per entry, 0 or 1.
using Bitstring = std::vector<std::uint8_t>;

/// Z-spin of qubit q: +1 for bit 0, -1 for bit 1.
inline int spin(std::span<const std::uint8_t> bits, int q) {
  return bits[static_cast<std::size_t>(q)] ? -1 : 1;
}

struct ZTerm {
  double coefficient = 0.0;
  /// Sorted, distinct qubit indices.
  std::vector<int> support;
};

/// Diagonal Hamiltonian offset + sum_t c_t prod_{q in S_t} Z_q.
class ZPolynomial {
 public:
  explicit ZPolynomial(int qubit_count = 0, double offset = 0.0);

  int qubit_count() const { return qubit_count_; }
  double offset() const { return offset_; }
  const std::vector<ZTerm>& terms() const { return terms_; }

  /// Adds c * prod Z over `support`. A support already present has its
  /// coefficient summed; an empty support adds to the offset. Throws
  /// std::invalid_argument on out-of-range or repeated qubits.
  void add_term(double coefficient, std::vector<int> support);
  void add_offset(double value) { offset_ += value; }
  /// Multiplies every coefficient and the offset.
  ZPolynomial scaled(double factor) const;
  /// Mutable access for tests that corrupt a coefficient on purpose.
  std::vector<ZTerm>& mutable_terms() { return terms_; }

  double evaluate(std::span<const std::uint8_t> bits) const;

  /// Text form: a header `offset <value> qubits <n>`, then one `coeff q1 q2 ...`
  /// line per term. Coefficients use 17 significant digits.
  void write(std::ostream& out) const;
  static ZPolynomial read(std::istream& in);

 private:
  int qubit_count_;
  double offset_;
  std::vector<ZTerm> terms_;
};

enum class Encoding {
  /// kappa qubits per vertex, one of them set.
  kOneHot,
  /// 4 qubits per vertex, two of them set; six colors.
  kTwoHot,
};

/// Max-kappa-Colorable-Subgraph instance. Vertex v owns qubits
/// [v * qubits_per_vertex(), (v + 1) * qubits_per_vertex()).
struct ColoringInstance {
  Graph graph;
  int colors = 3;
  Encoding encoding = Encoding::kOneHot;

  /// Throws std::invalid_argument unless colors >= 1 and, for kTwoHot,
  /// colors == C(4, 2) == 6.
  void validate() const;
  int qubits_per_vertex() const { return encoding == Encoding::kOneHot ? colors : 4; }
  int particle_number() const { return encoding == Encoding::kOneHot ? 1 : 2; }
  int qubit_count() const { return graph.vertex_count() * qubits_per_vertex(); }
  int qubit(int vertex, int slot) const { return vertex * qubits_per_vertex() + slot; }

  static ColoringInstance one_hot(Graph graph, int colors);
  static ColoringInstance two_hot(Graph graph);
};

/// Throws InfeasibleAssignment unless every vertex block has the encoding's
/// Hamming weight and the length matches.
void check_feasible(const ColoringInstance& instance, std::span<const std::uint8_t> assignment);
bool is_feasible(const ColoringInstance& instance, std::span<const std::uint8_t> assignment);

/// Monochromatic edge count sum_j sum_{(v,v')} x_{v,j} x_{v',j}.
int cost_one_hot(const ColoringInstance& instance, std::span<const std::uint8_t> assignment);

/// Two-hot conflict count sum_{(v,v')} (1/2) sum_{i != j} x_{v,i} x_{v,j} x_{v',i} x_{v',j},
/// i.e. the number of edges whose endpoints carry the same pair pattern.
int cost_n_particle(const ColoringInstance& instance, std::span<const std::uint8_t> assignment);

/// Cost of either encoding.
int cost(const ColoringInstance& instance, std::span<const std::uint8_t> assignment);

/// (1/4) sum_j sum_{(v,v')} Z_{v,j} Z_{v',j}. The dropped 1-local terms are
/// proportional to the particle number and constant on feasible states.
ZPolynomial build_hamiltonian_one_hot(const ColoringInstance& instance);

/// Per edge: four 2-local terms Z_{v,j} Z_{v',j} with weight 1/4, and four
/// 4-local terms on slot pairs {1,2}, {3,4}, {1,4}, {2,4} (1-based) of both
/// endpoints with weights 1/8, 1/8, 1/4, 1/4.
ZPolynomial build_hamiltonian_n2(const ColoringInstance& instance);

/// The encoding's problem Hamiltonian.
ZPolynomial build_problem_hamiltonian(const ColoringInstance& instance);

/// alpha/2 * sum_v [ (2 - kappa) sum_j Z_{v,j} + sum_{j<j'} Z_{v,j} Z_{v,j'} ],
/// which equals alpha * (w_v - 1)^2 up to a constant, w_v the block weight.
/// Throws std::invalid_argument for alpha <= 0.
ZPolynomial build_penalty_hamiltonian(int kappa, int vertices, double alpha);

/// Every assignment of `instance` that passes check_feasible, in
/// lexicographic order of the per-vertex patterns.
std::vector<Bitstring> enumerate_feasible(const ColoringInstance& instance);

struct Calibration {
  double slope = 0.0;
  double offset = 0.0;
  double residual = 0.0;
};

using CostOracle = std::function<double(std::span<const std::uint8_t>)>;

/// Least-squares fit cost = slope * H + offset over all feasible states of
/// `instance` (meant for a single edge). Throws CalibrationFailed when the
/// largest residual exceeds `tolerance`, and std::invalid_argument when the
/// instance has more than 2^20 feasible states.
Calibration calibrate(const ZPolynomial& hamiltonian, const CostOracle& cost,
                      const ColoringInstance& instance, double tolerance = 1e-12);

}  // namespace lpnc

#endif  // LPNC_ENCODINGS_H_
