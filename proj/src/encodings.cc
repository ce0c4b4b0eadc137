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

#include "lpnc/encodings.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lpnc/analytic.h"
#include "lpnc/errors.h"

namespace lpnc {

ZPolynomial::ZPolynomial(int qubit_count, double offset) : qubit_count_(qubit_count), offset_(offset) {
  if (qubit_count < 0) {
    throw std::invalid_argument("qubit count must be non-negative");
  }
}

void ZPolynomial::add_term(double coefficient, std::vector<int> support) {
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw std::invalid_argument("Z term repeats a qubit");
  }
  for (int q : support) {
    if (q < 0 || q >= qubit_count_) {
      throw std::invalid_argument("Z term qubit " + std::to_string(q) + " outside [0, " +
                                  std::to_string(qubit_count_) + ")");
    }
  }
  if (support.empty()) {
    offset_ += coefficient;
    return;
  }
  for (ZTerm& t : terms_) {
    if (t.support == support) {
      t.coefficient += coefficient;
      return;
    }
  }
  terms_.push_back(ZTerm{coefficient, std::move(support)});
}

ZPolynomial ZPolynomial::scaled(double factor) const {
  ZPolynomial out(qubit_count_, offset_ * factor);
  out.terms_ = terms_;
  for (ZTerm& t : out.terms_) {
    t.coefficient *= factor;
  }
  return out;
}

double ZPolynomial::evaluate(std::span<const std::uint8_t> bits) const {
  if (bits.size() != static_cast<std::size_t>(qubit_count_)) {
    throw std::invalid_argument("bitstring length " + std::to_string(bits.size()) +
                                " does not match " + std::to_string(qubit_count_) + " qubits");
  }
  double value = offset_;
  for (const ZTerm& t : terms_) {
    int sign = 1;
    for (int q : t.support) {
      sign *= spin(bits, q);
    }
    value += t.coefficient * sign;
  }
  return value;
}

void ZPolynomial::write(std::ostream& out) const {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  out << "offset " << offset_ << " qubits " << qubit_count_ << '\n';
  for (const ZTerm& t : terms_) {
    out << t.coefficient;
    for (int q : t.support) {
      out << ' ' << q;
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

ZPolynomial ZPolynomial::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("Z polynomial text is empty");
  }
  std::istringstream header(line);
  std::string offset_key, qubits_key;
  double offset = 0.0;
  int qubits = 0;
  if (!(header >> offset_key >> offset >> qubits_key >> qubits) || offset_key != "offset" ||
      qubits_key != "qubits") {
    throw std::invalid_argument("bad Z polynomial header `" + line + "`");
  }
  ZPolynomial poly(qubits, offset);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::istringstream fields(line);
    double coefficient = 0.0;
    if (!(fields >> coefficient)) {
      throw std::invalid_argument("Z polynomial line " + std::to_string(line_no) +
                                  ": missing coefficient");
    }
    std::vector<int> support;
    int q = 0;
    while (fields >> q) {
      support.push_back(q);
    }
    if (!fields.eof()) {
      throw std::invalid_argument("Z polynomial line " + std::to_string(line_no) +
                                  ": bad qubit index");
    }
    poly.add_term(coefficient, std::move(support));
  }
  return poly;
}

void ColoringInstance::validate() const {
  if (colors < 1) {
    throw std::invalid_argument("need at least one color");
  }
  if (encoding == Encoding::kTwoHot && colors != 6) {
    throw std::invalid_argument("two-hot encoding on 4 qubits represents exactly 6 colors, got " +
                                std::to_string(colors));
  }
}

ColoringInstance ColoringInstance::one_hot(Graph graph, int colors) {
  ColoringInstance out{std::move(graph), colors, Encoding::kOneHot};
  out.validate();
  return out;
}

ColoringInstance ColoringInstance::two_hot(Graph graph) {
  return ColoringInstance{std::move(graph), 6, Encoding::kTwoHot};
}

bool is_feasible(const ColoringInstance& instance, std::span<const std::uint8_t> assignment) {
  if (assignment.size() != static_cast<std::size_t>(instance.qubit_count())) {
    return false;
  }
  const int width = instance.qubits_per_vertex();
  for (int v = 0; v < instance.graph.vertex_count(); ++v) {
    int weight = 0;
    for (int s = 0; s < width; ++s) {
      weight += assignment[static_cast<std::size_t>(instance.qubit(v, s))] ? 1 : 0;
    }
    if (weight != instance.particle_number()) {
      return false;
    }
  }
  return true;
}

void check_feasible(const ColoringInstance& instance, std::span<const std::uint8_t> assignment) {
  if (assignment.size() != static_cast<std::size_t>(instance.qubit_count())) {
    throw InfeasibleAssignment("assignment has " + std::to_string(assignment.size()) +
                               " bits, expected " + std::to_string(instance.qubit_count()));
  }
  if (!is_feasible(instance, assignment)) {
    throw InfeasibleAssignment("assignment has a vertex block whose weight is not " +
                               std::to_string(instance.particle_number()));
  }
}

int cost_one_hot(const ColoringInstance& instance, std::span<const std::uint8_t> assignment) {
  if (instance.encoding != Encoding::kOneHot) {
    throw std::invalid_argument("cost_one_hot needs a one-hot instance");
  }
  check_feasible(instance, assignment);
  int conflicts = 0;
  for (const Edge& e : instance.graph.edges()) {
    for (int j = 0; j < instance.colors; ++j) {
      conflicts += assignment[static_cast<std::size_t>(instance.qubit(e.u, j))] &
                   assignment[static_cast<std::size_t>(instance.qubit(e.v, j))];
    }
  }
  return conflicts;
}

int cost_n_particle(const ColoringInstance& instance, std::span<const std::uint8_t> assignment) {
  if (instance.encoding != Encoding::kTwoHot) {
    throw std::invalid_argument("cost_n_particle needs a two-hot instance");
  }
  check_feasible(instance, assignment);
  auto x = [&](int v, int s) { return static_cast<int>(assignment[static_cast<std::size_t>(instance.qubit(v, s))]); };
  int doubled = 0;
  for (const Edge& e : instance.graph.edges()) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i != j) {
          doubled += x(e.u, i) * x(e.u, j) * x(e.v, i) * x(e.v, j);
        }
      }
    }
  }
  // Each shared pair is counted as (i, j) and (j, i).
  return doubled / 2;
}

int cost(const ColoringInstance& instance, std::span<const std::uint8_t> assignment) {
  return instance.encoding == Encoding::kOneHot ? cost_one_hot(instance, assignment)
                                                : cost_n_particle(instance, assignment);
}

ZPolynomial build_hamiltonian_one_hot(const ColoringInstance& instance) {
  if (instance.encoding != Encoding::kOneHot) {
    throw std::invalid_argument("one-hot Hamiltonian needs a one-hot instance");
  }
  ZPolynomial h(instance.qubit_count());
  for (const Edge& e : instance.graph.edges()) {
    for (int j = 0; j < instance.colors; ++j) {
      h.add_term(0.25, {instance.qubit(e.u, j), instance.qubit(e.v, j)});
    }
  }
  return h;
}

ZPolynomial build_hamiltonian_n2(const ColoringInstance& instance) {
  if (instance.encoding != Encoding::kTwoHot) {
    throw std::invalid_argument("N=2 Hamiltonian needs a two-hot instance");
  }
  struct FourLocal {
    double coefficient;
    int a;
    int b;
  };
  // 0-based slots of the pairs {1,2}, {3,4}, {1,4}, {2,4}.
  static constexpr FourLocal kFourLocal[] = {
      {1.0 / 8.0, 0, 1}, {1.0 / 8.0, 2, 3}, {2.0 / 8.0, 0, 3}, {2.0 / 8.0, 1, 3}};
  ZPolynomial h(instance.qubit_count());
  for (const Edge& e : instance.graph.edges()) {
    for (int j = 0; j < 4; ++j) {
      h.add_term(0.25, {instance.qubit(e.u, j), instance.qubit(e.v, j)});
    }
    for (const FourLocal& t : kFourLocal) {
      h.add_term(t.coefficient, {instance.qubit(e.u, t.a), instance.qubit(e.u, t.b),
                                 instance.qubit(e.v, t.a), instance.qubit(e.v, t.b)});
    }
  }
  return h;
}

ZPolynomial build_problem_hamiltonian(const ColoringInstance& instance) {
  return instance.encoding == Encoding::kOneHot ? build_hamiltonian_one_hot(instance)
                                                : build_hamiltonian_n2(instance);
}

ZPolynomial build_penalty_hamiltonian(int kappa, int vertices, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("penalty weight alpha must be positive");
  }
  if (kappa < 1 || vertices < 0) {
    throw std::invalid_argument("penalty needs kappa >= 1 and vertices >= 0");
  }
  ZPolynomial h(kappa * vertices);
  for (int v = 0; v < vertices; ++v) {
    for (int j = 0; j < kappa; ++j) {
      h.add_term(0.5 * alpha * (2 - kappa), {v * kappa + j});
    }
    for (int j = 0; j < kappa; ++j) {
      for (int k = j + 1; k < kappa; ++k) {
        h.add_term(0.5 * alpha, {v * kappa + j, v * kappa + k});
      }
    }
  }
  return h;
}

std::vector<Bitstring> enumerate_feasible(const ColoringInstance& instance) {
  instance.validate();
  const int width = instance.qubits_per_vertex();
  std::vector<Bitstring> patterns;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << width); ++m) {
    if (std::popcount(m) == instance.particle_number()) {
      Bitstring p(static_cast<std::size_t>(width));
      // Slot 0 is the most significant bit, so patterns come out as
      // 0..01, 0..10, ... in lexicographic order.
      for (int s = 0; s < width; ++s) {
        p[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>((m >> (width - 1 - s)) & 1U);
      }
      patterns.push_back(std::move(p));
    }
  }
  const int vertices = instance.graph.vertex_count();
  const double count = std::pow(static_cast<double>(patterns.size()), vertices);
  if (count > static_cast<double>(1 << 20)) {
    throw std::invalid_argument("instance has too many feasible states to enumerate");
  }
  std::vector<Bitstring> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(vertices), 0);
  while (true) {
    Bitstring bits;
    bits.reserve(static_cast<std::size_t>(instance.qubit_count()));
    for (int v = 0; v < vertices; ++v) {
      const auto& p = patterns[digit[static_cast<std::size_t>(v)]];
      bits.insert(bits.end(), p.begin(), p.end());
    }
    out.push_back(std::move(bits));
    int v = vertices - 1;
    while (v >= 0 && ++digit[static_cast<std::size_t>(v)] == patterns.size()) {
      digit[static_cast<std::size_t>(v)] = 0;
      --v;
    }
    if (v < 0) {
      break;
    }
  }
  return out;
}

Calibration calibrate(const ZPolynomial& hamiltonian, const CostOracle& cost,
                      const ColoringInstance& instance, double tolerance) {
  if (hamiltonian.qubit_count() != instance.qubit_count()) {
    throw std::invalid_argument("Hamiltonian and instance disagree on the qubit count");
  }
  const auto states = enumerate_feasible(instance);
  std::vector<double> h, c;
  for (const Bitstring& s : states) {
    h.push_back(hamiltonian.evaluate(s));
    c.push_back(cost(s));
  }
  const double n = static_cast<double>(states.size());
  double mean_h = 0.0, mean_c = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    mean_h += h[i];
    mean_c += c[i];
  }
  mean_h /= n;
  mean_c /= n;
  double cov = 0.0, var = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    cov += (h[i] - mean_h) * (c[i] - mean_c);
    var += (h[i] - mean_h) * (h[i] - mean_h);
  }
  Calibration out;
  out.slope = var > 0.0 ? cov / var : 0.0;
  out.offset = mean_c - out.slope * mean_h;
  for (std::size_t i = 0; i < h.size(); ++i) {
    out.residual = std::max(out.residual, std::abs(c[i] - (out.slope * h[i] + out.offset)));
  }
  if (out.residual > tolerance) {
    std::ostringstream msg;
    msg << "Hamiltonian is not affine in the cost on the feasible subspace: residual "
        << out.residual << " exceeds " << tolerance;
    throw CalibrationFailed(msg.str());
  }
  return out;
}

}  // namespace lpnc
