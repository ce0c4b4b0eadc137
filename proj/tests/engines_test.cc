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

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "lpnc/analytic.h"
#include "lpnc/builders.h"
#include "lpnc/dense.h"
#include "lpnc/errors.h"
#include "lpnc/flip_frame.h"
#include "lpnc/graph.h"
#include "lpnc/qec.h"
#include "lpnc/rng.h"

namespace lpnc {
namespace {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

Matrix pauli(char p) {
  Matrix m(2, 2);
  switch (p) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m = Matrix::Identity(2, 2);
  }
  return m;
}

// Full-register operator: local matrix on `qubits`, identity elsewhere, built
// entry by entry from the definition.
Matrix embed(const Matrix& local, const std::vector<int>& qubits, int total) {
  const int dim = 1 << total;
  Matrix full = Matrix::Zero(dim, dim);
  int mask = 0;
  for (int q : qubits) {
    mask |= 1 << q;
  }
  auto sub = [&](int index) {
    int s = 0;
    for (std::size_t b = 0; b < qubits.size(); ++b) {
      s |= ((index >> qubits[b]) & 1) << b;
    }
    return s;
  };
  for (int out = 0; out < dim; ++out) {
    for (int in = 0; in < dim; ++in) {
      if ((out & ~mask) == (in & ~mask)) {
        full(out, in) = local(sub(out), sub(in));
      }
    }
  }
  return full;
}

Matrix kraus_depolarize(const Matrix& rho, int qubit, int total, double eta) {
  Matrix out = (1.0 - eta) * rho;
  for (char p : {'X', 'Y', 'Z'}) {
    const Matrix k = embed(pauli(p), {qubit}, total);
    out += (eta / 3.0) * k * rho * k.adjoint();
  }
  return out;
}

Matrix series_exp(const Matrix& a) {
  // Scaling and squaring with a long Taylor series.
  const int squarings = 10;
  const Matrix scaled = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) {
    sum = sum * sum;
  }
  return sum;
}

Matrix random_density(int qubits, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int dim = 1 << qubits;
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      a(i, j) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
  }
  Matrix rho = a * a.adjoint();
  return rho / rho.trace();
}

std::vector<double> random_angles(SplitMix64& rng, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(2.0 * std::numbers::pi * rng.uniform());
  }
  return out;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST_SUITE("dense") {
  TEST_CASE("noiseless identity circuit leaves the state alone") {
    LayeredCircuit c = idle_circuit(3, 4);
    const DensityMatrix in(3, random_density(3, 4));
    const DensityMatrix out = dense_run(c, {0.0, 0.0}, in);
    CHECK(max_abs(out.matrix() - in.matrix()) == 0.0);
  }

  TEST_CASE("fully mixing noise on one qubit") {
    const Bitstring zero = {0};
    const DensityMatrix out = dense_run(idle_circuit(1, 1), {0.75, 0.0}, DensityMatrix::basis_state(zero));
    CHECK(max_abs(out.matrix() - Matrix::Identity(2, 2) / 2.0) < 1e-12);
  }

  TEST_CASE("depolarizing channel matches the Kraus sum") {
    for (double eta : {0.0, 0.01, 0.3, 0.75, 1.0}) {
      for (int q = 0; q < 3; ++q) {
        DensityMatrix rho(3, random_density(3, 7));
        const Matrix expected = kraus_depolarize(rho.matrix(), q, 3, eta);
        rho.depolarize(q, eta);
        CHECK(max_abs(rho.matrix() - expected) < 1e-14);
      }
    }
  }

  TEST_CASE("Bloch vector contracts by 1 - 4 eta / 3") {
    const double eta = 0.2;
    const Matrix rho0 = random_density(1, 3);
    DensityMatrix rho(1, rho0);
    rho.depolarize(0, eta);
    for (char p : {'X', 'Y', 'Z'}) {
      const double before = (pauli(p) * rho0).trace().real();
      const double after = (pauli(p) * rho.matrix()).trace().real();
      CHECK(after == doctest::Approx(before * (1.0 - 4.0 * eta / 3.0)).epsilon(1e-13));
    }
  }

  TEST_CASE("gate application matches explicit full-register operators") {
    const std::vector<Gate> gates = {Gate::xy_pair(2, 0, 0.7),   Gate::zz_pair(1, 3, 1.1),
                                     Gate::z_string({0, 2, 3}, 0.4), Gate::local_x(1, 2.3),
                                     Gate::cnot(3, 1),            Gate::xy_clique({0, 1, 3}, 0.9)};
    for (const Gate& g : gates) {
      INFO(to_string(g.kind));
      DensityMatrix rho(4, random_density(4, 12));
      const Matrix u = embed(gate_unitary(g), g.qubits, 4);
      CHECK(max_abs(u * u.adjoint() - Matrix::Identity(16, 16)) < 1e-12);
      const Matrix expected = u * rho.matrix() * u.adjoint();
      LayeredCircuit c(4);
      c.append_layer({g}, false);
      const DensityMatrix out = dense_run(c, {0.0, 0.0}, rho);
      CHECK(max_abs(out.matrix() - expected) < 1e-12);
    }
  }

  TEST_CASE("gate unitaries match their generators") {
    const Complex i(0.0, 1.0);
    const Matrix xx_yy = (embed(pauli('X'), {0}, 2) * embed(pauli('X'), {1}, 2) +
                          embed(pauli('Y'), {0}, 2) * embed(pauli('Y'), {1}, 2)) /
                         2.0;
    CHECK(max_abs(gate_unitary(Gate::xy_pair(0, 1, 0.8)) - series_exp(-i * 0.8 * xx_yy)) < 1e-12);
    CHECK(max_abs(gate_unitary(Gate::local_x(0, 0.6)) - series_exp(-i * 0.6 * pauli('X'))) < 1e-12);
    const Matrix zz = embed(pauli('Z'), {0}, 2) * embed(pauli('Z'), {1}, 2);
    CHECK(max_abs(gate_unitary(Gate::zz_pair(0, 1, 0.3)) - series_exp(-i * 0.3 * zz)) < 1e-12);

    Matrix h = Matrix::Zero(16, 16);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        h += (embed(pauli('X'), {a}, 4) * embed(pauli('X'), {b}, 4) +
              embed(pauli('Y'), {a}, 4) * embed(pauli('Y'), {b}, 4)) /
             2.0;
      }
    }
    CHECK(max_abs(gate_unitary(Gate::xy_clique({0, 1, 2, 3}, 1.3)) - series_exp(-i * 1.3 * h)) < 1e-11);
    CHECK(max_abs(gate_unitary(Gate::xy_clique({0, 1}, 0.5)) - gate_unitary(Gate::xy_pair(0, 1, 0.5))) < 1e-12);
    CHECK_THROWS_AS(gate_unitary(Gate::prep_zero(0)), UnsupportedGate);
  }

  TEST_CASE("reset, dephasing and unsupported gates") {
    DensityMatrix rho(2, random_density(2, 5));
    rho.reset(1);
    CHECK(rho.check_valid().empty());
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if ((r | c) & 2) {
          CHECK(std::abs(rho.matrix()(r, c)) == 0.0);
        }
      }
    }
    DensityMatrix d(2, random_density(2, 6));
    d.dephase(0);
    CHECK(std::abs(d.matrix()(0, 1)) == 0.0);
    CHECK(std::abs(d.matrix()(1, 2)) == 0.0);
    CHECK(std::abs(d.matrix()(0, 2)) > 0.0);

    LayeredCircuit c(2, 1);
    c.append_layer({Gate::measure_z(0, 0)});
    c.append_layer({Gate::conditional_x(1, {{0}, {1}})});
    CHECK_THROWS_AS(dense_run(c, {0.1, 0.0}, DensityMatrix::maximally_mixed(2)), UnsupportedGate);
    CHECK_THROWS_AS(DensityMatrix::maximally_mixed(13), std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix(2, Matrix::Identity(3, 3)), std::invalid_argument);
  }

  TEST_CASE("validity check catches broken matrices") {
    CHECK(DensityMatrix::maximally_mixed(3).check_valid().empty());
    Matrix m = Matrix::Identity(2, 2) / 2.0;
    m(0, 1) = 0.3;
    CHECK_FALSE(DensityMatrix(1, m).check_valid().empty());
    Matrix neg(2, 2);
    neg << 1.2, 0, 0, -0.2;
    CHECK_FALSE(DensityMatrix(1, neg).check_valid().empty());
    CHECK_FALSE(DensityMatrix(1, Matrix::Identity(2, 2)).check_valid().empty());
  }

  TEST_CASE("feasibility expectation") {
    const Bitstring bits = {0, 1, 0};
    CHECK(feasibility_expectation(DensityMatrix::basis_state(bits), {3, 1, 1}) == 1.0);
    CHECK(feasibility_expectation(DensityMatrix::maximally_mixed(3), {3, 1, 1}) == doctest::Approx(0.375));
    CHECK(feasibility_expectation(DensityMatrix::maximally_mixed(6), {3, 1, 2}) == doctest::Approx(0.140625));
    CHECK(feasibility_expectation(DensityMatrix::feasible_projector_state({3, 1, 1}), {3, 1, 1}) ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(feasibility_expectation(DensityMatrix::maximally_mixed(4), {3, 1, 1}), std::invalid_argument);
  }

  TEST_CASE("XY-QAOA feasibility equals the analytic weight and ignores angles and start") {
    const Graph g(2, {{0, 1}});
    const SubsystemSpec spec{3, 1, 2};
    SplitMix64 rng(21);
    for (double eta : {1e-2, 1e-1}) {
      const NoiseModel noise{eta, 0.0};
      std::vector<double> values;
      for (int trial = 0; trial < 3; ++trial) {
        // Blocks of 5 layers on a single edge; three cover d = 14.
        const LayeredCircuit c = build_xy_qaoa_circuit(g, spec, 3, random_angles(rng, 3), random_angles(rng, 3));
        for (int d : {0, 3, 7, 14}) {
          Bitstring start = {0, 0, 1, 0, 1, 0};
          if (trial == 1) {
            start = {1, 0, 0, 1, 0, 0};
          }
          const DensityMatrix out = dense_run(c.prefix(d), noise, DensityMatrix::basis_state(start));
          REQUIRE(out.check_valid().empty());
          CHECK(std::abs(feasibility_expectation(out, spec) - feasible_probability(spec, noise, d)) < 1e-10);
        }
      }
    }
  }

  TEST_CASE("noiseless LPNC circuits never leave the feasible subspace") {
    const Graph g(2, {{0, 1}});
    SplitMix64 rng(8);
    const LayeredCircuit c =
        build_xy_qaoa_circuit(g, {3, 1, 2}, 3, random_angles(rng, 3), random_angles(rng, 3));
    const Bitstring start = {0, 1, 0, 0, 0, 1};
    const DensityMatrix out = dense_run(c, {0.0, 0.0}, DensityMatrix::basis_state(start));
    CHECK(feasibility_expectation(out, {3, 1, 2}) == doctest::Approx(1.0).epsilon(1e-12));
    // The state did move.
    CHECK(std::abs(out.matrix()(0b100010, 0b100010).real() - 1.0) > 1e-3);
  }

  TEST_CASE("mixer bound") {
    const MixerBound zero = mixer_bound_check(0.0, 1.1, 0.2);
    CHECK(zero.lhs == doctest::Approx(zero.rhs).epsilon(1e-13));
    const MixerBound half_turn = mixer_bound_check(std::numbers::pi, 0.4, 0.3);
    CHECK(half_turn.lhs == doctest::Approx(half_turn.rhs).epsilon(1e-12));
    CHECK(zero.rhs == doctest::Approx(subspace_weight({3, 1, 1}, {0.2, 0.0}, 1)).epsilon(1e-13));

    SplitMix64 rng(99);
    for (int i = 0; i < 1000; ++i) {
      const double bx = 2.0 * std::numbers::pi * rng.uniform();
      const double bxy = 2.0 * std::numbers::pi * rng.uniform();
      const double eta = 0.75 * rng.uniform();
      const MixerBound b = mixer_bound_check(bx, bxy, eta);
      REQUIRE(b.holds);
      REQUIRE(b.lhs - b.rhs <= 1e-12);
    }
    // Beyond the fully mixing rate the noise itself favors weight 2, and a
    // quarter turn of the transverse field puts everything there.
    CHECK_FALSE(mixer_bound_check(std::numbers::pi / 2.0, 0.0, 1.0).holds);
  }

  TEST_CASE("four-block mixer comparison") {
    std::vector<double> etas;
    for (int i = 0; i < 50; ++i) {
      etas.push_back(0.2 * i / 49.0);
    }
    const auto sets = reference_penalty_angle_sets();
    REQUIRE(sets.size() == 3);
    const auto rows = mixer_comparison_sweep(sets, etas);
    MixerComparisonOptions other;
    other.xy_betas = {0.3, 2.9, 1.4, 5.0};
    const auto rows_other = mixer_comparison_sweep(sets, etas, other);
    CHECK(rows.front().xy == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CAPTURE(rows[i].eta);
      CHECK(rows[i].noisy_layers == 13);
      CHECK(std::abs(rows[i].xy - subspace_weight({3, 1, 1}, {rows[i].eta, 0.0}, 13)) < 1e-10);
      CHECK(std::abs(rows[i].xy - rows_other[i].xy) < 1e-10);
      for (double x : rows[i].x) {
        CHECK(x <= rows[i].xy + 1e-12);
      }
    }
    MixerComparisonOptions per_block;
    per_block.noise_per = NoisePer::kBlock;
    CHECK(mixer_comparison_sweep(sets, etas, per_block)[0].noisy_layers == 7);
  }
}

TEST_SUITE("flip_frame") {
  TEST_CASE("noiseless runs are always feasible") {
    const Graph g(3, {{0, 1}, {1, 2}});
    const SubsystemSpec spec{3, 1, 3};
    const LayeredCircuit c = build_xy_qaoa_circuit(g, spec, 2, std::vector<double>{0.1, 0.2},
                                                   std::vector<double>{0.3, 0.4});
    FlipFrameOptions o;
    o.shots = 1000;
    o.initial = lowest_feasible_bitstring(spec);
    o.valid = weight_predicate(spec);
    const RunResult r = flip_frame_run(c, {0.0, 0.0}, o);
    CHECK(r.estimate == 1.0);
    CHECK(r.standard_error == 0.0);
    CHECK(r.shots == 1000);
  }

  TEST_CASE("single qubit flips half the time at the fully mixing rate") {
    FlipFrameOptions o;
    o.shots = 100000;
    o.seed = 5;
    o.valid = [](std::span<const std::uint8_t> b) { return b[0] == 1; };
    const RunResult r = flip_frame_run(idle_circuit(1, 1), {0.75, 0.0}, o);
    CHECK(std::abs(r.estimate - 0.5) < 4.0 * r.standard_error);
  }

  TEST_CASE("readout error alone") {
    FlipFrameOptions o;
    o.shots = 100000;
    o.valid = [](std::span<const std::uint8_t> b) { return b[0] == 1; };
    const RunResult r = flip_frame_run(idle_circuit(1, 0), {0.0, 0.2}, o);
    CHECK(std::abs(r.estimate - 0.2) < 4.0 * r.standard_error);
    o.final_readout_error = false;
    CHECK(flip_frame_run(idle_circuit(1, 0), {0.0, 0.2}, o).estimate == 0.0);
  }

  TEST_CASE("sampled feasibility matches the analytic weight") {
    const SubsystemSpec one{3, 1, 1};
    FlipFrameOptions o;
    o.initial = lowest_feasible_bitstring(one);
    o.valid = weight_predicate(one);
    const RunResult r = flip_frame_run(idle_circuit(3, 10), {0.05, 0.0}, o);
    CHECK(std::abs(r.estimate - subspace_weight(one, {0.05, 0.0}, 10)) < 4.0 * r.standard_error);

    const SubsystemSpec many{3, 1, 30};
    o.initial = lowest_feasible_bitstring(many);
    o.valid = weight_predicate(many);
    o.seed = 2;
    const RunResult r30 = flip_frame_run(idle_circuit(90, 70), {1e-3, 0.0}, o);
    CHECK(std::abs(r30.estimate - feasible_probability(many, {1e-3, 0.0}, 70)) < 4.0 * r30.standard_error);
  }

  TEST_CASE("flip-frame agrees with the dense engine on LPNC circuits") {
    const Graph g(3, {{0, 1}, {1, 2}});
    const SubsystemSpec spec{3, 1, 3};
    SplitMix64 rng(4);
    const LayeredCircuit c = build_xy_qaoa_circuit(g, spec, 2, random_angles(rng, 2), random_angles(rng, 2));
    const Bitstring start = lowest_feasible_bitstring(spec);
    for (double eta : {1e-3, 1e-2, 1e-1}) {
      const NoiseModel noise{eta, 0.0};
      const double dense = feasibility_expectation(dense_run(c, noise, DensityMatrix::basis_state(start)), spec);
      FlipFrameOptions o;
      o.initial = start;
      o.valid = weight_predicate(spec);
      o.seed = 17;
      const RunResult r = flip_frame_run(c, noise, o);
      CAPTURE(eta);
      CHECK(std::abs(r.estimate - dense) <= 4.0 * r.standard_error);
    }
  }

  TEST_CASE("results do not depend on the thread count") {
    const SubsystemSpec spec{3, 1, 4};
    FlipFrameOptions o;
    o.shots = 20000;
    o.seed = 123;
    o.initial = lowest_feasible_bitstring(spec);
    o.valid = weight_predicate(spec);
    std::vector<Bitstring> first;
    o.threads = 1;
    const RunResult a = flip_frame_run(idle_circuit(12, 30), {0.02, 0.01}, o, &first);
    for (unsigned t : {2U, 3U, 8U}) {
      o.threads = t;
      std::vector<Bitstring> other;
      const RunResult b = flip_frame_run(idle_circuit(12, 30), {0.02, 0.01}, o, &other);
      CHECK(a.estimate == b.estimate);
      CHECK(first == other);
    }
    REQUIRE(first.size() == 20000);
    CHECK(first[0].size() == 12);
  }

  TEST_CASE("CNOT and classical control propagate flips") {
    LayeredCircuit c(3, 1);
    c.append_layer({Gate::cnot(0, 1)}, false);
    c.append_layer({Gate::measure_z(1, 0)}, false);
    c.append_layer({Gate::conditional_x(2, {{0}, {1}})}, false);
    const FlipFrameProgram program(c, {0.0, 0.0}, Bitstring{1, 0, 0});
    CHECK(program.reference_final() == Bitstring{1, 1, 1});
    CHECK(program.reference_classical() == Bitstring{1});

    SplitMix64 noise_rng(1);
    SplitMix64 readout_rng(2);
    ShotState clean = program.start_shot(noise_rng);
    program.run(clean, noise_rng, readout_rng);
    CHECK(program.read(clean, {}, readout_rng, 0.0) == Bitstring{1, 1, 1});

    ShotState hit = program.start_shot(noise_rng);
    hit.frame.toggle(0);
    program.run(hit, noise_rng, readout_rng);
    CHECK(hit.classical == Bitstring{0});
    CHECK(program.read(hit, {}, readout_rng, 0.0) == Bitstring{0, 0, 0});

    LayeredCircuit prep(1);
    prep.append_layer({Gate::prep_zero(0)}, false);
    const FlipFrameProgram p2(prep, {0.0, 0.0}, Bitstring{1});
    ShotState s = p2.start_shot(noise_rng);
    s.frame.toggle(0);
    p2.run(s, noise_rng, readout_rng);
    CHECK(p2.read(s, {}, readout_rng, 0.0) == Bitstring{0});
  }

  TEST_CASE("non-LPNC rotations are rejected") {
    LayeredCircuit c(2);
    c.append_layer({Gate::local_x(0, 0.3)});
    CHECK_THROWS_AS(FlipFrameProgram(c, {0.1, 0.0}), UnsupportedGate);
    CHECK_THROWS_AS(FlipFrameProgram(idle_circuit(2, 1), {0.1, 0.0}, Bitstring{0}), std::invalid_argument);
  }

  TEST_CASE("run results and predicates") {
    const RunResult r = RunResult::from_counts(25, 100, 9);
    CHECK(r.estimate == 0.25);
    CHECK(r.standard_error == doctest::Approx(std::sqrt(0.25 * 0.75 / 100)));
    CHECK(r.seed == 9);
    CHECK_THROWS(RunResult::from_counts(0, 0, 1));
    CHECK(lowest_feasible_bitstring({4, 2, 2}) == Bitstring{0, 0, 1, 1, 0, 0, 1, 1});
    const BitPredicate p = weight_predicate({3, 1, 2});
    CHECK(p(Bitstring{1, 0, 0, 0, 0, 1}));
    CHECK_FALSE(p(Bitstring{1, 1, 0, 0, 0, 1}));
    CHECK_FALSE(p(Bitstring{1, 0, 0}));
  }
}

}  // namespace
}  // namespace lpnc
