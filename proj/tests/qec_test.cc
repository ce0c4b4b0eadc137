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

#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "lpnc/analytic.h"
#include "lpnc/errors.h"
#include "lpnc/flip_frame.h"
#include "lpnc/qec.h"
#include "lpnc/rng.h"

namespace lpnc {
namespace {

Bitstring with_ancillas(const Bitstring& data) {
  Bitstring out = data;
  out.resize(CodeLayout::kQubits, 0);
  return out;
}

// Runs the syndrome circuit noiselessly after toggling `flip` (if >= 0) and
// returns the six data bits.
Bitstring correct_once(const Bitstring& data, int flip, bool reset) {
  const FlipFrameProgram program(build_syndrome_circuit({reset}), {0.0, 0.0}, with_ancillas(data));
  SplitMix64 noise_rng(1);
  SplitMix64 readout_rng(2);
  ShotState state = program.start_shot(noise_rng);
  if (flip >= 0) {
    state.frame.toggle(flip);
  }
  program.run(state, noise_rng, readout_rng);
  const std::array<int, 6> data_qubits = {0, 1, 2, 3, 4, 5};
  return program.read(state, data_qubits, readout_rng, 0.0);
}

TEST_SUITE("qec") {
  TEST_CASE("encoding") {
    CHECK(encode(Bitstring{1, 0, 0}) == Bitstring{1, 1, 0, 0, 0, 0});
    CHECK(encode(Bitstring{0, 0, 1}) == Bitstring{0, 0, 0, 0, 1, 1});
    CHECK_THROWS_AS(encode(Bitstring{1, 1, 0}), InfeasibleAssignment);
    CHECK_THROWS_AS(encode(Bitstring{1, 0}), InfeasibleAssignment);
    for (const Bitstring& w : CodeLayout::codewords()) {
      CHECK(is_codeword(w));
      CHECK(is_near_codeword(w));
      CHECK(check_parities(w) == std::array<std::uint8_t, 3>{0, 0, 1});
    }
    CHECK_FALSE(is_codeword(Bitstring{1, 0, 0, 0, 0, 0}));
    CHECK(is_near_codeword(Bitstring{1, 0, 0, 0, 0, 0}));
    CHECK_FALSE(is_near_codeword(Bitstring{1, 0, 1, 0, 0, 0}));
    CHECK_FALSE(is_codeword(Bitstring{0, 0, 0, 0, 0, 0}));
  }

  TEST_CASE("derived syndrome table") {
    const SyndromeTable t = derive_syndrome_table();
    CHECK(t.baseline() == Violation{0, 0, 1});
    // Oracle: a flip on data qubit q violates exactly the checks containing q.
    for (int q = 0; q < 6; ++q) {
      Violation v{};
      for (int c = 0; c < 3; ++c) {
        for (int member : CodeLayout::checks()[static_cast<std::size_t>(c)]) {
          if (member == q) {
            v[static_cast<std::size_t>(c)] = 1;
          }
        }
      }
      CHECK(t.lookup(v) == Recovery{RecoveryKind::kFlip, q});
    }
    CHECK(t.lookup({0, 0, 0}) == Recovery{RecoveryKind::kIdentity, -1});
    CHECK(t.lookup({0, 0, 1}) == Recovery{RecoveryKind::kNotDecodable, -1});
    CHECK(t.lookup({1, 0, 1}).qubit == 0);
    CHECK(t.lookup({1, 0, 0}).qubit == 1);
    CHECK(t.lookup({1, 1, 1}).qubit == 2);
    CHECK(t.lookup({1, 1, 0}).qubit == 3);
    CHECK(t.lookup({0, 1, 1}).qubit == 4);
    CHECK(t.lookup({0, 1, 0}).qubit == 5);
    CHECK(t.violation({0, 0, 1}) == Violation{0, 0, 0});
    CHECK(SyndromeTable::index({1, 0, 1}) == 5);
  }

  TEST_CASE("syndrome circuit shape") {
    const LayeredCircuit c = build_syndrome_circuit();
    CHECK(c.qubit_count() == 9);
    CHECK(c.classical_bit_count() == 3);
    CHECK(cnot_layer_count(c) == 4);
    CHECK(c.gate_count(GateKind::kCnot) == 11);
    CHECK(c.gate_count(GateKind::kPrepZero) == 3);
    CHECK(c.gate_count(GateKind::kMeasureZ) == 3);
    CHECK(c.gate_count(GateKind::kConditionalX) == 6);
    CHECK(c.noisy_layer_count() == 5);
    const LayeredCircuit no_reset = build_syndrome_circuit({false});
    CHECK(no_reset.gate_count(GateKind::kPrepZero) == 0);
    CHECK(no_reset.depth() == c.depth() - 1);
  }

  TEST_CASE("noiseless correction of every single data flip") {
    for (const Bitstring& w : CodeLayout::codewords()) {
      CHECK(correct_once(w, -1, true) == w);
      for (int q = 0; q < 6; ++q) {
        CAPTURE(q);
        CHECK(correct_once(w, q, true) == w);
      }
    }
  }

  TEST_CASE("ancilla reset absorbs stale ancilla flips") {
    const Bitstring& w = CodeLayout::codewords()[1];
    for (int a = 0; a < 3; ++a) {
      CHECK(correct_once(w, CodeLayout::ancilla(a), true) == w);
      // Without reset the stale flip reads as a violation of that one check.
      // Checks 0 and 1 then miscorrect a data qubit; check 2 alone is the
      // not-decodable pattern and leaves the data alone.
      CHECK((correct_once(w, CodeLayout::ancilla(a), false) == w) == (a == 2));
    }
  }

  TEST_CASE("corrected and uncorrected segments") {
    QecRunOptions o;
    o.shots = 20000;
    CHECK(run_corrected_segment(40, {0.0, 0.0}, o).result.estimate == 1.0);
    CHECK(run_uncorrected_segment(40, {0.0, 0.0}, o).result.estimate == 1.0);

    const QecResult zero = run_corrected_segment(0, {0.01, 0.0}, o);
    CHECK(zero.result.estimate < 1.0);
    CHECK(zero.layers == 5);

    const NoiseModel noise{0.01, 0.0};
    const QecResult un = run_uncorrected_segment(30, noise, o);
    CHECK(un.layers == 30);
    CHECK(std::abs(un.result.estimate - subspace_weight({3, 1, 1}, noise, 30)) < 4.0 * un.result.standard_error);

    double previous = 2.0;
    for (double roe : {0.0, 0.05, 0.2}) {
      const double e = run_corrected_segment(20, {0.01, roe}, o).result.estimate;
      CHECK(e < previous);
      previous = e;
    }

    o.lenient = true;
    CHECK(run_corrected_segment(20, noise, o).result.estimate >
          run_corrected_segment(20, noise, QecRunOptions{.shots = 20000}).result.estimate);
    CHECK_THROWS(run_corrected_segment(-1, noise, o));
  }

  TEST_CASE("interleaved sweep bookkeeping") {
    InterleavedOptions o;
    o.vertices = 3;
    o.max_blocks = 7;
    o.correction_period = 3;
    o.run.shots = 2000;
    const auto clean = run_interleaved({0.0, 0.0}, o, true);
    REQUIRE(clean.size() == 8);
    for (const InterleavedPoint& p : clean) {
      CAPTURE(p.blocks);
      CHECK(p.total.estimate == 1.0);
      CHECK(p.nd_rate == 0.0);
      CHECK(p.layers == p.blocks * 7 + (p.blocks / 3) * 5);
    }
    const NoiseModel noise{0.005, 0.005};
    const auto a = run_interleaved(noise, o, true);
    const auto b = run_interleaved(noise, o, true);
    const auto u = run_interleaved(noise, o, false);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].total.estimate == b[i].total.estimate);
      CHECK(a[i].total.estimate == doctest::Approx(std::pow(a[i].vertex_estimate, 3)).epsilon(1e-12));
      CHECK(u[i].layers == u[i].blocks * 7);
    }
    CHECK(a.back().total.estimate < 1.0);
  }
}

}  // namespace
}  // namespace lpnc
