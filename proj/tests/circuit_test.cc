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

#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "lpnc/circuit.h"

namespace lpnc {
namespace {

TEST_SUITE("circuit") {
  TEST_CASE("gate factories validate their supports") {
    CHECK_THROWS_AS(Gate::xy_pair(1, 1, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(Gate::zz_pair(2, 2, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(Gate::z_string({}, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(Gate::z_string({0, 1, 2, 3, 4}, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(Gate::z_string({0, 0}, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(Gate::cnot(3, 3), std::invalid_argument);
    CHECK(Gate::z_string({3, 1}, 0.1).qubits == std::vector<int>{1, 3});
  }

  TEST_CASE("LPNC membership") {
    CHECK(Gate::xy_pair(0, 1, 0.2).is_lpnc());
    CHECK(Gate::zz_pair(0, 1, 0.2).is_lpnc());
    CHECK(Gate::z_string({0, 1, 2}, 0.2).is_lpnc());
    CHECK(Gate::xy_clique({0, 1, 2}, 0.2).is_lpnc());
    CHECK_FALSE(Gate::local_x(0, 0.2).is_lpnc());
    CHECK_FALSE(Gate::cnot(0, 1).is_lpnc());
    CHECK_FALSE(Gate::conditional_x(0, {{0}, {1}}).is_lpnc());
    CHECK_FALSE(Gate::prep_zero(0).is_lpnc());

    LayeredCircuit inside(6);
    inside.append_layer({Gate::xy_pair(0, 2, 0.1), Gate::xy_pair(3, 4, 0.1)});
    CHECK(is_lpnc(inside, 3));
    LayeredCircuit across(6);
    across.append_layer({Gate::xy_pair(2, 3, 0.1)});
    CHECK_FALSE(is_lpnc(across, 3));
    CHECK(is_lpnc(across, 6));
  }

  TEST_CASE("layers reject overlapping or out-of-range supports") {
    LayeredCircuit c(4, 1);
    CHECK_THROWS_AS(c.append_layer({Gate::xy_pair(0, 1, 0.1), Gate::zz_pair(1, 2, 0.1)}), std::invalid_argument);
    CHECK_THROWS_AS(c.append_layer({Gate::local_x(4, 0.1)}), std::invalid_argument);
    CHECK_THROWS_AS(c.append_layer({Gate::measure_z(0, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(c.append_layer({Gate::conditional_x(0, {{3}, {1}})}), std::invalid_argument);
    c.append_layer({Gate::xy_pair(0, 1, 0.1), Gate::zz_pair(2, 3, 0.1)});
    c.append_layer({Gate::measure_z(0, 0)}, false);
    CHECK(c.depth() == 2);
    CHECK(c.noisy_layer_count() == 1);
    CHECK(c.gate_count() == 3);
    CHECK(c.gate_count(GateKind::kZZPair) == 1);
    CHECK(c.prefix(1).depth() == 1);
    CHECK_THROWS(c.prefix(3));
  }

  TEST_CASE("append joins circuits of equal width") {
    LayeredCircuit a(3);
    a.append_layer({Gate::xy_pair(0, 1, 0.1)});
    LayeredCircuit b(3);
    b.append_layer({Gate::zz_pair(1, 2, 0.1)});
    a.append(b);
    CHECK(a.depth() == 2);
    CHECK_THROWS_AS(a.append(LayeredCircuit(4)), std::invalid_argument);
  }

  TEST_CASE("first-fit packing places gates in the earliest free layer") {
    const std::vector<Gate> gates = {Gate::zz_pair(0, 1, 0.1), Gate::zz_pair(1, 2, 0.1), Gate::z_string({2}, 0.1),
                                     Gate::z_string({0}, 0.1)};
    const auto layers = pack_first_fit(gates);
    REQUIRE(layers.size() == 2);
    // zz(1,2) clashes with zz(0,1); z(2) fits beside zz(0,1); z(0) does not.
    CHECK(layers[0].gates.size() == 2);
    CHECK(layers[1].gates.size() == 2);
    CHECK(layers[0].gates[1].qubits == std::vector<int>{2});
    CHECK(layers[1].gates[1].qubits == std::vector<int>{0});
    for (const Layer& layer : layers) {
      std::set<int> used;
      for (const Gate& g : layer.gates) {
        for (int q : g.qubits) {
          REQUIRE(used.insert(q).second);
        }
      }
    }
    CHECK(pack_first_fit({}).empty());
  }
}

}  // namespace
}  // namespace lpnc
