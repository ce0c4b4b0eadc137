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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpnc/analytic.h"
#include "lpnc/experiment.h"

namespace lpnc {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

std::string run_to_string(const ExperimentConfig& config) {
  std::ostringstream out;
  run_experiment(config, out);
  return out.str();
}

TEST_SUITE("experiment") {
  TEST_CASE("integer grids") {
    CHECK(parse_int_grid("5") == std::vector<int>{5});
    CHECK(parse_int_grid("1:4") == std::vector<int>{1, 2, 3, 4});
    CHECK(parse_int_grid("0:10:5,12") == std::vector<int>{0, 5, 10, 12});
    CHECK_THROWS_AS(parse_int_grid(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_grid("4:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_grid("1:5:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_grid("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_grid("1:2:3:4"), std::invalid_argument);
  }

  TEST_CASE("real grids") {
    CHECK(parse_real_grid("0.1") == std::vector<double>{0.1});
    const auto g = parse_real_grid("0:1:5");
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g[2] == doctest::Approx(0.5));
    CHECK(g.back() == 1.0);
    CHECK(parse_real_grid("1e-3,0.01").size() == 2);
    CHECK_THROWS_AS(parse_real_grid("0:1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_real_grid("abc"), std::invalid_argument);
  }

  TEST_CASE("names round trip") {
    for (ExperimentKind k : {ExperimentKind::kAnalyticSweep, ExperimentKind::kFeasibilitySim,
                             ExperimentKind::kMixerBound, ExperimentKind::kMixerComparison,
                             ExperimentKind::kEncodingCompare, ExperimentKind::kQecCrossover,
                             ExperimentKind::kQecInterleaved}) {
      CHECK(parse_experiment_kind(to_string(k)) == k);
    }
    for (Engine e : {Engine::kAnalytic, Engine::kFlipFrame, Engine::kDense}) {
      CHECK(parse_engine(to_string(e)) == e);
    }
    CHECK(parse_depth_rule(to_string(DepthRule::kScheduler)) == DepthRule::kScheduler);
    CHECK(parse_noise_per(to_string(NoisePer::kBlock)) == NoisePer::kBlock);
    CHECK_THROWS_AS(parse_engine("quantum"), std::invalid_argument);
  }

  TEST_CASE("routed depth files") {
    std::istringstream in("# blocks depth\n1 12\n2 24\n\n3 40\n");
    const auto rows = read_routed_depths(in);
    REQUIRE(rows.size() == 3);
    CHECK(rows[2] == std::pair<int, int>{3, 40});
    std::istringstream bad("1 x\n");
    CHECK_THROWS_AS(read_routed_depths(bad), std::invalid_argument);
    CHECK_THROWS(read_routed_depths_file("/nonexistent/depths.txt"));
  }

  TEST_CASE("config validation names the field") {
    ExperimentConfig c;
    c.roes = {0.01};
    try {
      c.validate();
      FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("roe") != std::string::npos);
    }
    c.roes = {0.0};
    c.etas = {1.5};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.etas = {0.1};
    c.shots = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.shots = 10;
    c.particle_number = 5;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  }

  TEST_CASE("CSV headers") {
    CHECK(csv_header(ExperimentKind::kAnalyticSweep) == "label,eta,roe,depth,blocks,estimate,stderr,shots,seed");
    CHECK(csv_header(ExperimentKind::kMixerBound) == "beta_x,beta_xy,eta,lhs,rhs,holds");
    CHECK(csv_header(ExperimentKind::kQecInterleaved) ==
          "variant,p_or_d,eta,roe,estimate,stderr,shots,seed,nd_rate,layers");
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  }

  TEST_CASE("analytic sweep rows") {
    ExperimentConfig c;
    c.kappa = 3;
    c.particle_number = 1;
    c.subsystems = 2;
    c.etas = {0.01, 0.1};
    c.depths = {0, 5};
    const auto lines = lines_of(run_to_string(c));
    REQUIRE(lines.size() == 5);
    const NoiseModel noise{0.1, 0.0};
    CHECK(lines[4].find(format_real(feasible_probability({3, 1, 2}, noise, 5))) != std::string::npos);
  }

  TEST_CASE("simulation output is reproducible") {
    ExperimentConfig c;
    c.kind = ExperimentKind::kFeasibilitySim;
    c.engine = Engine::kFlipFrame;
    c.subsystems = 4;
    c.degree = 3;
    c.etas = {0.01};
    c.roes = {0.0, 0.02};
    c.blocks = {1, 2};
    c.shots = 3000;
    c.seed = 42;
    c.threads = 1;
    const std::string a = run_to_string(c);
    c.threads = 4;
    CHECK(run_to_string(c) == a);
    c.seed = 43;
    CHECK(run_to_string(c) != a);
  }

  TEST_CASE("file output") {
    ExperimentConfig c;
    c.depths = {0, 1};
    c.out = (std::filesystem::temp_directory_path() / "lpnc_experiment_test.csv").string();
    const ExperimentSummary s = run_experiment_to_file(c);
    CHECK(s.rows == 2);
    std::ifstream in(c.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == csv_header(ExperimentKind::kAnalyticSweep));
    std::remove(c.out.c_str());
    c.out = "/nonexistent/dir/out.csv";
    CHECK_THROWS_AS(run_experiment_to_file(c), std::runtime_error);
  }

  TEST_CASE("crossover search") {
    const std::vector<double> x = {0, 1, 2, 3};
    CHECK(find_crossover(x, {1, 1, 1, 1}, {2, 0.5, 1.5, 2}) == 2.0);
    CHECK_FALSE(find_crossover(x, {1, 1, 1, 1}, {0, 0, 0, 0}).has_value());
    CHECK_FALSE(find_crossover(x, {1, 1, 1, 1}, {2, 2, 2, 2}).has_value());
  }
}

}  // namespace
}  // namespace lpnc
