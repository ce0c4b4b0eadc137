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

// Command-line front end for the experiments, graph generation and analytic
// evaluation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lpnc/experiment.h"
#include "lpnc/graph.h"

namespace {

struct CommonFlags {
  std::string eta;
  std::string roe;
  std::string depth;
  std::string blocks;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  std::string engine;
  std::string out;
  int kappa = 3;
  int particles = 1;
  int subsystems = 0;
  int degree = 3;
  std::string graph;
  std::string routed_depths;
  std::string mixer_depth_rule = "paper";
  std::string phase_depth_rule = "paper";
  std::string noise_per = "layer";
  int samples = 1000;
  double alpha = 1.0;
  int correction_period = 3;
  bool lenient = false;
  bool no_reset = false;
  unsigned threads = 0;
};

struct Defaults {
  std::string eta = "1e-3";
  std::string roe = "0";
  std::string engine = "analytic";
  int subsystems = 1;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--eta", f.eta, "Depolarizing rates: comma list, a:b:n for n points");
  sub->add_option("--roe", f.roe, "Readout error rates, same grammar as --eta");
  sub->add_option("--depth", f.depth, "Layer counts: comma list of n, a:b or a:b:step");
  sub->add_option("--blocks", f.blocks, "QAOA block counts, same grammar as --depth");
  sub->add_option("--shots", f.shots, "Monte Carlo shots per point")->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.seed, "Seed for graphs, angles and sampling");
  sub->add_option("--engine", f.engine, "analytic, flip-frame or dense");
  sub->add_option("--out", f.out, "CSV output path (default: stdout)");
  sub->add_option("--threads", f.threads, "Worker threads, 0 = all cores");
}

void add_layout(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--kappa", f.kappa, "Qubits per subsystem");
  sub->add_option("--particles", f.particles, "Particle number N per subsystem");
  sub->add_option("--subsystems,--vertices", f.subsystems, "Number of subsystems (graph vertices)");
  sub->add_option("--degree", f.degree, "Degree k of generated regular graphs");
  sub->add_option("--graph", f.graph, "Edge-list file used instead of a generated graph");
  sub->add_option("--mixer-depth-rule", f.mixer_depth_rule, "paper or scheduler");
  sub->add_option("--phase-depth-rule", f.phase_depth_rule, "paper or scheduler");
}

lpnc::ExperimentConfig make_config(lpnc::ExperimentKind kind, const CommonFlags& f, const Defaults& d) {
  lpnc::ExperimentConfig c;
  c.kind = kind;
  c.kappa = f.kappa;
  c.particle_number = f.particles;
  c.subsystems = f.subsystems > 0 ? f.subsystems : d.subsystems;
  c.degree = f.degree;
  c.etas = lpnc::parse_real_grid(f.eta.empty() ? d.eta : f.eta);
  c.roes = lpnc::parse_real_grid(f.roe.empty() ? d.roe : f.roe);
  if (!f.depth.empty()) {
    c.depths = lpnc::parse_int_grid(f.depth);
  }
  if (!f.blocks.empty()) {
    c.blocks = lpnc::parse_int_grid(f.blocks);
  }
  c.shots = f.shots;
  c.seed = f.seed;
  c.engine = lpnc::parse_engine(f.engine.empty() ? d.engine : f.engine);
  c.mixer_depth_rule = lpnc::parse_depth_rule(f.mixer_depth_rule);
  c.phase_depth_rule = lpnc::parse_depth_rule(f.phase_depth_rule);
  c.noise_per = lpnc::parse_noise_per(f.noise_per);
  c.graph_file = f.graph;
  c.routed_depth_file = f.routed_depths;
  c.samples = f.samples;
  c.alpha = f.alpha;
  c.correction_period = f.correction_period;
  c.lenient = f.lenient;
  c.reset_ancillas = !f.no_reset;
  c.threads = f.threads;
  c.out = f.out;
  return c;
}

int run(const lpnc::ExperimentConfig& config) {
  const lpnc::ExperimentSummary summary =
      config.out.empty() ? lpnc::run_experiment(config, std::cout) : lpnc::run_experiment_to_file(config);
  std::ostream& log = config.out.empty() ? std::cerr : std::cout;
  log << lpnc::to_string(config.kind) << ": " << summary.rows << " rows"
      << (config.out.empty() ? "" : " -> " + config.out) << '\n';
  for (const std::string& line : summary.lines) {
    log << "  " << line << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasibility under noise for particle-number-conserving circuits"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file of option values; [subcommand] sections, command-line flags win");
  CommonFlags f;

  struct Command {
    CLI::App* app;
    lpnc::ExperimentKind kind;
    Defaults defaults;
  };
  std::vector<Command> commands;

  auto* analytic = app.add_subcommand("analytic", "Closed-form feasibility over depths, blocks or routed depths");
  add_common(analytic, f);
  add_layout(analytic, f);
  analytic->add_option("--routed-depths", f.routed_depths, "File of 'blocks depth' lines");
  commands.push_back({analytic, lpnc::ExperimentKind::kAnalyticSweep, {"1e-1,1e-2,1e-3,1e-4", "0", "analytic", 1}});

  auto* simulate = app.add_subcommand("simulate", "Run XY-QAOA circuits on one of the engines");
  add_common(simulate, f);
  add_layout(simulate, f);
  commands.push_back({simulate, lpnc::ExperimentKind::kFeasibilitySim, {"1e-3", "0", "flip-frame", 1}});

  auto* bound = app.add_subcommand("mixer-bound", "Check the one-level mixer bound on random angle/noise triples");
  add_common(bound, f);
  bound->add_option("--samples", f.samples, "Number of random triples");
  commands.push_back({bound, lpnc::ExperimentKind::kMixerBound, {"0", "0", "dense", 1}});

  auto* fig4 = app.add_subcommand("fig4", "Four-block transverse-field vs XY mixer comparison on 3 qubits");
  add_common(fig4, f);
  fig4->add_option("--noise-per", f.noise_per, "layer or block: noise after every penalty sub-layer or once");
  fig4->add_option("--alpha", f.alpha, "Penalty weight");
  commands.push_back({fig4, lpnc::ExperimentKind::kMixerComparison, {"0:0.2:50", "0", "dense", 1}});

  auto* encodings = app.add_subcommand("compare-encodings", "One-hot (6 qubits) vs two-hot (4 qubits) per vertex");
  add_common(encodings, f);
  add_layout(encodings, f);
  commands.push_back({encodings, lpnc::ExperimentKind::kEncodingCompare, {"1e-3", "0", "analytic", 20}});

  auto* crossover = app.add_subcommand("qec-crossover", "One correction after d noisy layers vs no correction");
  add_common(crossover, f);
  crossover->add_flag("--lenient", f.lenient, "Accept data within distance 1 of a codeword");
  crossover->add_flag("--no-reset", f.no_reset, "Do not re-prepare the ancillas before the checks");
  commands.push_back({crossover, lpnc::ExperimentKind::kQecCrossover, {"1e-3", "0", "flip-frame", 1}});

  auto* interleaved = app.add_subcommand("qec-interleaved", "XY-QAOA with periodic correction on every vertex");
  add_common(interleaved, f);
  add_layout(interleaved, f);
  interleaved->add_option("--period", f.correction_period, "Blocks between corrections");
  interleaved->add_flag("--lenient", f.lenient, "Accept data within distance 1 of a codeword");
  commands.push_back({interleaved, lpnc::ExperimentKind::kQecInterleaved, {"1e-3", "0,0.005,0.01", "flip-frame", 30}});

  int gen_n = 30;
  int gen_k = 3;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-graph", "Write a random k-regular graph as an edge list");
  gen->add_option("-n,--vertices", gen_n, "Vertex count");
  gen->add_option("-k,--degree", gen_k, "Degree");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--out", gen_out, "Output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const lpnc::Graph graph = lpnc::generate_regular_graph(gen_n, gen_k, gen_seed);
      if (gen_out.empty()) {
        lpnc::write_edge_list(std::cout, graph);
      } else {
        std::ofstream out(gen_out);
        if (!out) {
          throw std::runtime_error("cannot open output file '" + gen_out + "'");
        }
        lpnc::write_edge_list(out, graph);
      }
      return 0;
    }
    for (const Command& c : commands) {
      if (c.app->parsed()) {
        return run(make_config(c.kind, f, c.defaults));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
