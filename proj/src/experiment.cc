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

#include "lpnc/experiment.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lpnc/analytic.h"
#include "lpnc/dense.h"
#include "lpnc/flip_frame.h"
#include "lpnc/graph.h"
#include "lpnc/qec.h"
#include "lpnc/rng.h"

namespace lpnc {

namespace {

template <typename Enum>
Enum parse_enum(const std::string& text, const std::vector<std::pair<std::string, Enum>>& names,
                const std::string& what) {
  std::string accepted;
  for (const auto& [name, value] : names) {
    if (name == text) {
      return value;
    }
    accepted += (accepted.empty() ? "" : ", ") + name;
  }
  throw std::invalid_argument("unknown " + what + " '" + text + "'; expected one of " + accepted);
}

const std::vector<std::pair<std::string, ExperimentKind>>& kind_names() {
  static const std::vector<std::pair<std::string, ExperimentKind>> kNames = {
      {"analytic-sweep", ExperimentKind::kAnalyticSweep},   {"feasibility-sim", ExperimentKind::kFeasibilitySim},
      {"mixer-bound", ExperimentKind::kMixerBound},         {"fig4", ExperimentKind::kMixerComparison},
      {"encoding-compare", ExperimentKind::kEncodingCompare}, {"qec-crossover", ExperimentKind::kQecCrossover},
      {"qec-interleaved", ExperimentKind::kQecInterleaved},
  };
  return kNames;
}

const std::vector<std::pair<std::string, Engine>>& engine_names() {
  static const std::vector<std::pair<std::string, Engine>> kNames = {
      {"analytic", Engine::kAnalytic}, {"flip-frame", Engine::kFlipFrame}, {"dense", Engine::kDense}};
  return kNames;
}

const std::vector<std::pair<std::string, DepthRule>>& rule_names() {
  static const std::vector<std::pair<std::string, DepthRule>> kNames = {{"paper", DepthRule::kPaper},
                                                                        {"scheduler", DepthRule::kScheduler}};
  return kNames;
}

const std::vector<std::pair<std::string, NoisePer>>& noise_per_names() {
  static const std::vector<std::pair<std::string, NoisePer>> kNames = {{"layer", NoisePer::kLayer},
                                                                       {"block", NoisePer::kBlock}};
  return kNames;
}

template <typename Enum>
std::string name_of(Enum value, const std::vector<std::pair<std::string, Enum>>& names) {
  for (const auto& [name, v] : names) {
    if (v == value) {
      return name;
    }
  }
  return "?";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    out.push_back(item);
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) {
    return {};
  }
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) {
    throw std::invalid_argument("trailing characters in '" + s + "'");
  }
  return v;
}

double to_real(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) {
    throw std::invalid_argument("trailing characters in '" + s + "'");
  }
  return v;
}

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string line;
  for (const std::string& f : fields) {
    line += (line.empty() ? "" : ",") + f;
  }
  return line;
}

std::vector<int> or_default(const std::vector<int>& grid, int first, int last, int step = 1) {
  if (!grid.empty()) {
    return grid;
  }
  std::vector<int> out;
  for (int v = first; v <= last; v += step) {
    out.push_back(v);
  }
  return out;
}

Graph experiment_graph(const ExperimentConfig& config) {
  if (!config.graph_file.empty()) {
    return read_edge_list_file(config.graph_file, config.subsystems);
  }
  return generate_regular_graph(config.subsystems, config.degree, config.seed);
}

XyQaoaOptions xy_options(const ExperimentConfig& config) {
  XyQaoaOptions o;
  o.phase_rule = config.phase_depth_rule;
  o.mixer_rule = config.mixer_depth_rule;
  o.seed = config.seed;
  return o;
}

std::string real_range(const std::vector<double>& v) {
  if (v.empty()) {
    return "empty";
  }
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return "min " + format_real(*lo) + " max " + format_real(*hi);
}

std::string run_row(const std::string& label, double eta, double roe, int depth, std::optional<int> blocks,
                    const RunResult& r) {
  return csv_row({label, format_real(eta), format_real(roe), std::to_string(depth),
                  blocks ? std::to_string(*blocks) : std::string{}, format_real(r.estimate),
                  format_real(r.standard_error), std::to_string(r.shots), std::to_string(r.seed)});
}

RunResult exact(double value, std::uint64_t seed) {
  RunResult r;
  r.estimate = value;
  r.seed = seed;
  return r;
}

// ---------------------------------------------------------------------------

ExperimentSummary analytic_sweep(const ExperimentConfig& config, std::ostream& csv) {
  const SubsystemSpec spec{config.kappa, config.particle_number, config.subsystems};
  std::vector<std::pair<std::optional<int>, int>> points;
  if (!config.routed_depth_file.empty()) {
    for (const auto& [b, d] : read_routed_depths_file(config.routed_depth_file)) {
      points.emplace_back(b, d);
    }
  } else if (!config.blocks.empty()) {
    const int per_block = xy_qaoa_block_depth(experiment_graph(config), spec, xy_options(config)).per_block();
    for (int b : config.blocks) {
      points.emplace_back(b, b * per_block);
    }
  } else {
    for (int d : or_default(config.depths, 0, 100)) {
      points.emplace_back(std::nullopt, d);
    }
  }
  ExperimentSummary summary;
  for (double eta : config.etas) {
    const NoiseModel noise{eta, 0.0};
    std::vector<double> values;
    for (const auto& [b, d] : points) {
      const double v = feasible_probability(spec, noise, d);
      values.push_back(v);
      csv << run_row("analytic", eta, 0.0, d, b, exact(v, config.seed)) << '\n';
      ++summary.rows;
    }
    summary.lines.push_back("eta " + format_real(eta) + ": " + real_range(values) + ", mixed-state value " +
                            format_real(mixed_state_baseline(spec)));
  }
  return summary;
}

ExperimentSummary feasibility_sim(const ExperimentConfig& config, std::ostream& csv) {
  const SubsystemSpec spec{config.kappa, config.particle_number, config.subsystems};
  const Graph graph = experiment_graph(config);
  const XyQaoaOptions options = xy_options(config);
  const Bitstring initial = lowest_feasible_bitstring(spec);

  // Each entry: (blocks, circuit). A depth grid uses prefixes of a circuit
  // long enough to cover the largest depth.
  std::vector<std::pair<std::optional<int>, LayeredCircuit>> circuits;
  SplitMix64 angle_rng = keyed_stream(config.seed, 0, 7);
  auto random_angles = [&](int n) {
    std::vector<double> a(static_cast<std::size_t>(n));
    for (double& x : a) {
      x = 2.0 * std::numbers::pi * angle_rng.uniform();
    }
    return a;
  };
  if (!config.depths.empty()) {
    const int per_block = xy_qaoa_block_depth(graph, spec, options).per_block();
    const int max_depth = *std::max_element(config.depths.begin(), config.depths.end());
    const int blocks = per_block > 0 ? (max_depth + per_block - 1) / per_block : 0;
    const LayeredCircuit full =
        build_xy_qaoa_circuit(graph, spec, blocks, random_angles(blocks), random_angles(blocks), options);
    for (int d : config.depths) {
      circuits.emplace_back(std::nullopt, full.prefix(d));
    }
  } else {
    for (int b : or_default(config.blocks, 1, 1)) {
      circuits.emplace_back(b, build_xy_qaoa_circuit(graph, spec, b, random_angles(b), random_angles(b), options));
    }
  }

  ExperimentSummary summary;
  const std::string label = to_string(config.engine);
  for (double eta : config.etas) {
    for (double roe : config.roes) {
      const NoiseModel noise{eta, roe};
      std::vector<double> values;
      for (const auto& [b, circuit] : circuits) {
        RunResult r;
        switch (config.engine) {
          case Engine::kAnalytic:
            r = exact(feasible_probability(spec, noise, circuit.noisy_layer_count()), config.seed);
            break;
          case Engine::kDense:
            r = exact(feasibility_expectation(dense_run(circuit, noise, DensityMatrix::basis_state(initial)), spec),
                      config.seed);
            break;
          case Engine::kFlipFrame: {
            FlipFrameOptions ff;
            ff.shots = config.shots;
            ff.seed = config.seed;
            ff.initial = initial;
            ff.valid = weight_predicate(spec);
            ff.threads = config.threads;
            r = flip_frame_run(circuit, noise, ff);
            break;
          }
        }
        values.push_back(r.estimate);
        csv << run_row(label, eta, roe, circuit.depth(), b, r) << '\n';
        ++summary.rows;
      }
      summary.lines.push_back(label + " eta " + format_real(eta) + " roe " + format_real(roe) + ": " +
                              real_range(values));
    }
  }
  return summary;
}

ExperimentSummary mixer_bound(const ExperimentConfig& config, std::ostream& csv) {
  ExperimentSummary summary;
  int violations = 0;
  double worst_margin = INFINITY;
  for (int i = 0; i < config.samples; ++i) {
    SplitMix64 rng = keyed_stream(config.seed, static_cast<std::uint64_t>(i), 3);
    const double beta_x = 2.0 * std::numbers::pi * rng.uniform();
    const double beta_xy = 2.0 * std::numbers::pi * rng.uniform();
    const double eta = 0.75 * rng.uniform();
    const MixerBound b = mixer_bound_check(beta_x, beta_xy, eta);
    violations += b.holds ? 0 : 1;
    worst_margin = std::min(worst_margin, b.rhs - b.lhs);
    csv << csv_row({format_real(beta_x), format_real(beta_xy), format_real(eta), format_real(b.lhs),
                    format_real(b.rhs), b.holds ? "1" : "0"})
        << '\n';
    ++summary.rows;
  }
  summary.lines.push_back(std::to_string(config.samples - violations) + "/" + std::to_string(config.samples) +
                          " triples satisfy the bound; smallest margin " + format_real(worst_margin));
  return summary;
}

ExperimentSummary mixer_comparison(const ExperimentConfig& config, std::ostream& csv) {
  MixerComparisonOptions options;
  options.alpha = config.alpha;
  options.noise_per = config.noise_per;
  const auto sets = reference_penalty_angle_sets();
  const auto rows = mixer_comparison_sweep(sets, config.etas, options);
  ExperimentSummary summary;
  int below = 0;
  for (const MixerComparisonRow& row : rows) {
    csv << run_row("xy", row.eta, 0.0, row.noisy_layers, 4, exact(row.xy, config.seed)) << '\n';
    bool all_below = true;
    for (std::size_t i = 0; i < row.x.size(); ++i) {
      csv << run_row("x" + std::to_string(i + 1), row.eta, 0.0, row.noisy_layers, 4, exact(row.x[i], config.seed))
          << '\n';
      all_below = all_below && row.x[i] <= row.xy + 1e-12;
    }
    below += all_below ? 1 : 0;
    summary.rows += 1 + row.x.size();
  }
  summary.lines.push_back("transverse-field curves at or below the XY curve at " + std::to_string(below) + "/" +
                          std::to_string(rows.size()) + " noise levels");
  return summary;
}

ExperimentSummary encoding_compare(const ExperimentConfig& config, std::ostream& csv) {
  const Graph graph = experiment_graph(config);
  const XyQaoaOptions options = xy_options(config);
  const SubsystemSpec one_hot{6, 1, graph.vertex_count()};
  const SubsystemSpec two_hot{4, 2, graph.vertex_count()};
  const int depth_one = xy_qaoa_block_depth(graph, one_hot, options).per_block();
  const int depth_two = xy_qaoa_block_depth(graph, two_hot, options).per_block();
  const std::vector<int> blocks = or_default(config.blocks, 1, 500);

  ExperimentSummary summary;
  summary.lines.push_back("per-block depth: one-hot " + std::to_string(depth_one) + ", two-hot " +
                          std::to_string(depth_two));
  for (double eta : config.etas) {
    for (double roe : config.roes) {
      const NoiseModel noise{eta, roe};
      std::vector<double> x;
      std::vector<double> a;
      std::vector<double> b;
      for (int p : blocks) {
        RunResult r1;
        RunResult r2;
        if (config.engine == Engine::kFlipFrame) {
          FlipFrameOptions ff;
          ff.shots = config.shots;
          ff.seed = config.seed;
          ff.threads = config.threads;
          ff.initial = lowest_feasible_bitstring(one_hot);
          ff.valid = weight_predicate(one_hot);
          r1 = flip_frame_run(idle_circuit(6 * graph.vertex_count(), p * depth_one), noise, ff);
          ff.initial = lowest_feasible_bitstring(two_hot);
          ff.valid = weight_predicate(two_hot);
          r2 = flip_frame_run(idle_circuit(4 * graph.vertex_count(), p * depth_two), noise, ff);
        } else {
          r1 = exact(feasible_probability(one_hot, noise, p * depth_one), config.seed);
          r2 = exact(feasible_probability(two_hot, noise, p * depth_two), config.seed);
        }
        csv << run_row("one-hot", eta, roe, p * depth_one, p, r1) << '\n';
        csv << run_row("two-hot", eta, roe, p * depth_two, p, r2) << '\n';
        summary.rows += 2;
        x.push_back(p);
        a.push_back(r1.estimate);
        b.push_back(r2.estimate);
      }
      const auto cross = find_crossover(x, a, b);
      summary.lines.push_back("eta " + format_real(eta) + ": two-hot overtakes one-hot at p = " +
                              (cross ? format_real(*cross) : std::string("none in grid")));
    }
  }
  return summary;
}

std::string qec_row(const std::string& variant, int p_or_d, double eta, double roe, const RunResult& r,
                    double nd_rate, int layers) {
  return csv_row({variant, std::to_string(p_or_d), format_real(eta), format_real(roe), format_real(r.estimate),
                  format_real(r.standard_error), std::to_string(r.shots), std::to_string(r.seed),
                  format_real(nd_rate), std::to_string(layers)});
}

QecRunOptions qec_options(const ExperimentConfig& config) {
  QecRunOptions o;
  o.shots = config.shots;
  o.seed = config.seed;
  o.lenient = config.lenient;
  o.reset_ancillas = config.reset_ancillas;
  o.threads = config.threads;
  return o;
}

ExperimentSummary qec_crossover(const ExperimentConfig& config, std::ostream& csv) {
  const std::vector<int> depths = or_default(config.depths, 0, 300, 10);
  const QecRunOptions options = qec_options(config);
  ExperimentSummary summary;
  for (double eta : config.etas) {
    for (double roe : config.roes) {
      const NoiseModel noise{eta, roe};
      std::vector<double> x;
      std::vector<double> a;
      std::vector<double> b;
      for (int d : depths) {
        const QecResult c = run_corrected_segment(d, noise, options);
        const QecResult u = run_uncorrected_segment(d, noise, options);
        csv << qec_row("corrected", d, eta, roe, c.result, c.nd_rate, c.layers) << '\n';
        csv << qec_row("uncorrected", d, eta, roe, u.result, 0.0, u.layers) << '\n';
        summary.rows += 2;
        x.push_back(d);
        a.push_back(u.result.estimate);
        b.push_back(c.result.estimate);
      }
      const auto cross = find_crossover(x, a, b);
      summary.lines.push_back("eta " + format_real(eta) + " roe " + format_real(roe) +
                              ": correction wins from d = " +
                              (cross ? format_real(*cross) : std::string("none in grid")));
    }
  }
  return summary;
}

ExperimentSummary qec_interleaved(const ExperimentConfig& config, std::ostream& csv) {
  const std::vector<int> blocks = or_default(config.blocks, 0, 30);
  InterleavedOptions options;
  options.vertices = config.subsystems;
  options.block_depth = formula_phase_depth(config.degree, Encoding::kOneHot) +
                        formula_mixer_depth(3, Encoding::kOneHot);
  if (config.phase_depth_rule == DepthRule::kScheduler || config.mixer_depth_rule == DepthRule::kScheduler ||
      !config.graph_file.empty()) {
    options.block_depth = xy_qaoa_block_depth(experiment_graph(config), {3, 1, config.subsystems},
                                              xy_options(config))
                              .per_block();
  }
  options.max_blocks = *std::max_element(blocks.begin(), blocks.end());
  options.correction_period = config.correction_period;
  options.run = qec_options(config);

  ExperimentSummary summary;
  summary.lines.push_back("block depth " + std::to_string(options.block_depth) + ", correction every " +
                          std::to_string(options.correction_period) + " blocks");
  for (double eta : config.etas) {
    for (double roe : config.roes) {
      const NoiseModel noise{eta, roe};
      const auto corrected = run_interleaved(noise, options, true);
      const auto uncorrected = run_interleaved(noise, options, false);
      double best_ratio = 0.0;
      int best_p = -1;
      for (int p : blocks) {
        const auto& c = corrected[static_cast<std::size_t>(p)];
        const auto& u = uncorrected[static_cast<std::size_t>(p)];
        csv << qec_row("corrected", p, eta, roe, c.total, c.nd_rate, c.layers) << '\n';
        csv << qec_row("uncorrected", p, eta, roe, u.total, 0.0, u.layers) << '\n';
        summary.rows += 2;
        if (u.total.estimate > 0.0 && c.total.estimate / u.total.estimate > best_ratio) {
          best_ratio = c.total.estimate / u.total.estimate;
          best_p = p;
        }
      }
      summary.lines.push_back("eta " + format_real(eta) + " roe " + format_real(roe) +
                              ": largest corrected/uncorrected ratio " + format_real(best_ratio) + " at p = " +
                              std::to_string(best_p));
    }
  }
  return summary;
}

}  // namespace

std::string to_string(ExperimentKind kind) { return name_of(kind, kind_names()); }
std::string to_string(Engine engine) { return name_of(engine, engine_names()); }
std::string to_string(DepthRule rule) { return name_of(rule, rule_names()); }
std::string to_string(NoisePer noise_per) { return name_of(noise_per, noise_per_names()); }

ExperimentKind parse_experiment_kind(const std::string& text) {
  return parse_enum(text, kind_names(), "experiment kind");
}
Engine parse_engine(const std::string& text) { return parse_enum(text, engine_names(), "engine"); }
DepthRule parse_depth_rule(const std::string& text) { return parse_enum(text, rule_names(), "depth rule"); }
NoisePer parse_noise_per(const std::string& text) { return parse_enum(text, noise_per_names(), "noise-per"); }

std::vector<int> parse_int_grid(const std::string& text) {
  std::vector<int> out;
  for (const std::string& raw : split(text, ',')) {
    const std::string item = trim(raw);
    if (item.empty()) {
      continue;
    }
    const auto parts = split(item, ':');
    try {
      if (parts.size() == 1) {
        out.push_back(to_int(parts[0]));
      } else if (parts.size() == 2 || parts.size() == 3) {
        const int first = to_int(parts[0]);
        const int last = to_int(parts[1]);
        const int step = parts.size() == 3 ? to_int(parts[2]) : 1;
        if (step <= 0 || last < first) {
          throw std::invalid_argument("empty range");
        }
        for (int v = first; v <= last; v += step) {
          out.push_back(v);
        }
      } else {
        throw std::invalid_argument("too many ':'");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("bad integer grid item '" + item + "': " + e.what());
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("integer grid '" + text + "' is empty");
  }
  return out;
}

std::vector<double> parse_real_grid(const std::string& text) {
  std::vector<double> out;
  for (const std::string& raw : split(text, ',')) {
    const std::string item = trim(raw);
    if (item.empty()) {
      continue;
    }
    const auto parts = split(item, ':');
    try {
      if (parts.size() == 1) {
        out.push_back(to_real(parts[0]));
      } else if (parts.size() == 3) {
        const double first = to_real(parts[0]);
        const double last = to_real(parts[1]);
        const int n = to_int(parts[2]);
        if (n < 1) {
          throw std::invalid_argument("point count must be positive");
        }
        for (int i = 0; i < n; ++i) {
          out.push_back(n == 1 ? first : first + (last - first) * i / (n - 1));
        }
      } else {
        throw std::invalid_argument("expected a number or a:b:n");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("bad real grid item '" + item + "': " + e.what());
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("real grid '" + text + "' is empty");
  }
  return out;
}

std::vector<std::pair<int, int>> read_routed_depths(std::istream& in) {
  std::vector<std::pair<int, int>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') {
      continue;
    }
    std::istringstream fields(t);
    int blocks = 0;
    int depth = 0;
    std::string rest;
    if (!(fields >> blocks >> depth) || (fields >> rest) || blocks < 0 || depth < 0) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'blocks depth', got '" + t + "'");
    }
    out.emplace_back(blocks, depth);
  }
  return out;
}

std::vector<std::pair<int, int>> read_routed_depths_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open routed-depth file '" + path + "'");
  }
  try {
    return read_routed_depths(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& field, const std::string& why) {
    throw std::invalid_argument("config field '" + field + "': " + why);
  };
  try {
    SubsystemSpec{kappa, particle_number, subsystems}.validate();
  } catch (const std::invalid_argument& e) {
    fail("kappa/particle_number/subsystems", e.what());
  }
  if (etas.empty()) {
    fail("eta", "grid is empty");
  }
  if (roes.empty()) {
    fail("roe", "grid is empty");
  }
  for (double eta : etas) {
    for (double roe : roes) {
      try {
        NoiseModel{eta, roe}.validate();
      } catch (const std::invalid_argument& e) {
        fail("eta/roe", e.what());
      }
    }
  }
  for (int d : depths) {
    if (d < 0) {
      fail("depth", "entries must be non-negative");
    }
  }
  for (int b : blocks) {
    if (b < 0) {
      fail("blocks", "entries must be non-negative");
    }
  }
  if (shots < 1) {
    fail("shots", "must be at least 1");
  }
  if (degree < 0) {
    fail("degree", "must be non-negative");
  }
  if (samples < 1) {
    fail("samples", "must be at least 1");
  }
  if (!(alpha > 0.0)) {
    fail("alpha", "must be positive");
  }
  if (correction_period < 1) {
    fail("correction_period", "must be at least 1");
  }
  const bool exact_engine = kind == ExperimentKind::kAnalyticSweep || kind == ExperimentKind::kMixerComparison ||
                            kind == ExperimentKind::kMixerBound ||
                            (kind == ExperimentKind::kEncodingCompare && engine != Engine::kFlipFrame) ||
                            (kind == ExperimentKind::kFeasibilitySim && engine != Engine::kFlipFrame);
  if (exact_engine) {
    for (double roe : roes) {
      if (roe != 0.0) {
        fail("roe", "readout error needs the flip-frame engine");
      }
    }
  }
  if (kind == ExperimentKind::kFeasibilitySim && engine == Engine::kDense &&
      kappa * subsystems > kMaxDenseQubits) {
    fail("engine", "dense engine is limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  if (kind == ExperimentKind::kEncodingCompare && engine == Engine::kDense) {
    fail("engine", "encoding comparison runs on the analytic or flip-frame engine");
  }
}

std::string csv_header(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kMixerBound:
      return "beta_x,beta_xy,eta,lhs,rhs,holds";
    case ExperimentKind::kQecCrossover:
    case ExperimentKind::kQecInterleaved:
      return "variant,p_or_d,eta,roe,estimate,stderr,shots,seed,nd_rate,layers";
    default:
      return "label,eta,roe,depth,blocks,estimate,stderr,shots,seed";
  }
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

ExperimentSummary run_experiment(const ExperimentConfig& config, std::ostream& csv) {
  config.validate();
  csv << csv_header(config.kind) << '\n';
  switch (config.kind) {
    case ExperimentKind::kAnalyticSweep:
      return analytic_sweep(config, csv);
    case ExperimentKind::kFeasibilitySim:
      return feasibility_sim(config, csv);
    case ExperimentKind::kMixerBound:
      return mixer_bound(config, csv);
    case ExperimentKind::kMixerComparison:
      return mixer_comparison(config, csv);
    case ExperimentKind::kEncodingCompare:
      return encoding_compare(config, csv);
    case ExperimentKind::kQecCrossover:
      return qec_crossover(config, csv);
    case ExperimentKind::kQecInterleaved:
      return qec_interleaved(config, csv);
  }
  throw std::logic_error("unhandled experiment kind");
}

ExperimentSummary run_experiment_to_file(const ExperimentConfig& config) {
  std::ofstream out(config.out);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + config.out + "'");
  }
  ExperimentSummary summary = run_experiment(config, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing output file '" + config.out + "'");
  }
  return summary;
}

std::optional<double> find_crossover(const std::vector<double>& x, const std::vector<double>& a,
                                     const std::vector<double>& b) {
  if (x.size() != a.size() || x.size() != b.size()) {
    throw std::invalid_argument("crossover inputs differ in length");
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (b[i] > a[i] && b[i - 1] <= a[i - 1]) {
      return x[i];
    }
  }
  return std::nullopt;
}

}  // namespace lpnc
