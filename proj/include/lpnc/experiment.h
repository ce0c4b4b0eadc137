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

#ifndef LPNC_EXPERIMENT_H_
#define LPNC_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpnc/builders.h"

namespace lpnc {

enum class ExperimentKind {
  kAnalyticSweep,
  kFeasibilitySim,
  kMixerBound,
  kMixerComparison,
  kEncodingCompare,
  kQecCrossover,
  kQecInterleaved,
};

enum class Engine { kAnalytic, kFlipFrame, kDense };

std::string to_string(ExperimentKind kind);
std::string to_string(Engine engine);
std::string to_string(DepthRule rule);
std::string to_string(NoisePer noise_per);
/// Inverse of to_string; throws std::invalid_argument naming the accepted values.
ExperimentKind parse_experiment_kind(const std::string& text);
Engine parse_engine(const std::string& text);
DepthRule parse_depth_rule(const std::string& text);
NoisePer parse_noise_per(const std::string& text);

/// Comma-separated items; each is an integer, `a:b` (inclusive) or `a:b:step`.
std::vector<int> parse_int_grid(const std::string& text);
/// Comma-separated items; each is a number or `a:b:n`, n evenly spaced points
/// from a to b inclusive.
std::vector<double> parse_real_grid(const std::string& text);

/// Two whitespace-separated columns `blocks depth` per line; '#' starts a
/// comment line.
std::vector<std::pair<int, int>> read_routed_depths(std::istream& in);
std::vector<std::pair<int, int>> read_routed_depths_file(const std::string& path);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kAnalyticSweep;
  int kappa = 3;
  int particle_number = 1;
  /// Subsystems n, which is the vertex count for graph experiments.
  int subsystems = 1;
  /// Regularity k of generated graphs.
  int degree = 3;
  std::vector<double> etas = {1e-3};
  std::vector<double> roes = {0.0};
  std::vector<int> depths;
  std::vector<int> blocks;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  Engine engine = Engine::kAnalytic;
  DepthRule mixer_depth_rule = DepthRule::kPaper;
  DepthRule phase_depth_rule = DepthRule::kPaper;
  NoisePer noise_per = NoisePer::kLayer;
  /// Edge list to use instead of a generated k-regular graph.
  std::string graph_file;
  /// `blocks depth` file for analytic sweeps over externally routed circuits.
  std::string routed_depth_file;
  /// Random triples drawn by the mixer-bound experiment.
  int samples = 1000;
  /// Penalty weight of the transverse-field circuits.
  double alpha = 1.0;
  int correction_period = 3;
  bool lenient = false;
  bool reset_ancillas = true;
  unsigned threads = 0;
  /// CSV destination; empty means the caller's stream.
  std::string out;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Header line of the CSV written for `kind`, without the newline.
std::string csv_header(ExperimentKind kind);

/// Formats with 12 significant digits.
std::string format_real(double value);

struct ExperimentSummary {
  std::size_t rows = 0;
  /// Human-readable lines: ranges, crossovers and check results.
  std::vector<std::string> lines;
};

/// Runs the experiment and writes its CSV (header first, rows in grid order)
/// to `csv`. Output depends only on the config.
ExperimentSummary run_experiment(const ExperimentConfig& config, std::ostream& csv);

/// Same, writing to config.out. Throws std::runtime_error with the path when
/// the file cannot be written.
ExperimentSummary run_experiment_to_file(const ExperimentConfig& config);

/// Smallest grid value at which `b` is strictly above `a` after having been
/// at or below it at the previous grid point; nullopt when there is none.
std::optional<double> find_crossover(const std::vector<double>& x, const std::vector<double>& a,
                                     const std::vector<double>& b);

}  // namespace lpnc

#endif  // LPNC_EXPERIMENT_H_
