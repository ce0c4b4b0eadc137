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

#include "lpnc/analytic.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lpnc {

void NoiseModel::validate() const {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("eta must lie in [0, 1], got " + std::to_string(eta));
  }
  if (!(roe >= 0.0 && roe <= 0.5)) {
    throw std::invalid_argument("roe must lie in [0, 0.5], got " + std::to_string(roe));
  }
}

void SubsystemSpec::validate() const {
  if (kappa < 1 || kappa > 64) {
    throw std::invalid_argument("kappa must lie in [1, 64], got " + std::to_string(kappa));
  }
  if (particle_number < 0 || particle_number > kappa) {
    throw std::invalid_argument("particle number " + std::to_string(particle_number) +
                                " exceeds kappa " + std::to_string(kappa));
  }
  if (subsystems < 1) {
    throw std::invalid_argument("subsystem count must be >= 1");
  }
}

std::uint64_t SubsystemSpec::local_dimension() const { return binomial(kappa, particle_number); }

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("binomial arguments must be non-negative");
  }
  if (n > 64) {
    throw std::invalid_argument("exact binomial supports n <= 64");
  }
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  // r * (n - i) is divisible by (i + 1) at every step; the 128-bit
  // intermediate keeps the product exact up to C(64, 32).
  unsigned __int128 r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

void check_depth(int depth) {
  if (depth < 0) {
    throw std::invalid_argument("depth must be >= 0, got " + std::to_string(depth));
  }
}

}  // namespace

double bit_persistence(const NoiseModel& noise, int depth) {
  noise.validate();
  check_depth(depth);
  const double flip = noise.flip_probability();
  const double keep = 1.0 - flip;
  if (depth == 0 || flip == 0.0) {
    return 1.0;
  }
  // keep >= 1/3 always, so only flip == 0 needs the shortcut above.
  const int d = depth;
  const int mode = std::clamp(static_cast<int>(std::floor((d + 1) * flip)), 0, d);

  double even = 0.0;
  double total = 0.0;
  auto accumulate = [&](int j, double w) {
    total += w;
    if (j % 2 == 0) {
      even += w;
    }
  };

  accumulate(mode, 1.0);
  double w = 1.0;
  for (int j = mode; j < d; ++j) {
    w *= static_cast<double>(d - j) / static_cast<double>(j + 1) * (flip / keep);
    if (w == 0.0) {
      break;
    }
    accumulate(j + 1, w);
  }
  w = 1.0;
  for (int j = mode; j > 0; --j) {
    w *= static_cast<double>(j) / static_cast<double>(d - j + 1) * (keep / flip);
    if (w == 0.0) {
      break;
    }
    accumulate(j - 1, w);
  }
  return even / total;
}

double subspace_weight(const SubsystemSpec& spec, const NoiseModel& noise, int depth) {
  spec.validate();
  const double p = bit_persistence(noise, depth);
  const int n = spec.particle_number;
  const int holes = spec.kappa - n;
  const int max_pairs = std::min(n, holes);
  double c = 0.0;
  for (int j = 0; j <= max_pairs; ++j) {
    // j particles moved out and j holes filled keeps the weight at N.
    const double ways = static_cast<double>(binomial(n, j)) * static_cast<double>(binomial(holes, j));
    c += ways * std::pow(p, spec.kappa - 2 * j) * std::pow(1.0 - p, 2 * j);
  }
  return std::min(c, 1.0);
}

double feasible_probability(const SubsystemSpec& spec, const NoiseModel& noise, int depth) {
  return std::pow(subspace_weight(spec, noise, depth), spec.subsystems);
}

double log_feasible_probability(const SubsystemSpec& spec, const NoiseModel& noise, int depth) {
  return static_cast<double>(spec.subsystems) * std::log(subspace_weight(spec, noise, depth));
}

double mixed_state_baseline(const SubsystemSpec& spec) {
  spec.validate();
  const double local = std::ldexp(static_cast<double>(spec.local_dimension()), -spec.kappa);
  return std::pow(local, spec.subsystems);
}

}  // namespace lpnc
