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

#ifndef LPNC_RNG_H_
#define LPNC_RNG_H_

#include <cmath>
#include <cstdint>
#include <limits>

namespace lpnc {

/// SplitMix64 generator. Small state, cheap to construct, which is what a
/// per-shot stream needs.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) without modulo bias. bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

/// Finalizer of SplitMix64, used to hash stream keys.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent stream for the (seed, counter, lane) triple. Results computed
/// from these streams depend only on the key, never on which thread ran the
/// shot or in what order.
inline SplitMix64 keyed_stream(std::uint64_t seed, std::uint64_t counter, std::uint64_t lane = 0) {
  std::uint64_t h = mix64(seed + 0x632be59bd9b4e019ULL);
  h = mix64(h ^ (counter + 0x9e3779b97f4a7c15ULL));
  h = mix64(h ^ (lane * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
  return SplitMix64(h);
}

/// Samples the number of failures before the next success of a Bernoulli(p)
/// sequence, which lets a simulator jump straight to the next noise event.
class GeometricGap {
 public:
  explicit GeometricGap(double p) : p_(p), log_q_(p > 0.0 && p < 1.0 ? std::log1p(-p) : 0.0) {}

  /// Returns the gap; saturates at UINT64_MAX when p == 0.
  std::uint64_t operator()(SplitMix64& rng) const {
    if (p_ <= 0.0) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    if (p_ >= 1.0) {
      return 0;
    }
    // 1 - u lies in (0, 1], so the log is finite.
    const double u = 1.0 - rng.uniform();
    const double g = std::floor(std::log(u) / log_q_);
    if (!(g < 1.8e19)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(g);
  }

 private:
  double p_;
  double log_q_;
};

}  // namespace lpnc

#endif  // LPNC_RNG_H_
