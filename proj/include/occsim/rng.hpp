// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "occsim/error.hpp"

namespace occsim {

// Deterministic, portable random stream. Stream derivation: mt19937_64
// seeded from std::seed_seq{seed_lo, seed_hi, stream_lo, stream_hi}; both
// seed_seq and mt19937_64 are fully specified by the standard, so ensembles
// are byte-identical across platforms. Draw helpers avoid the
// implementation-defined std::distribution algorithms for the same reason.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 significant bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Inversion sampling; rate in events per unit time, rate > 0.
  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

  // Index drawn proportionally to the (not necessarily normalized) weights.
  int categorical(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) fail(ErrorCode::InvalidArgument, "categorical weights sum to zero");
    double u = uniform01() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      u -= weights[i];
      if (u < 0.0) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;  // rounding edge
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace occsim
