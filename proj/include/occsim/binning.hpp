// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "occsim/trace.hpp"

namespace occsim {

// Maps raw occupancy counts 0..N onto model states 0..M-1. Bins are
// contiguous count ranges, monotone in the count, and state 0 always
// contains count 0.
struct StateBinning {
  std::vector<int> count_to_state;        // index = count, size N+1
  std::vector<int> representative_count;  // per state: mass-weighted median count
  int num_states = 0;                     // M
  int max_count = 0;                      // N

  int state_of(int count) const;
  void validate() const;

  static StateBinning identity(int max_count);

  friend bool operator==(const StateBinning&, const StateBinning&) = default;
};

// Greedy equal-mass partition of counts 0..masses.size()-1 into
// num_bins contiguous bins: a bin closes once its accumulated mass reaches
// (remaining mass) / (remaining bins), while always leaving at least one
// count for every later bin. Returns the first count of each bin.
std::vector<int> greedy_partition(const std::vector<double>& masses, int num_bins);

// Empirical per-count occurrence mass over every minute of every trace.
std::vector<double> count_masses(const std::vector<DayTrace>& traces);

// Builds the binning from the empirical count masses of the traces.
// Requires 2 <= M <= N+1 (TooFewCounts when M exceeds N+1).
StateBinning build_state_binning(const std::vector<DayTrace>& traces, int num_states);

}  // namespace occsim
