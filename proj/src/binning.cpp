// SPDX-License-Identifier: Apache-2.0
#include "occsim/binning.hpp"

#include <numeric>
#include <string>

#include "occsim/error.hpp"

namespace occsim {

int StateBinning::state_of(int count) const {
  if (count < 0 || count > max_count) {
    fail(ErrorCode::InvalidArgument,
         "count " + std::to_string(count) + " outside observed range 0.." + std::to_string(max_count));
  }
  return count_to_state[static_cast<std::size_t>(count)];
}

void StateBinning::validate() const {
  if (num_states < 1 || max_count < 0) fail(ErrorCode::InvalidArgument, "invalid binning dimensions");
  if (count_to_state.size() != static_cast<std::size_t>(max_count) + 1 ||
      representative_count.size() != static_cast<std::size_t>(num_states)) {
    fail(ErrorCode::InvalidArgument, "binning table sizes inconsistent");
  }
  if (num_states > max_count + 1) fail(ErrorCode::InvalidArgument, "more states than counts");
  if (count_to_state.front() != 0) fail(ErrorCode::InvalidArgument, "state 0 must contain count 0");
  int prev = 0;
  for (std::size_t c = 0; c < count_to_state.size(); ++c) {
    const int s = count_to_state[c];
    if (s < prev || s > prev + 1 || s >= num_states) {
      fail(ErrorCode::InvalidArgument, "count-to-state map must be monotone and contiguous");
    }
    prev = s;
  }
  if (prev != num_states - 1) fail(ErrorCode::InvalidArgument, "binning not surjective onto states");
  for (int s = 0; s < num_states; ++s) {
    const int r = representative_count[static_cast<std::size_t>(s)];
    if (r < 0 || r > max_count || count_to_state[static_cast<std::size_t>(r)] != s) {
      fail(ErrorCode::InvalidArgument, "representative count outside its own bin");
    }
  }
}

StateBinning StateBinning::identity(int max_count) {
  StateBinning binning;
  binning.max_count = max_count;
  binning.num_states = max_count + 1;
  binning.count_to_state.resize(static_cast<std::size_t>(max_count) + 1);
  binning.representative_count.resize(static_cast<std::size_t>(max_count) + 1);
  std::iota(binning.count_to_state.begin(), binning.count_to_state.end(), 0);
  std::iota(binning.representative_count.begin(), binning.representative_count.end(), 0);
  return binning;
}

std::vector<int> greedy_partition(const std::vector<double>& masses, int num_bins) {
  const int num_counts = static_cast<int>(masses.size());
  if (num_bins < 1) fail(ErrorCode::InvalidArgument, "need at least one bin");
  if (num_bins > num_counts) {
    fail(ErrorCode::TooFewCounts, std::to_string(num_bins) + " bins requested but only " +
                                       std::to_string(num_counts) + " counts observed");
  }

  double remaining = std::accumulate(masses.begin(), masses.end(), 0.0);
  std::vector<int> bin_starts;
  bin_starts.reserve(static_cast<std::size_t>(num_bins));
  int count = 0;
  for (int bin = 0; bin < num_bins; ++bin) {
    bin_starts.push_back(count);
    const int bins_left = num_bins - bin;
    if (bin == num_bins - 1) {
      // Last bin takes everything that remains.
      count = num_counts;
      break;
    }
    const double target = remaining / bins_left;
    double accumulated = 0.0;
    // Always take at least one count and leave one per later bin.
    do {
      accumulated += masses[static_cast<std::size_t>(count)];
      ++count;
    } while (accumulated < target - 1e-12 && num_counts - count > bins_left - 1);
    remaining -= accumulated;
  }
  return bin_starts;
}

std::vector<double> count_masses(const std::vector<DayTrace>& traces) {
  if (traces.empty()) fail(ErrorCode::EmptyTraces, "no traces");
  std::vector<double> tally;
  std::size_t total = 0;
  for (const auto& trace : traces) {
    for (int v : trace.values) {
      if (static_cast<std::size_t>(v) >= tally.size()) tally.resize(static_cast<std::size_t>(v) + 1, 0.0);
      tally[static_cast<std::size_t>(v)] += 1.0;
      ++total;
    }
  }
  if (total == 0) fail(ErrorCode::EmptyTraces, "traces contain no values");
  for (double& t : tally) t /= static_cast<double>(total);
  return tally;
}

StateBinning build_state_binning(const std::vector<DayTrace>& traces, int num_states) {
  if (num_states < 2) fail(ErrorCode::InvalidArgument, "need at least 2 states");
  const std::vector<double> masses = count_masses(traces);
  const int max_count = static_cast<int>(masses.size()) - 1;
  if (num_states > max_count + 1) {
    fail(ErrorCode::TooFewCounts, "M=" + std::to_string(num_states) + " exceeds N+1=" +
                                       std::to_string(max_count + 1) + " observed counts");
  }

  const std::vector<int> starts = greedy_partition(masses, num_states);

  StateBinning binning;
  binning.num_states = num_states;
  binning.max_count = max_count;
  binning.count_to_state.resize(masses.size());
  binning.representative_count.resize(static_cast<std::size_t>(num_states));
  for (int s = 0; s < num_states; ++s) {
    const int lo = starts[static_cast<std::size_t>(s)];
    const int hi = (s + 1 < num_states) ? starts[static_cast<std::size_t>(s) + 1] : max_count + 1;
    double bin_mass = 0.0;
    for (int c = lo; c < hi; ++c) {
      binning.count_to_state[static_cast<std::size_t>(c)] = s;
      bin_mass += masses[static_cast<std::size_t>(c)];
    }
    // Mass-weighted median count; plain median for zero-mass bins.
    int representative = (lo + hi - 1) / 2;
    if (bin_mass > 0.0) {
      double cumulative = 0.0;
      for (int c = lo; c < hi; ++c) {
        cumulative += masses[static_cast<std::size_t>(c)];
        if (cumulative >= 0.5 * bin_mass - 1e-12) {
          representative = c;
          break;
        }
      }
    }
    binning.representative_count[static_cast<std::size_t>(s)] = representative;
  }
  binning.validate();
  return binning;
}

}  // namespace occsim
