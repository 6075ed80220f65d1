// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "occsim/binning.hpp"
#include "occsim/metrics.hpp"
#include "occsim/trace.hpp"

namespace occsim {

// Daily-average occupancy statistics of one ensemble: per minute, the
// empirical distribution over binned states across days.
struct OccupancyProfile {
  std::string zone_id;
  int n_days = 0;
  std::vector<std::vector<double>> per_minute_state_probs;  // kMinutesPerDay x M

  int num_states() const {
    return per_minute_state_probs.empty() ? 0 : static_cast<int>(per_minute_state_probs.front().size());
  }
};

struct EvaluationFlag {
  std::string statistic;  // "timeseries_njsd" or "duration_njsd"
  int index = 0;          // minute or state
  double value = 0.0;
};

struct DurationComparison {
  DiscreteDistribution measured;
  DiscreteDistribution predicted;
  double njsd = 0.0;
  std::size_t measured_samples = 0;
  std::size_t predicted_samples = 0;
  bool one_sided = false;  // spells exist on only one side; njsd pinned at 1
};

struct EvaluationReport {
  std::string zone_id;
  int measured_days = 0;
  int predicted_days = 0;
  std::vector<double> timeseries_njsd;                        // per minute, categorical rows
  std::vector<std::vector<double>> per_state_timeseries_njsd; // M x kMinutesPerDay, Bernoulli rows
  std::map<int, DurationComparison> duration;                 // per state
  double pass_threshold = 0.15;
  std::vector<EvaluationFlag> flags;
};

// Per-minute empirical state distribution across days. All traces must share
// one zone and every count must fall inside the binning's range.
OccupancyProfile occupancy_profile(const std::vector<DayTrace>& traces, const StateBinning& binning);

// Per-minute NJSD between the two profiles' categorical rows.
std::vector<double> timeseries_njsd(const OccupancyProfile& measured, const OccupancyProfile& predicted);

// Uncensored sojourn durations (minutes) of one state pooled across days.
// Runs touching midnight are stitched with the adjacent calendar day's
// continuation when one exists (same state, dates one day apart); spells
// still open at a non-adjacent boundary or at the data edges are excluded.
std::vector<double> uncensored_durations(const std::vector<DayTrace>& traces, const StateBinning& binning,
                                         int state);

// Histogram of the pooled uncensored durations of one state. Throws
// Error(NoSojourns) when the state has no uncensored spell.
DiscreteDistribution duration_distribution(const std::vector<DayTrace>& traces, const StateBinning& binning,
                                           int state, const HistogramSpec& spec);

// Full measured-vs-predicted comparison for one zone: categorical and
// per-state time-series NJSD plus per-state duration NJSD, flagging every
// statistic above the threshold.
EvaluationReport evaluate_zone(const std::vector<DayTrace>& measured, const std::vector<DayTrace>& predicted,
                               const StateBinning& binning, const HistogramSpec& spec, double threshold);

}  // namespace occsim
