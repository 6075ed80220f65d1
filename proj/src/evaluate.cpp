// SPDX-License-Identifier: Apache-2.0
#include "occsim/evaluate.hpp"

#include <algorithm>
#include <string>

#include "occsim/chain.hpp"
#include "occsim/error.hpp"

namespace occsim {

namespace {

void require_single_zone(const std::vector<DayTrace>& traces) {
  if (traces.empty()) fail(ErrorCode::EmptyTraces, "no traces");
  for (const auto& trace : traces) {
    if (trace.zone_id != traces.front().zone_id) {
      fail(ErrorCode::MixedZones,
           "traces mix zones '" + traces.front().zone_id + "' and '" + trace.zone_id + "'");
    }
  }
}

std::vector<const DayTrace*> by_date(const std::vector<DayTrace>& traces) {
  std::vector<const DayTrace*> sorted;
  sorted.reserve(traces.size());
  for (const auto& trace : traces) sorted.push_back(&trace);
  std::sort(sorted.begin(), sorted.end(), [](const DayTrace* a, const DayTrace* b) {
    return days_from_civil(a->date) < days_from_civil(b->date);
  });
  return sorted;
}

}  // namespace

OccupancyProfile occupancy_profile(const std::vector<DayTrace>& traces, const StateBinning& binning) {
  require_single_zone(traces);

  OccupancyProfile profile;
  profile.zone_id = traces.front().zone_id;
  profile.n_days = static_cast<int>(traces.size());
  profile.per_minute_state_probs.assign(static_cast<std::size_t>(kMinutesPerDay),
                                        std::vector<double>(static_cast<std::size_t>(binning.num_states), 0.0));
  for (const auto& trace : traces) {
    if (trace.values.size() != static_cast<std::size_t>(kMinutesPerDay)) {
      fail(ErrorCode::ShapeMismatch, "day trace must hold " + std::to_string(kMinutesPerDay) + " values");
    }
    for (int minute = 0; minute < kMinutesPerDay; ++minute) {
      const int state = binning.state_of(trace.values[static_cast<std::size_t>(minute)]);
      profile.per_minute_state_probs[static_cast<std::size_t>(minute)][static_cast<std::size_t>(state)] += 1.0;
    }
  }
  for (auto& row : profile.per_minute_state_probs) {
    for (double& p : row) p /= static_cast<double>(profile.n_days);
  }
  return profile;
}

std::vector<double> timeseries_njsd(const OccupancyProfile& measured, const OccupancyProfile& predicted) {
  if (measured.num_states() != predicted.num_states() ||
      measured.per_minute_state_probs.size() != predicted.per_minute_state_probs.size()) {
    fail(ErrorCode::ShapeMismatch, "profiles differ in state count or grid length");
  }
  std::vector<double> result;
  result.reserve(measured.per_minute_state_probs.size());
  for (std::size_t minute = 0; minute < measured.per_minute_state_probs.size(); ++minute) {
    result.push_back(njsd(make_state_distribution(measured.per_minute_state_probs[minute]),
                          make_state_distribution(predicted.per_minute_state_probs[minute])));
  }
  return result;
}

std::vector<double> uncensored_durations(const std::vector<DayTrace>& traces, const StateBinning& binning,
                                         int state) {
  require_single_zone(traces);
  if (state < 0 || state >= binning.num_states) fail(ErrorCode::InvalidArgument, "state out of range");

  const std::vector<const DayTrace*> days = by_date(traces);
  std::vector<double> durations;

  // Open spell carried across a midnight boundary. `valid_left` marks that
  // its start was an observed transition rather than a data edge.
  struct Pending {
    int state = -1;
    double duration = 0.0;
    bool valid_left = false;
  };
  Pending pending;
  std::int64_t prev_day = 0;
  bool have_prev = false;

  auto emit = [&](int spell_state, double duration, bool valid) {
    if (valid && spell_state == state) durations.push_back(duration);
  };

  for (const DayTrace* day : days) {
    const std::int64_t day_index = days_from_civil(day->date);
    const bool adjacent = have_prev && (day_index - prev_day == 1);
    const std::vector<Sojourn> sojourns = extract_sojourns(*day, binning);

    for (std::size_t i = 0; i < sojourns.size(); ++i) {
      const Sojourn& s = sojourns[i];
      const bool last = (i + 1 == sojourns.size());
      if (i == 0) {
        if (adjacent && pending.state == s.state) {
          pending.duration += s.duration_minutes;
        } else {
          if (adjacent && pending.state >= 0) {
            // The previous day ended at a real midnight transition.
            emit(pending.state, pending.duration, pending.valid_left);
          }
          pending = Pending{s.state, static_cast<double>(s.duration_minutes),
                            adjacent && pending.state >= 0};
        }
        if (!last) {
          emit(pending.state, pending.duration, pending.valid_left);
          pending = Pending{};
        }
      } else if (!last) {
        emit(s.state, s.duration_minutes, true);
      } else {
        pending = Pending{s.state, static_cast<double>(s.duration_minutes), true};
      }
    }
    prev_day = day_index;
    have_prev = true;
  }
  // Whatever is still open ends at the data edge: excluded.
  return durations;
}

DiscreteDistribution duration_distribution(const std::vector<DayTrace>& traces, const StateBinning& binning,
                                           int state, const HistogramSpec& spec) {
  const std::vector<double> durations = uncensored_durations(traces, binning, state);
  if (durations.empty()) {
    fail(ErrorCode::NoSojourns, "state " + std::to_string(state) + " has no uncensored sojourn");
  }
  return histogram(durations, spec);
}

EvaluationReport evaluate_zone(const std::vector<DayTrace>& measured, const std::vector<DayTrace>& predicted,
                               const StateBinning& binning, const HistogramSpec& spec, double threshold) {
  require_single_zone(measured);
  require_single_zone(predicted);
  if (measured.front().zone_id != predicted.front().zone_id) {
    fail(ErrorCode::MixedZones, "measured zone '" + measured.front().zone_id + "' vs predicted zone '" +
                                    predicted.front().zone_id + "'");
  }
  if (threshold < 0.0) fail(ErrorCode::InvalidArgument, "threshold must be non-negative");

  EvaluationReport report;
  report.zone_id = measured.front().zone_id;
  report.measured_days = static_cast<int>(measured.size());
  report.predicted_days = static_cast<int>(predicted.size());
  report.pass_threshold = threshold;

  const OccupancyProfile measured_profile = occupancy_profile(measured, binning);
  const OccupancyProfile predicted_profile = occupancy_profile(predicted, binning);
  report.timeseries_njsd = timeseries_njsd(measured_profile, predicted_profile);
  for (int minute = 0; minute < kMinutesPerDay; ++minute) {
    const double value = report.timeseries_njsd[static_cast<std::size_t>(minute)];
    if (value > threshold) report.flags.push_back({"timeseries_njsd", minute, value});
  }

  // Per-state Bernoulli curves: occupancy of one state against all others.
  const int m = binning.num_states;
  report.per_state_timeseries_njsd.assign(static_cast<std::size_t>(m),
                                          std::vector<double>(static_cast<std::size_t>(kMinutesPerDay), 0.0));
  for (int s = 0; s < m; ++s) {
    for (int minute = 0; minute < kMinutesPerDay; ++minute) {
      const double p = measured_profile.per_minute_state_probs[static_cast<std::size_t>(minute)]
                                                              [static_cast<std::size_t>(s)];
      const double q = predicted_profile.per_minute_state_probs[static_cast<std::size_t>(minute)]
                                                               [static_cast<std::size_t>(s)];
      report.per_state_timeseries_njsd[static_cast<std::size_t>(s)][static_cast<std::size_t>(minute)] =
          njsd(make_state_distribution({p, 1.0 - p}), make_state_distribution({q, 1.0 - q}));
    }
  }

  for (int s = 0; s < m; ++s) {
    const std::vector<double> measured_durations = uncensored_durations(measured, binning, s);
    const std::vector<double> predicted_durations = uncensored_durations(predicted, binning, s);
    if (measured_durations.empty() && predicted_durations.empty()) continue;

    DurationComparison comparison;
    comparison.measured_samples = measured_durations.size();
    comparison.predicted_samples = predicted_durations.size();
    if (measured_durations.empty() || predicted_durations.empty()) {
      // Spells on one side only: maximally distant by convention.
      comparison.one_sided = true;
      comparison.njsd = 1.0;
      const auto& present = measured_durations.empty() ? predicted_durations : measured_durations;
      auto hist = histogram(present, spec);
      (measured_durations.empty() ? comparison.predicted : comparison.measured) = hist;
      (measured_durations.empty() ? comparison.measured : comparison.predicted) =
          DiscreteDistribution{hist.support, std::vector<double>(hist.mass.size(), 0.0)};
    } else {
      comparison.measured = histogram(measured_durations, spec);
      comparison.predicted = histogram(predicted_durations, spec);
      align_supports(comparison.measured, comparison.predicted);
      comparison.njsd = njsd(comparison.measured, comparison.predicted);
    }
    if (comparison.njsd > threshold) report.flags.push_back({"duration_njsd", s, comparison.njsd});
    report.duration.emplace(s, std::move(comparison));
  }
  return report;
}

}  // namespace occsim
