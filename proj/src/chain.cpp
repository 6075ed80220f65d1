// SPDX-License-Identifier: Apache-2.0
#include "occsim/chain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "occsim/error.hpp"
#include "occsim/version.hpp"

namespace occsim {

std::vector<Sojourn> extract_sojourns(const DayTrace& trace, const StateBinning& binning) {
  if (trace.values.size() != static_cast<std::size_t>(kMinutesPerDay)) {
    fail(ErrorCode::ShapeMismatch, "day trace must hold " + std::to_string(kMinutesPerDay) + " values");
  }
  std::vector<Sojourn> sojourns;
  int run_state = binning.state_of(trace.values.front());
  int run_start = 0;
  for (int minute = 1; minute <= kMinutesPerDay; ++minute) {
    const int state =
        (minute < kMinutesPerDay) ? binning.state_of(trace.values[static_cast<std::size_t>(minute)]) : -1;
    if (state == run_state) continue;
    Sojourn sojourn;
    sojourn.state = run_state;
    sojourn.entry_minute = run_start;
    sojourn.duration_minutes = minute - run_start;
    sojourn.left_censored = (run_start == 0);
    sojourn.right_censored = (minute == kMinutesPerDay);
    if (!sojourn.right_censored) sojourn.next_state = state;
    sojourns.push_back(sojourn);
    run_state = state;
    run_start = minute;
  }
  return sojourns;
}

int jump_slot(const Sojourn& sojourn) {
  return (sojourn.entry_minute + sojourn.duration_minutes - 1) / kSlotMinutes;
}

SlotModel learn_slot_model(const std::vector<std::vector<Sojourn>>& day_sojourns, int slot_index,
                           double smoothing, int num_states) {
  if (slot_index < 0 || slot_index >= kSlotsPerDay) {
    fail(ErrorCode::InvalidArgument, "slot index out of range");
  }
  if (smoothing < 0.0) fail(ErrorCode::InvalidArgument, "smoothing must be non-negative");

  const std::size_t m = static_cast<std::size_t>(num_states);
  const int slot_start = slot_index * kSlotMinutes;
  const int slot_end = slot_start + kSlotMinutes;

  std::vector<std::vector<double>> jump_counts(m, std::vector<double>(m, 0.0));
  std::vector<RateAccumulator> rates(m);
  std::vector<bool> observed(m, false);

  for (const auto& day : day_sojourns) {
    for (const auto& sojourn : day) {
      const std::size_t y = static_cast<std::size_t>(sojourn.state);
      const int overlap = std::min(sojourn.entry_minute + sojourn.duration_minutes, slot_end) -
                          std::max(sojourn.entry_minute, slot_start);
      const bool jump_here = sojourn.next_state.has_value() && jump_slot(sojourn) == slot_index;
      if (overlap > 0) {
        observed[y] = true;
        rates[y].add(overlap, jump_here);
      }
      if (jump_here) {
        jump_counts[y][static_cast<std::size_t>(*sojourn.next_state)] += 1.0;
      }
    }
  }

  SlotModel slot;
  slot.slot_index = slot_index;
  slot.transition_matrix.assign(m, std::vector<double>(m, 0.0));
  slot.holding_rate.assign(m, 0.0);
  slot.support_mask.assign(m, false);
  slot.fallback_row.assign(m, false);

  for (std::size_t y = 0; y < m; ++y) {
    slot.support_mask[y] = observed[y];
    slot.holding_rate[y] = rates[y].rate();
    double total = 0.0;
    if (observed[y]) {
      for (std::size_t x = 0; x < m; ++x) {
        if (x == y || !observed[x]) continue;
        total += jump_counts[y][x] + smoothing;
      }
    }
    if (total > 0.0) {
      for (std::size_t x = 0; x < m; ++x) {
        if (x == y || !observed[x]) continue;
        slot.transition_matrix[y][x] = (jump_counts[y][x] + smoothing) / total;
      }
    } else {
      // No usable jump statistics: hold in place until the slot ends.
      slot.transition_matrix[y][y] = 1.0;
      slot.fallback_row[y] = true;
    }
  }
  return slot;
}

namespace {

int nearest_supported_state(const SlotModel& slot, const StateBinning& binning, int state) {
  int best = -1;
  int best_distance = 0;
  const int from = binning.representative_count[static_cast<std::size_t>(state)];
  for (int s = 0; s < slot.num_states(); ++s) {
    if (!slot.support_mask[static_cast<std::size_t>(s)]) continue;
    const int distance = std::abs(binning.representative_count[static_cast<std::size_t>(s)] - from);
    if (best < 0 || distance < best_distance) {
      best = s;
      best_distance = distance;
    }
    // Ties keep the earlier (lower) state.
  }
  return best;
}

}  // namespace

void resolve_conflicts(InhomogeneousModel& model) {
  if (model.slots.size() != static_cast<std::size_t>(kSlotsPerDay)) {
    fail(ErrorCode::ShapeMismatch, "model must hold " + std::to_string(kSlotsPerDay) + " slots");
  }
  const int m = model.num_states();
  model.boundary_remap.assign(static_cast<std::size_t>(kSlotsPerDay),
                              std::vector<int>(static_cast<std::size_t>(m), 0));
  int remaps = 0;
  for (int slot = 0; slot < kSlotsPerDay; ++slot) {
    const SlotModel& sm = model.slots[static_cast<std::size_t>(slot)];
    if (std::none_of(sm.support_mask.begin(), sm.support_mask.end(), [](bool b) { return b; })) {
      fail(ErrorCode::NoSupportedStates, "slot " + std::to_string(slot) + " supports no states");
    }
    for (int state = 0; state < m; ++state) {
      int target = state;
      if (!sm.support_mask[static_cast<std::size_t>(state)]) {
        target = nearest_supported_state(sm, model.binning, state);
        ++remaps;
      }
      model.boundary_remap[static_cast<std::size_t>(slot)][static_cast<std::size_t>(state)] = target;
    }
  }
  model.training.boundary_remaps = remaps;
  model.resolved = true;
}

InhomogeneousModel learn_model(const std::vector<DayTrace>& traces, int num_states, double smoothing) {
  if (traces.empty()) fail(ErrorCode::EmptyTraces, "no traces to learn from");

  InhomogeneousModel model;
  model.zone_id = traces.front().zone_id;
  for (const auto& trace : traces) {
    if (trace.zone_id != model.zone_id) {
      fail(ErrorCode::MixedZones, "traces mix zones '" + model.zone_id + "' and '" + trace.zone_id + "'");
    }
  }
  model.binning = build_state_binning(traces, num_states);

  std::vector<std::vector<Sojourn>> day_sojourns;
  day_sojourns.reserve(traces.size());
  model.initial_state_distribution.assign(static_cast<std::size_t>(num_states), 0.0);
  for (const auto& trace : traces) {
    day_sojourns.push_back(extract_sojourns(trace, model.binning));
    const int midnight_state = model.binning.state_of(trace.values.front());
    model.initial_state_distribution[static_cast<std::size_t>(midnight_state)] += 1.0;
  }
  for (double& p : model.initial_state_distribution) p /= static_cast<double>(traces.size());

  model.slots.reserve(static_cast<std::size_t>(kSlotsPerDay));
  int fallback_rows = 0;
  for (int slot = 0; slot < kSlotsPerDay; ++slot) {
    model.slots.push_back(learn_slot_model(day_sojourns, slot, smoothing, num_states));
    for (bool f : model.slots.back().fallback_row) fallback_rows += f ? 1 : 0;
  }

  auto dates = std::minmax_element(traces.begin(), traces.end(), [](const DayTrace& a, const DayTrace& b) {
    return days_from_civil(a.date) < days_from_civil(b.date);
  });
  model.training.n_days = static_cast<int>(traces.size());
  model.training.first_date = format_date(dates.first->date);
  model.training.last_date = format_date(dates.second->date);
  model.training.smoothing = smoothing;
  model.training.tool_version = kToolVersion;
  model.training.fallback_rows = fallback_rows;

  resolve_conflicts(model);
  return model;
}

int default_num_states(int max_count) { return std::min(max_count + 1, 8); }

}  // namespace occsim
