// SPDX-License-Identifier: Apache-2.0
#include "occsim/simulate.hpp"

#include <cmath>
#include <string>

#include "occsim/error.hpp"

namespace occsim {

void SimulationConfig::validate(const InhomogeneousModel& model) const {
  if (n_days < 1) fail(ErrorCode::InvalidArgument, "n_days must be at least 1");
  if (output_step_minutes < 1 || kSlotMinutes % output_step_minutes != 0) {
    fail(ErrorCode::InvalidArgument, "output step must divide the 30-minute slot");
  }
  if (initial_state_policy == InitialStatePolicy::Fixed &&
      (fixed_initial_state < 0 || fixed_initial_state >= model.num_states())) {
    fail(ErrorCode::InvalidArgument, "fixed initial state out of range");
  }
}

namespace {

void require_resolved(const InhomogeneousModel& model) {
  if (!model.resolved || model.boundary_remap.size() != static_cast<std::size_t>(kSlotsPerDay)) {
    fail(ErrorCode::UnresolvedModel, "model has not passed conflict resolution");
  }
  if (model.slots.size() != static_cast<std::size_t>(kSlotsPerDay)) {
    fail(ErrorCode::UnresolvedModel, "model does not hold " + std::to_string(kSlotsPerDay) + " slots");
  }
}

int draw_initial_state(const InhomogeneousModel& model, RngStream& rng, const SimulationConfig& config) {
  if (config.initial_state_policy == InitialStatePolicy::Fixed) return config.fixed_initial_state;
  return rng.categorical(model.initial_state_distribution);
}

}  // namespace

std::vector<PathEvent> sample_day_events(const InhomogeneousModel& model, RngStream& rng,
                                         const SimulationConfig& config) {
  require_resolved(model);
  config.validate(model);

  std::vector<PathEvent> events;
  int state = model.boundary_remap[0][static_cast<std::size_t>(draw_initial_state(model, rng, config))];
  events.push_back({0.0, state});

  double t = 0.0;
  int slot = 0;
  while (slot < kSlotsPerDay) {
    const SlotModel& sm = model.slots[static_cast<std::size_t>(slot)];
    const double slot_end = static_cast<double>((slot + 1) * kSlotMinutes);
    const double rate = sm.holding_rate[static_cast<std::size_t>(state)];
    const double hold = (rate > 0.0) ? rng.exponential(rate) : std::numeric_limits<double>::infinity();
    if (t + hold >= slot_end) {
      // Memoryless restart: drop the residual, enter the next slot.
      t = slot_end;
      ++slot;
      if (slot >= kSlotsPerDay) break;
      const int remapped = model.boundary_remap[static_cast<std::size_t>(slot)][static_cast<std::size_t>(state)];
      if (remapped != state) {
        state = remapped;
        events.push_back({t, state});
      }
      continue;
    }
    t += hold;
    const int next = rng.categorical(sm.transition_matrix[static_cast<std::size_t>(state)]);
    if (next != state) {
      state = next;
      events.push_back({t, state});
    }
    // Self-jumps (fallback rows) re-enter the holding loop unchanged.
  }
  return events;
}

DayTrace sample_day(const InhomogeneousModel& model, RngStream& rng, const SimulationConfig& config) {
  const std::vector<PathEvent> events = sample_day_events(model, rng, config);

  DayTrace trace;
  trace.zone_id = model.zone_id;
  trace.date = synthetic_base_date();
  trace.values.assign(static_cast<std::size_t>(kMinutesPerDay), 0);

  const int step = config.output_step_minutes;
  std::size_t event_index = 0;
  int value = 0;
  for (int minute = 0; minute < kMinutesPerDay; ++minute) {
    if (minute % step == 0) {
      // State at the sampling instant; events at the instant take effect.
      while (event_index < events.size() && events[event_index].time <= static_cast<double>(minute)) {
        value = model.binning.representative_count[static_cast<std::size_t>(events[event_index].state)];
        ++event_index;
      }
    }
    trace.values[static_cast<std::size_t>(minute)] = value;
  }
  return trace;
}

std::vector<DayTrace> sample_ensemble(const InhomogeneousModel& model, const SimulationConfig& config) {
  require_resolved(model);
  config.validate(model);

  std::vector<DayTrace> ensemble;
  ensemble.reserve(static_cast<std::size_t>(config.n_days));
  for (int day = 0; day < config.n_days; ++day) {
    RngStream rng(config.seed, static_cast<std::uint64_t>(day));
    DayTrace trace = sample_day(model, rng, config);
    trace.date = advance_weekdays(synthetic_base_date(), day);
    ensemble.push_back(std::move(trace));
  }
  return ensemble;
}

CivilDate synthetic_base_date() { return CivilDate{2001, 1, 1}; }  // a Monday

}  // namespace occsim
