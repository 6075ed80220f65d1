// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "occsim/chain.hpp"
#include "occsim/rng.hpp"
#include "occsim/trace.hpp"

namespace occsim {

enum class InitialStatePolicy { EmpiricalMidnight, Fixed };

struct SimulationConfig {
  int n_days = 1;
  std::uint64_t seed = 0;
  InitialStatePolicy initial_state_policy = InitialStatePolicy::EmpiricalMidnight;
  int fixed_initial_state = 0;
  int output_step_minutes = 1;  // must divide kSlotMinutes

  void validate(const InhomogeneousModel& model) const;
};

// One continuous-time jump of a sampled day: the process occupies `state`
// from `time` (minutes, fractional) until the next event.
struct PathEvent {
  double time = 0.0;
  int state = 0;
};

// Samples one day of the semi-Markov process as its exact event sequence.
// Holding times are exponential in the current slot's rate; crossing a slot
// boundary re-draws the residual from the new slot's rate (memoryless
// restart) and applies the boundary remap. Boundary crossings with an
// unchanged state are not recorded as events.
std::vector<PathEvent> sample_day_events(const InhomogeneousModel& model, RngStream& rng,
                                         const SimulationConfig& config);

// Discretizes a sampled day onto the 1-minute grid of representative counts.
DayTrace sample_day(const InhomogeneousModel& model, RngStream& rng, const SimulationConfig& config);

// n_days independent day traces; day i draws from RngStream(seed, i), so
// ensembles are reproducible and order-independent. Days are dated on a
// synthetic weekday calendar (consecutive weekdays from a fixed Monday) so
// that exported ensembles survive weekday filtering and overnight spells
// stitch the same way measured data does.
std::vector<DayTrace> sample_ensemble(const InhomogeneousModel& model, const SimulationConfig& config);

// First date of the synthetic calendar (a Monday).
CivilDate synthetic_base_date();

}  // namespace occsim
