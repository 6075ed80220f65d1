// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "occsim/binning.hpp"
#include "occsim/trace.hpp"

namespace occsim {

// Maximal constant-state run of one binned day trace. `next_state` is the
// state jumped to at the end of the run; absent when the run is cut off by
// the end of the day (right-censored).
struct Sojourn {
  int state = 0;
  int entry_minute = 0;
  int duration_minutes = 0;
  bool left_censored = false;
  bool right_censored = false;
  std::optional<int> next_state;
};

// One homogeneous CTMC for one 30-minute slot: embedded jump-chain matrix
// plus per-state exponential holding rates (events per minute). Rows of
// states never observed leaving keep the self-absorbing fallback (diagonal 1,
// rate 0 = hold until the slot ends).
struct SlotModel {
  int slot_index = 0;
  std::vector<std::vector<double>> transition_matrix;  // M x M, row-stochastic
  std::vector<double> holding_rate;                    // per minute; 0 = never leaves
  std::vector<bool> support_mask;                      // state occupied at least once in slot
  std::vector<bool> fallback_row;                      // row uses the self-absorbing fallback

  int num_states() const { return static_cast<int>(holding_rate.size()); }
};

struct TrainingMetadata {
  int n_days = 0;
  std::string first_date;
  std::string last_date;
  double smoothing = 0.0;
  std::string tool_version;
  int fallback_rows = 0;   // rows without usable jump statistics
  int boundary_remaps = 0; // non-identity entries produced by conflict resolution
};

// Full-day inhomogeneous model: 48 stitched slot models plus binning,
// midnight state distribution and boundary remap tables.
struct InhomogeneousModel {
  std::string zone_id;
  StateBinning binning;
  std::vector<SlotModel> slots;  // exactly kSlotsPerDay
  std::vector<double> initial_state_distribution;  // empirical midnight states
  // remap[slot][state] -> state to occupy when entering `slot` in `state`;
  // identity for supported states. Filled by resolve_conflicts.
  std::vector<std::vector<int>> boundary_remap;
  TrainingMetadata training;
  bool resolved = false;

  int num_states() const { return binning.num_states; }
};

// Exposure/jump tallies behind the censoring-aware rate estimator: every
// moment spent in a state counts as exposure, every observed exit counts as
// a jump, and truncation boundaries simply stop contributing. The MLE
// jumps/exposure equals 1/mean on fully observed sojourns.
struct RateAccumulator {
  double exposure = 0.0;
  double jumps = 0.0;

  void add(double exposure_time, bool observed_exit) {
    exposure += exposure_time;
    if (observed_exit) jumps += 1.0;
  }
  // 0 when no exit was ever observed (hold-until-slot-end semantics).
  double rate() const { return (jumps > 0.0 && exposure > 0.0) ? jumps / exposure : 0.0; }
};

// Binned maximal-run decomposition of one day trace.
std::vector<Sojourn> extract_sojourns(const DayTrace& trace, const StateBinning& binning);

// The slot a jump is attributed to: the slot containing the last occupied
// minute before the change (a boundary-instant jump was generated by the
// earlier slot's hazard).
int jump_slot(const Sojourn& sojourn);

// Learns one slot's jump-chain matrix and holding rates from the pooled
// per-day sojourn sequences. Laplace smoothing is applied per cell over the
// columns of states observed in this slot.
SlotModel learn_slot_model(const std::vector<std::vector<Sojourn>>& day_sojourns, int slot_index,
                           double smoothing, int num_states);

// Fills the boundary remap tables: a state unsupported in a slot remaps to
// the supported state with the nearest representative count (ties toward the
// lower state). Idempotent.
void resolve_conflicts(InhomogeneousModel& model);

// Full learning pipeline: binning, sojourn extraction, 48 slot models,
// midnight distribution, conflict resolution.
InhomogeneousModel learn_model(const std::vector<DayTrace>& traces, int num_states, double smoothing);

// min(N+1, 8): keeps count-model matrices small by default.
int default_num_states(int max_count);

}  // namespace occsim
