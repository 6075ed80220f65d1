// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "occsim/civil_time.hpp"

namespace occsim {

// One raw log entry: occupancy value observed for a zone at an instant.
struct OccupancyRecord {
  Minute timestamp = 0;
  std::string zone_id;
  int value = 0;  // 0/1 for presence, 0..N for counts

  friend bool operator==(const OccupancyRecord&, const OccupancyRecord&) = default;
};

// Regularized piecewise-constant view of one zone's records on a uniform
// grid. Segments are time-ordered and non-overlapping; outage gaps and
// weekend filtering introduce holes between segments.
struct ZoneSeries {
  struct Segment {
    Minute start = 0;  // multiple of step_minutes
    std::vector<int> values;
  };

  std::string zone_id;
  int step_minutes = 1;
  std::vector<Segment> segments;

  std::size_t total_points() const {
    std::size_t n = 0;
    for (const auto& seg : segments) n += seg.values.size();
    return n;
  }
};

// One complete calendar day of one zone on the 1-minute grid.
struct DayTrace {
  CivilDate date;
  std::string zone_id;
  std::vector<int> values;  // exactly kMinutesPerDay entries

  friend bool operator==(const DayTrace&, const DayTrace&) = default;
};

int max_value(const std::vector<DayTrace>& traces);

}  // namespace occsim
