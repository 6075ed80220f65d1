// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "occsim/trace.hpp"

namespace occsim {

enum class SourceFormat { WideCsv, EventCsv };

SourceFormat parse_source_format(const std::string& name);

struct IngestOptions {
  int grid_step_minutes = 1;       // must divide 1440
  int initial_value = 0;           // value assumed before a zone's first record
  Minute gap_threshold = 1440;     // record gaps longer than this are outages
};

struct IngestDiagnostics {
  struct Gap {
    std::string zone_id;
    Minute from = 0;
    Minute to = 0;
  };

  int partial_days_dropped = 0;
  std::size_t partial_points_dropped = 0;
  std::vector<Gap> gaps;
};

// Parses a CSV occupancy log.
//   wide_csv : header `timestamp,<zone_1>,...,<zone_k>`, one integer cell per
//              zone per row; empty cells are skipped.
//   event_csv: header `timestamp,zone,value`, one record per row.
// Returned records are sorted by zone, then timestamp (stable, so file order
// breaks ties within a minute).
std::vector<OccupancyRecord> parse_records(std::istream& source, SourceFormat format);
std::vector<OccupancyRecord> parse_records_file(const std::string& path, SourceFormat format);

// Forward-fills each zone's records onto a uniform grid. A zone's series
// starts at midnight of its first record's day (points before the first
// record carry options.initial_value) and ends at the last grid point not
// after its last record. Record gaps longer than options.gap_threshold are
// treated as sensor outages: the series gets a hole and the boundary days
// fall out later as partial days.
std::vector<ZoneSeries> regularize(const std::vector<OccupancyRecord>& records,
                                   const IngestOptions& options, IngestDiagnostics* diagnostics = nullptr);

// Removes all grid points that fall on Saturdays or Sundays.
ZoneSeries filter_weekdays(const ZoneSeries& series);

// Emits one DayTrace per complete calendar day. Partial boundary days are
// dropped and counted in the diagnostics. Grids coarser than 1 minute are
// expanded onto the 1-minute day grid by value repetition (forward fill).
std::vector<DayTrace> split_days(const ZoneSeries& series, IngestDiagnostics* diagnostics = nullptr);

}  // namespace occsim
