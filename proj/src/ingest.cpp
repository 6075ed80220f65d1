// SPDX-License-Identifier: Apache-2.0
#include "occsim/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "occsim/error.hpp"

namespace occsim {

namespace {

std::string trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return std::string(text);
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = line.find(',', begin);
    if (comma == std::string::npos) {
      fields.push_back(trim(std::string_view(line).substr(begin)));
      break;
    }
    fields.push_back(trim(std::string_view(line).substr(begin, comma - begin)));
    begin = comma + 1;
  }
  return fields;
}

int parse_value_cell(const std::string& cell, std::size_t row) {
  int value = 0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(ErrorCode::MalformedRow, "row " + std::to_string(row) + ": '" + cell + "' is not an integer");
  }
  if (value < 0) {
    fail(ErrorCode::NegativeValue, "row " + std::to_string(row) + ": negative occupancy value " + cell);
  }
  return value;
}

Minute parse_timestamp_cell(const std::string& cell, std::size_t row) {
  try {
    return parse_timestamp(cell);
  } catch (const Error& e) {
    fail(ErrorCode::UnparseableTimestamp, "row " + std::to_string(row) + ": " + e.what());
  }
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

SourceFormat parse_source_format(const std::string& name) {
  if (name == "wide" || name == "wide_csv") return SourceFormat::WideCsv;
  if (name == "event" || name == "event_csv") return SourceFormat::EventCsv;
  fail(ErrorCode::InvalidArgument, "unknown source format '" + name + "' (expected wide or event)");
}

std::vector<OccupancyRecord> parse_records(std::istream& source, SourceFormat format) {
  std::string line;
  if (!read_line(source, line) || trim(line).empty()) {
    fail(ErrorCode::EmptyInput, "source has no header row");
  }
  const std::vector<std::string> header = split_csv_row(line);
  if (header.size() < 2) fail(ErrorCode::MalformedRow, "row 1: header needs at least 2 columns");
  if (format == SourceFormat::EventCsv && header.size() != 3) {
    fail(ErrorCode::MalformedRow, "row 1: event_csv header must be timestamp,zone,value");
  }

  std::vector<OccupancyRecord> records;
  std::size_t row = 1;
  while (read_line(source, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_row(line);
    if (fields.size() != header.size()) {
      fail(ErrorCode::MalformedRow, "row " + std::to_string(row) + ": expected " +
                                        std::to_string(header.size()) + " fields, got " +
                                        std::to_string(fields.size()));
    }
    const Minute ts = parse_timestamp_cell(fields[0], row);
    if (format == SourceFormat::WideCsv) {
      for (std::size_t col = 1; col < fields.size(); ++col) {
        if (fields[col].empty()) continue;  // missing sample
        records.push_back({ts, header[col], parse_value_cell(fields[col], row)});
      }
    } else {
      if (fields[1].empty()) {
        fail(ErrorCode::MalformedRow, "row " + std::to_string(row) + ": empty zone id");
      }
      records.push_back({ts, fields[1], parse_value_cell(fields[2], row)});
    }
  }

  // Stable, so same-minute events keep file order (last one wins downstream).
  std::stable_sort(records.begin(), records.end(), [](const OccupancyRecord& a, const OccupancyRecord& b) {
    if (a.zone_id != b.zone_id) return a.zone_id < b.zone_id;
    return a.timestamp < b.timestamp;
  });
  return records;
}

std::vector<OccupancyRecord> parse_records_file(const std::string& path, SourceFormat format) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  return parse_records(in, format);
}

std::vector<ZoneSeries> regularize(const std::vector<OccupancyRecord>& records, const IngestOptions& options,
                                   IngestDiagnostics* diagnostics) {
  if (records.empty()) fail(ErrorCode::EmptyInput, "no records to regularize");
  const int step = options.grid_step_minutes;
  if (step <= 0 || kMinutesPerDay % step != 0) {
    fail(ErrorCode::InvalidArgument, "grid step must be a positive divisor of 1440 minutes");
  }
  if (options.initial_value < 0) fail(ErrorCode::InvalidArgument, "initial value must be non-negative");
  if (options.gap_threshold <= 0) fail(ErrorCode::InvalidArgument, "gap threshold must be positive");

  auto grid_floor = [step](Minute t) {
    Minute r = t % step;
    if (r < 0) r += step;
    return t - r;
  };
  auto grid_ceil = [&](Minute t) {
    const Minute g = grid_floor(t);
    return g == t ? g : g + step;
  };

  std::vector<ZoneSeries> result;
  std::size_t begin = 0;
  while (begin < records.size()) {
    std::size_t end = begin;
    while (end < records.size() && records[end].zone_id == records[begin].zone_id) ++end;

    ZoneSeries series;
    series.zone_id = records[begin].zone_id;
    series.step_minutes = step;

    ZoneSeries::Segment segment;
    segment.start = day_of_minute(records[begin].timestamp) * kMinutesPerDay;
    Minute next_grid = segment.start;
    int value = options.initial_value;

    auto fill_through = [&](Minute limit) {
      for (; next_grid <= limit; next_grid += step) segment.values.push_back(value);
    };
    auto close_segment = [&]() {
      if (!segment.values.empty()) series.segments.push_back(std::move(segment));
      segment = ZoneSeries::Segment{};
    };

    Minute prev_ts = records[begin].timestamp;
    for (std::size_t i = begin; i < end; ++i) {
      const OccupancyRecord& rec = records[i];
      if (rec.timestamp - prev_ts > options.gap_threshold) {
        // Sensor outage: stop forward-filling at the last pre-gap record.
        fill_through(grid_floor(prev_ts));
        close_segment();
        segment.start = grid_ceil(rec.timestamp);
        next_grid = segment.start;
        if (diagnostics) diagnostics->gaps.push_back({series.zone_id, prev_ts, rec.timestamp});
      } else {
        fill_through(grid_ceil(rec.timestamp) - step);
      }
      value = rec.value;
      prev_ts = rec.timestamp;
    }
    fill_through(grid_floor(prev_ts));
    close_segment();

    result.push_back(std::move(series));
    begin = end;
  }
  return result;
}

ZoneSeries filter_weekdays(const ZoneSeries& series) {
  ZoneSeries out;
  out.zone_id = series.zone_id;
  out.step_minutes = series.step_minutes;

  const int step = series.step_minutes;
  for (const auto& segment : series.segments) {
    ZoneSeries::Segment current;
    Minute expected = 0;
    for (std::size_t i = 0; i < segment.values.size(); ++i) {
      const Minute g = segment.start + static_cast<Minute>(i) * step;
      if (is_weekend(day_of_minute(g))) continue;
      if (current.values.empty() || g != expected) {
        if (!current.values.empty()) out.segments.push_back(std::move(current));
        current = ZoneSeries::Segment{};
        current.start = g;
      }
      current.values.push_back(segment.values[i]);
      expected = g + step;
    }
    if (!current.values.empty()) out.segments.push_back(std::move(current));
  }
  return out;
}

std::vector<DayTrace> split_days(const ZoneSeries& series, IngestDiagnostics* diagnostics) {
  const int step = series.step_minutes;
  if (step <= 0 || kMinutesPerDay % step != 0) {
    fail(ErrorCode::InvalidArgument, "grid step must be a positive divisor of 1440 minutes");
  }
  const std::size_t points_per_day = static_cast<std::size_t>(kMinutesPerDay / step);

  std::vector<DayTrace> traces;
  for (const auto& segment : series.segments) {
    const Minute seg_end = segment.start + static_cast<Minute>(segment.values.size()) * step;
    std::int64_t day = day_of_minute(segment.start);
    for (; day * kMinutesPerDay < seg_end; ++day) {
      const Minute day_start = day * kMinutesPerDay;
      const Minute day_end = day_start + kMinutesPerDay;
      if (segment.start <= day_start && seg_end >= day_end) {
        DayTrace trace;
        trace.date = civil_from_days(day);
        trace.zone_id = series.zone_id;
        trace.values.reserve(kMinutesPerDay);
        const std::size_t offset = static_cast<std::size_t>((day_start - segment.start) / step);
        for (std::size_t p = 0; p < points_per_day; ++p) {
          for (int r = 0; r < step; ++r) trace.values.push_back(segment.values[offset + p]);
        }
        traces.push_back(std::move(trace));
      } else if (diagnostics) {
        const Minute covered_from = std::max(segment.start, day_start);
        const Minute covered_to = std::min(seg_end, day_end);
        diagnostics->partial_days_dropped += 1;
        diagnostics->partial_points_dropped += static_cast<std::size_t>((covered_to - covered_from) / step);
      }
    }
  }
  return traces;
}

int max_value(const std::vector<DayTrace>& traces) {
  int max = 0;
  for (const auto& trace : traces) {
    for (int v : trace.values) max = std::max(max, v);
  }
  return max;
}

}  // namespace occsim
