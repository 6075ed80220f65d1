// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "occsim/distribution.hpp"

namespace occsim {

// Natural-log units throughout; the sqrt(ln 2) ceiling of the JS distance
// holds only in nats.
inline constexpr double kMaxJsDivergence = 0.69314718055994530942;  // ln 2

double max_js_distance();  // sqrt(ln 2)

// Kullback-Leibler divergence sum p(x) ln(p(x)/q(x)), with 0 ln(0/q) = 0.
// Requires identical supports and absolute continuity (q(x)=0 => p(x)=0).
double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

// Jensen-Shannon divergence (KL of each against the equal mixture), in [0, ln 2].
double js_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

// sqrt of the JS divergence, a metric bounded by sqrt(ln 2).
double js_distance(const DiscreteDistribution& p, const DiscreteDistribution& q);

// JS distance normalized by its ceiling, in [0, 1].
double njsd(const DiscreteDistribution& p, const DiscreteDistribution& q);

enum class OverflowPolicy { ClampToLastBin, Error };

struct HistogramSpec {
  std::vector<double> bin_edges;  // strictly increasing, at least 2 entries
  OverflowPolicy overflow_policy = OverflowPolicy::ClampToLastBin;

  void validate() const;
  std::size_t bin_count() const { return bin_edges.size() - 1; }

  // Uniform bins [0, max_minutes) of the given width; the module default for
  // sojourn durations is 10-minute bins spanning a full day.
  static HistogramSpec uniform(double bin_width_minutes, double max_minutes,
                               OverflowPolicy policy = OverflowPolicy::ClampToLastBin);
  static HistogramSpec default_duration() { return uniform(10.0, 1440.0); }
};

// Normalized bin counts over left-closed right-open bins [e_i, e_{i+1}).
// Samples below the first edge always raise SampleOutOfRange; samples at or
// beyond the last edge follow the overflow policy.
DiscreteDistribution histogram(const std::vector<double>& samples, const HistogramSpec& spec);

}  // namespace occsim
