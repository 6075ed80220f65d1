// SPDX-License-Identifier: Apache-2.0
#include "occsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "occsim/error.hpp"

namespace occsim {

namespace {

void require_shared_support(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (p.support != q.support) {
    fail(ErrorCode::SupportMismatch, "distributions are defined on different supports");
  }
  if (p.mass.size() != p.support.size() || q.mass.size() != q.support.size()) {
    fail(ErrorCode::InvalidArgument, "support and mass lengths differ");
  }
}

}  // namespace

double max_js_distance() { return std::sqrt(kMaxJsDivergence); }

double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_shared_support(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    const double pi = p.mass[i];
    if (pi == 0.0) continue;
    const double qi = q.mass[i];
    if (qi == 0.0) {
      fail(ErrorCode::AbsoluteContinuityViolation,
           "q('" + p.support[i] + "') = 0 while p('" + p.support[i] + "') > 0");
    }
    sum += pi * std::log(pi / qi);
  }
  // Gibbs: mathematically >= 0; rounding may produce -1e-17-ish noise.
  return std::max(sum, 0.0);
}

double js_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_shared_support(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    const double pi = p.mass[i];
    const double qi = q.mass[i];
    const double mi = 0.5 * (pi + qi);
    // The mixture dominates both components, so no continuity error can occur.
    if (pi > 0.0) sum += 0.5 * pi * std::log(pi / mi);
    if (qi > 0.0) sum += 0.5 * qi * std::log(qi / mi);
  }
  return std::max(sum, 0.0);
}

double js_distance(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  return std::sqrt(js_divergence(p, q));
}

double njsd(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  const double value = js_distance(p, q) / max_js_distance();
  return std::clamp(value, 0.0, 1.0);
}

void HistogramSpec::validate() const {
  if (bin_edges.size() < 2) fail(ErrorCode::InvalidArgument, "histogram needs at least 2 bin edges");
  for (std::size_t i = 1; i < bin_edges.size(); ++i) {
    if (!(bin_edges[i] > bin_edges[i - 1])) {
      fail(ErrorCode::InvalidArgument, "histogram bin edges must be strictly increasing");
    }
  }
}

HistogramSpec HistogramSpec::uniform(double bin_width_minutes, double max_minutes, OverflowPolicy policy) {
  if (!(bin_width_minutes > 0.0) || !(max_minutes > bin_width_minutes / 2)) {
    fail(ErrorCode::InvalidArgument, "invalid uniform histogram parameters");
  }
  HistogramSpec spec;
  spec.overflow_policy = policy;
  for (double edge = 0.0; edge < max_minutes; edge += bin_width_minutes) spec.bin_edges.push_back(edge);
  spec.bin_edges.push_back(max_minutes);
  return spec;
}

DiscreteDistribution histogram(const std::vector<double>& samples, const HistogramSpec& spec) {
  spec.validate();
  if (samples.empty()) fail(ErrorCode::EmptySamples, "no samples to histogram");

  const std::size_t bins = spec.bin_count();
  std::vector<double> counts(bins, 0.0);
  for (double sample : samples) {
    if (sample < spec.bin_edges.front()) {
      fail(ErrorCode::SampleOutOfRange,
           "sample " + std::to_string(sample) + " below first bin edge");
    }
    if (sample >= spec.bin_edges.back()) {
      if (spec.overflow_policy == OverflowPolicy::Error) {
        fail(ErrorCode::SampleOutOfRange,
             "sample " + std::to_string(sample) + " beyond last bin edge");
      }
      counts[bins - 1] += 1.0;
      continue;
    }
    const auto it = std::upper_bound(spec.bin_edges.begin(), spec.bin_edges.end(), sample);
    counts[static_cast<std::size_t>(it - spec.bin_edges.begin()) - 1] += 1.0;
  }

  DiscreteDistribution dist;
  dist.support.reserve(bins);
  dist.mass.reserve(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    char label[64];
    std::snprintf(label, sizeof(label), "[%g,%g)", spec.bin_edges[b], spec.bin_edges[b + 1]);
    dist.support.emplace_back(label);
    dist.mass.push_back(counts[b] / static_cast<double>(samples.size()));
  }
  return dist;
}

}  // namespace occsim
