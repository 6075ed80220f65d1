// SPDX-License-Identifier: Apache-2.0
#include "occsim/distribution.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "occsim/error.hpp"

namespace occsim {

void DiscreteDistribution::validate() const {
  if (support.size() != mass.size()) {
    fail(ErrorCode::InvalidArgument, "support and mass lengths differ");
  }
  if (mass.empty()) fail(ErrorCode::InvalidArgument, "empty distribution");
  double sum = 0.0;
  for (double m : mass) {
    if (!(m >= 0.0)) fail(ErrorCode::InvalidArgument, "negative or NaN mass");
    sum += m;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    fail(ErrorCode::InvalidArgument, "masses sum to " + std::to_string(sum) + ", expected 1");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : support) {
    if (!seen.insert(label).second) {
      fail(ErrorCode::InvalidArgument, "duplicate support label '" + label + "'");
    }
  }
}

DiscreteDistribution make_state_distribution(std::vector<double> mass) {
  DiscreteDistribution dist;
  dist.support.reserve(mass.size());
  for (std::size_t s = 0; s < mass.size(); ++s) dist.support.push_back(std::to_string(s));
  dist.mass = std::move(mass);
  return dist;
}

void align_supports(DiscreteDistribution& a, DiscreteDistribution& b) {
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> labels = a.support;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  for (const auto& label : b.support) {
    if (index.emplace(label, labels.size()).second) labels.push_back(label);
  }

  auto padded = [&](const DiscreteDistribution& d) {
    std::vector<double> mass(labels.size(), 0.0);
    for (std::size_t i = 0; i < d.support.size(); ++i) mass[index.at(d.support[i])] = d.mass[i];
    return mass;
  };
  a.mass = padded(a);
  b.mass = padded(b);
  a.support = labels;
  b.support = std::move(labels);
}

}  // namespace occsim
