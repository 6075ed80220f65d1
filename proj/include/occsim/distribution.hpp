// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace occsim {

// Normalized probability mass over a finite, ordered, uniquely-labelled
// support. The common currency of the metrics and evaluation code.
struct DiscreteDistribution {
  std::vector<std::string> support;
  std::vector<double> mass;

  // Throws Error(InvalidArgument) unless masses are non-negative, sum to 1
  // within 1e-9 and support labels are unique.
  void validate() const;

  std::size_t size() const { return mass.size(); }
};

// Distribution over state indices 0..M-1 with labels "0".."M-1".
DiscreteDistribution make_state_distribution(std::vector<double> mass);

// Pads both distributions onto the union of their supports (zero mass for
// labels a side lacks). Labels of `a` keep their order, new labels from `b`
// follow in `b`'s order.
void align_supports(DiscreteDistribution& a, DiscreteDistribution& b);

}  // namespace occsim
