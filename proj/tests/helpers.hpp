#pragma once

#include <vector>

#include "ndopt/data.hpp"
#include "ndopt/losses.hpp"

namespace test_helpers {

// 1-D point x with the given label.
inline ndopt::LabeledPoint pt(double x, int label) {
  ndopt::LabeledPoint p;
  p.label = label;
  if (x != 0.0) p.features.emplace_back(1, x);
  return p;
}

inline ndopt::Dataset dataset_1d(
    const std::vector<std::pair<double, int>>& pts) {
  ndopt::Dataset d;
  for (const auto& [x, y] : pts) d.points.push_back(pt(x, y));
  d.finalize();
  d.dimension = 1;
  return d;
}

}  // namespace test_helpers
