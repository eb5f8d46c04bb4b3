#include "ndopt/data.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace ndopt {

double LabeledPoint::norm2() const {
  double s = 0.0;
  for (const auto& [idx, v] : features) s += v * v;
  return std::sqrt(s);
}

int LabeledPoint::max_index() const {
  return features.empty() ? 0 : features.back().first;
}

void Dataset::finalize() {
  dimension = 0;
  n_pos = 0;
  n_neg = 0;
  for (const auto& p : points) {
    dimension = std::max(dimension, p.max_index());
    if (p.label > 0)
      ++n_pos;
    else
      ++n_neg;
  }
}

void Dataset::normalize_features() {
  double max_norm = 0.0;
  for (const auto& p : points) max_norm = std::max(max_norm, p.norm2());
  if (max_norm <= 0.0) return;
  for (auto& p : points)
    for (auto& [idx, v] : p.features) v /= max_norm;
}

double norm2(const WeightVector& w) {
  double s = 0.0;
  for (double v : w) s += v * v;
  return std::sqrt(s);
}

double score(const WeightVector& w, const LabeledPoint& x) {
  double s = 0.0;
  for (const auto& [idx, v] : x.features) {
    if (idx < 1 || idx > static_cast<int>(w.size()))
      throw std::out_of_range("feature index " + std::to_string(idx) +
                              " exceeds model dimension " +
                              std::to_string(w.size()));
    s += w[idx - 1] * v;
  }
  return s;
}

WeightVector project(WeightVector w, const FeasibleSet& set) {
  const double n = norm2(w);
  if (n > set.radius) {
    const double scale = set.radius / n;
    for (double& v : w) v *= scale;
  }
  return w;
}

StreamOrder shuffle(const Dataset& d, std::uint64_t seed) {
  StreamOrder order;
  order.seed = seed;
  order.permutation.resize(d.size());
  std::iota(order.permutation.begin(), order.permutation.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.permutation.begin(), order.permutation.end(), rng);
  return order;
}

}  // namespace ndopt
