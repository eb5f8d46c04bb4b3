#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ndopt {

// Sparse feature vector with a binary label. Feature indices are 1-based and
// strictly increasing within a point.
struct LabeledPoint {
  std::vector<std::pair<int, double>> features;
  int label = 1;  // +1 or -1

  double norm2() const;
  int max_index() const;
};

struct Dataset {
  std::vector<LabeledPoint> points;
  int dimension = 0;
  int n_pos = 0;
  int n_neg = 0;

  std::size_t size() const { return points.size(); }

  // Recomputes dimension and class counts from the point list.
  void finalize();

  // Scales every feature vector by 1 / max_i ||x_i||_2 so that all points
  // lie in the unit ball. A single global scale preserves relative geometry.
  void normalize_features();
};

using WeightVector = std::vector<double>;

// L2 ball of configurable radius; the feasible set for all solvers.
struct FeasibleSet {
  double radius = 100.0;
};

struct StreamOrder {
  std::vector<int> permutation;  // 0-based positions into the dataset
  std::uint64_t seed = 0;
};

double norm2(const WeightVector& w);

// Sparse-dense inner product w^T x. Throws std::out_of_range if a feature
// index exceeds the model dimension.
double score(const WeightVector& w, const LabeledPoint& x);

// Radial projection onto the L2 ball; identity for interior points.
WeightVector project(WeightVector w, const FeasibleSet& set);

// Deterministic uniform permutation of the dataset given the seed.
StreamOrder shuffle(const Dataset& d, std::uint64_t seed);

}  // namespace ndopt
