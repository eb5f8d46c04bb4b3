#pragma once

#include <cstdint>
#include <vector>

#include "ndopt/data.hpp"
#include "ndopt/losses.hpp"

namespace ndopt {

// Verification-only reference implementations. Everything here is written
// for transparency, not speed, and stays independent of the sort-based
// evaluators it checks.

struct OracleReport {
  double oracle_value = 0.0;
  double fast_value = 0.0;
  double max_abs_gap = 0.0;
  int trials = 0;
};

// Exact maximum of the structural objective by enumerating all feasible
// labelings (with the measure's cardinality constraint for Prec@k/PRBEP,
// unconstrained for F-measure). Guarded at t <= 20.
double brute_force_structural(const Sequence& seq, const WeightVector& w,
                              const MeasureSpec& m);

struct BruteForcePaucResult {
  double value = 0.0;
  std::vector<int> selected;  // ids of selected negatives, ascending
};

// Evaluates the pAUC surrogate with the top-beta indicator computed by
// explicit O(t^2) rank counting and a plain per-pair hinge sum.
BruteForcePaucResult brute_force_pauc(const Sequence& seq,
                                      const WeightVector& w, double beta,
                                      bool normalize);

struct UniformConvergenceReport {
  int s = 0;
  int trials = 0;
  std::vector<double> gaps;  // sup-gap over the model grid, one per trial
  double median_gap = 0.0;
};

// For each trial draws s points uniformly without replacement and measures
// sup over w_grid of |normalized loss(full) - normalized loss(sample)|.
UniformConvergenceReport empirical_uniform_convergence(
    const Dataset& d, const MeasureSpec& m, int s, int trials,
    const std::vector<WeightVector>& w_grid, std::uint64_t seed);

}  // namespace ndopt
