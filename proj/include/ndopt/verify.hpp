#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ndopt/data.hpp"
#include "ndopt/losses.hpp"

namespace ndopt {

struct CheckResult {
  std::string name;
  bool passed = true;
  double worst = 0.0;  // worst observed gap / ratio, check-specific
  double bound = 0.0;  // threshold the worst value is held against
  int trials = 0;
};

// Randomized-instance generators shared by the property checks.
LabeledPoint random_unit_point(std::mt19937_64& rng, int dim, int label);
WeightVector random_weights(std::mt19937_64& rng, int dim, double max_norm);
std::vector<LabeledPoint> random_points(std::mt19937_64& rng, int t, int dim,
                                        bool force_pos, bool force_neg);

// Sort-based structural surrogate vs exhaustive labeling enumeration.
CheckResult check_oracle_structural(const MeasureSpec& m, int trials,
                                    std::uint64_t seed);
// Sorted top-beta pAUC vs indicator-based brute force (value + selection).
CheckResult check_oracle_pauc(int trials, std::uint64_t seed);
// Sorted-list Lipschitz property: |g(z_{i_k}) - g(z'_{j_k})| <= 3||w - w'||.
CheckResult check_sorted_lipschitz(int trials, std::uint64_t seed);
// Instantaneous-penalty stability: |L_t(w) - L_t(w')| <= 8||w - w'||.
CheckResult check_penalty_stability(const MeasureSpec& m, int trials,
                                    std::uint64_t seed);
// Convexity certificate: value(w') >= value(w) + g(w)^T (w' - w) - 1e-8.
CheckResult check_subgradient_validity(const MeasureSpec& m, int trials,
                                       std::uint64_t seed);
// Sum of batch penalties over a random partition equals the full loss.
CheckResult check_telescoping(int trials, std::uint64_t seed);
// beta = 1 reduces pAUC to plain AUC (raw) and to the full pairwise hinge
// surrogate.
CheckResult check_beta1_consistency(int trials, std::uint64_t seed);

// Everything above with shared trial count; the CLI `verify` entry point.
std::vector<CheckResult> run_verification(int trials, std::uint64_t seed);

}  // namespace ndopt
