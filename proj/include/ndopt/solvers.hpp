#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ndopt/data.hpp"
#include "ndopt/losses.hpp"

namespace ndopt {

struct SgdConfig {
  double eta_scale = 1.0;  // step length scale; epoch e uses eta/sqrt(e)
  int buffer_size_s = 500;
  int passes = 1;
  MeasureSpec measure;
  std::uint64_t seed = 0;
  // 2PMB: which class is collected in pass 1. Positives by default.
  bool rare_class_negative = false;
};

// Called after every epoch with the global epoch number, the running
// averaged model, and the cumulative solver-only wall time.
using EpochObserver =
    std::function<void(int epoch, const WeightVector& averaged,
                       double solver_ms_total)>;

struct SolverOutput {
  WeightVector averaged_model;  // (1/e) sum of iterates
  WeightVector final_model;
  std::vector<double> epoch_times_ms;
  int epochs = 0;
};

struct ReservoirBuffer {
  int capacity = 0;
  std::vector<int> items;  // dataset indices of retained points
  long seen = 0;
};

// Standard reservoir semantics: the first `capacity` offers are stored;
// offer k > capacity replaces a uniform slot with probability capacity/k.
void reservoir_offer(ReservoirBuffer& buf, int point_index,
                     std::mt19937_64& rng);

// Single-pass mini-batch subgradient descent over epochs of s points.
SolverOutput run_1pmb(const Dataset& d, const StreamOrder& order,
                      const SgdConfig& cfg, const FeasibleSet& W,
                      const EpochObserver& obs = nullptr);

// Two passes: reservoir-sample the rare class, then stream the other class
// in epochs evaluated against the fixed buffer.
SolverOutput run_2pmb(const Dataset& d, const StreamOrder& order,
                      const SgdConfig& cfg, const FeasibleSet& W,
                      const EpochObserver& obs = nullptr);

// Full-batch projected subgradient baseline; iteration count = passes.
SolverOutput run_psg(const Dataset& d, const SgdConfig& cfg,
                     const FeasibleSet& W, const EpochObserver& obs = nullptr);

}  // namespace ndopt
