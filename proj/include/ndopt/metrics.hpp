#pragma once

#include <string>

#include "ndopt/data.hpp"
#include "ndopt/losses.hpp"

namespace ndopt {

// Raw (non-surrogate) performance measures on held-out data, all reported
// in [0, 1]. Ranking ties break by ascending dataset index; pAUC counts
// score ties as correct pairs.
struct EvalResult {
  std::string measure_name;
  double value = 0.0;
  int t_pos = 0;
  int t_neg = 0;
};

EvalResult raw_prec_at_k(const Dataset& d, const WeightVector& w, double k);
EvalResult raw_prbep(const Dataset& d, const WeightVector& w);
EvalResult raw_pauc(const Dataset& d, const WeightVector& w, double beta);
EvalResult raw_f1(const Dataset& d, const WeightVector& w,
                  double threshold = 0.0);

// Best F1 over thresholds at the observed scores; reporting aid only.
EvalResult best_threshold_f1(const Dataset& d, const WeightVector& w);

// Dispatch on the measure used during training.
EvalResult raw_measure(const Dataset& d, const WeightVector& w,
                       const MeasureSpec& m);

}  // namespace ndopt
