#pragma once

#include <functional>
#include <vector>

#include "ndopt/data.hpp"
#include "ndopt/losses.hpp"

namespace ndopt {

struct FtrlConfig {
  double eta = 1.0;        // L2 regularization weight of the FTRL objective
  int inner_iters = 200;   // projected-subgradient iterations per step
  int batch_size_s = 1;    // stream batch size
  MeasureSpec measure;
};

struct RegretReport {
  double avg_penalty = 0.0;     // (1/T) sum_t L_t(w_t)
  // Achieved value of the inner solver on the full stream; an upper bound
  // on the true batch minimum, so regret_upper is a lower estimate.
  double batch_opt_loss = 0.0;
  double regret_upper = 0.0;
  long T = 0;
  int steps = 0;
};

struct FtrlRun {
  std::vector<WeightVector> trajectory;  // w_t used at each batch
  WeightVector averaged;                 // mean of the trajectory
  RegretReport report;
};

// Prefix loss with the convention that empty or precondition-violating
// sequences cost 0; makes the instantaneous penalties telescope exactly.
double sequence_loss_or_zero(const Sequence& seq, const WeightVector& w,
                             const MeasureSpec& m);

// L_t(w) = loss(prefix + batch, w) - loss(prefix, w). The combined
// sequence must satisfy the measure's preconditions.
double instantaneous_penalty(const Sequence& prefix, const Sequence& batch,
                             const WeightVector& w, const MeasureSpec& m);

struct InnerSolveResult {
  WeightVector w;
  double objective = 0.0;  // best regularized objective reached
  double loss = 0.0;       // unregularized loss at the best iterate
};

// Approximately minimizes loss(history, w) + eta/2 ||w||^2 over the ball by
// projected subgradient with steps 1/(eta*i), keeping the best iterate.
InnerSolveResult ftrl_step(const Sequence& history, const FtrlConfig& cfg,
                           const FeasibleSet& W, int dim);

// Called after each batch with the step number, the model charged for the
// batch, and the cumulative solver wall time.
using FtrlObserver =
    std::function<void(int step, const WeightVector& w_t,
                       double solver_ms_total)>;

FtrlRun run_ftrl(const Dataset& d, const StreamOrder& order,
                 const FtrlConfig& cfg, const FeasibleSet& W,
                 const FtrlObserver& obs = nullptr);

// |L_t(w) - L_t(w2)| / ||w - w2||, 0 when the models coincide. The prefix
// gains one point; penalty stability for Prec@k/PRBEP bounds this by 8.
double stability_check(const Sequence& prefix, const LabeledPoint& new_point,
                       const WeightVector& w, const WeightVector& w2,
                       const MeasureSpec& m);

}  // namespace ndopt
