#pragma once

#include <string>
#include <vector>

#include "ndopt/data.hpp"

namespace ndopt {

enum class MeasureKind { PrecAtK, Prbep, PAuc, FMeasure };

// Parameters of the performance measure being optimized. k is the top
// fraction for Prec@k, beta the false-positive range for pAUC. normalize
// applies to pAUC only (divide by ceil(beta*t_neg) * t_pos).
struct MeasureSpec {
  MeasureKind kind = MeasureKind::Prbep;
  double k = 0.5;
  double beta = 0.1;
  bool normalize = true;

  static MeasureSpec prec_at_k(double k);
  static MeasureSpec prbep();
  static MeasureSpec pauc(double beta, bool normalize = true);
  static MeasureSpec fmeasure();

  std::string name() const;
};

// A point in a stream or epoch together with a stable id used for
// tie-breaking and deterministic accumulation. Ids are original indices
// (stream position or dataset index depending on the caller).
struct PointHandle {
  const LabeledPoint* pt = nullptr;
  int id = 0;
};

using Sequence = std::vector<PointHandle>;

Sequence make_sequence(const Dataset& d);
Sequence make_sequence(const std::vector<LabeledPoint>& pts);

struct LossEval {
  double value = 0.0;
  WeightVector subgradient;
  // Optimizing assignment y-bar per sequence position (+1/-1); empty for pAUC.
  std::vector<int> witness_labels;
  // Ids of the selected top-beta negatives (pAUC only).
  std::vector<int> selected_negatives;
};

struct TopBetaSelection {
  std::vector<int> selected;  // ids of selected negatives
  int threshold_rank = 0;     // ceil(beta * t_neg), capped at t_neg
};

// ceil(fraction * total) computed robustly against FP representation of the
// product, capped to [1, total].
int top_count(double fraction, int total);

LossEval eval_prec_at_k(const Sequence& seq, const WeightVector& w, double k);
LossEval eval_prbep(const Sequence& seq, const WeightVector& w);
LossEval eval_pauc(const Sequence& seq, const WeightVector& w, double beta,
                   bool normalize);
LossEval eval_fmeasure(const Sequence& seq, const WeightVector& w);

TopBetaSelection select_top_beta_negatives(const Sequence& seq,
                                           const WeightVector& w, double beta);

LossEval eval_surrogate(const Sequence& seq, const WeightVector& w,
                        const MeasureSpec& m);
double surrogate_value(const Sequence& seq, const WeightVector& w,
                       const MeasureSpec& m);

// True when seq satisfies the measure's preconditions (class counts etc).
bool measure_feasible(const Sequence& seq, const MeasureSpec& m);

// Per-size normalized loss used by uniform-convergence measurements and
// cross-size comparisons: pAUC uses its own normalizer, the structural
// surrogates divide by the sequence length.
double normalized_surrogate(const Sequence& seq, const WeightVector& w,
                            const MeasureSpec& m);

}  // namespace ndopt
