#include "ndopt/losses.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ndopt {

namespace {

std::vector<double> compute_scores(const Sequence& seq, const WeightVector& w) {
  std::vector<double> s(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) s[i] = score(w, *seq[i].pt);
  return s;
}

// Positions ordered by ascending id; all value and subgradient accumulation
// walks this order so that results are invariant to input permutation.
std::vector<int> id_order(const Sequence& seq) {
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  const bool ascending = std::is_sorted(
      seq.begin(), seq.end(),
      [](const PointHandle& a, const PointHandle& b) { return a.id < b.id; });
  if (!ascending)
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return seq[a].id < seq[b].id; });
  return order;
}

void add_scaled(WeightVector& g, const LabeledPoint& x, double c) {
  for (const auto& [idx, v] : x.features) g.at(idx - 1) += c * v;
}

// Shared core for Prec@k and PRBEP: maximizes the structural objective with
// exactly `m` positions labeled +1 by taking the m largest z_i = s_i - y_i,
// ties broken by ascending id.
LossEval eval_structural_topk(const Sequence& seq, const WeightVector& w,
                              int m) {
  const int t = static_cast<int>(seq.size());
  if (t == 0) throw std::invalid_argument("empty point sequence");
  if (m < 1 || m > t)
    throw std::invalid_argument("cardinality out of range");

  const auto scores = compute_scores(seq, w);
  std::vector<double> z(t);
  for (int i = 0; i < t; ++i) z[i] = scores[i] - seq[i].pt->label;

  std::vector<int> by_z(t);
  std::iota(by_z.begin(), by_z.end(), 0);
  std::sort(by_z.begin(), by_z.end(), [&](int a, int b) {
    if (z[a] != z[b]) return z[a] > z[b];
    return seq[a].id < seq[b].id;
  });
  std::vector<char> selected(t, 0);
  for (int r = 0; r < m; ++r) selected[by_z[r]] = 1;

  const auto order = id_order(seq);
  long double sum_z = 0.0L, sum_ys = 0.0L, sum_top = 0.0L;
  for (int i : order) {
    sum_z += z[i];
    sum_ys += seq[i].pt->label * scores[i];
    if (selected[i]) sum_top += z[i];
  }

  LossEval out;
  out.value = static_cast<double>(2.0L * sum_top - sum_z - sum_ys);
  out.subgradient.assign(w.size(), 0.0);
  out.witness_labels.resize(t);
  for (int i : order) {
    const int ybar = selected[i] ? 1 : -1;
    out.witness_labels[i] = ybar;
    const int coef = ybar - seq[i].pt->label;
    if (coef != 0) add_scaled(out.subgradient, *seq[i].pt, coef);
  }
  return out;
}

// The top `c` negatives by (score desc, id asc). Only the selected block is
// ever needed, so partition with nth_element before sorting it.
std::vector<int> top_negatives(const Sequence& seq,
                               const std::vector<double>& scores, int c) {
  std::vector<int> negs;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i)
    if (seq[i].pt->label < 0) negs.push_back(i);
  const auto before = [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return seq[a].id < seq[b].id;
  };
  if (c < static_cast<int>(negs.size()))
    std::nth_element(negs.begin(), negs.begin() + c, negs.end(), before);
  std::sort(negs.begin(), negs.begin() + std::min<std::size_t>(c, negs.size()),
            before);
  negs.resize(std::min<std::size_t>(c, negs.size()));
  return negs;
}

}  // namespace

MeasureSpec MeasureSpec::prec_at_k(double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::invalid_argument("Prec@k requires k in (0,1)");
  MeasureSpec m;
  m.kind = MeasureKind::PrecAtK;
  m.k = k;
  return m;
}

MeasureSpec MeasureSpec::prbep() {
  MeasureSpec m;
  m.kind = MeasureKind::Prbep;
  return m;
}

MeasureSpec MeasureSpec::pauc(double beta, bool normalize) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("pAUC requires beta in (0,1]");
  MeasureSpec m;
  m.kind = MeasureKind::PAuc;
  m.beta = beta;
  m.normalize = normalize;
  return m;
}

MeasureSpec MeasureSpec::fmeasure() {
  MeasureSpec m;
  m.kind = MeasureKind::FMeasure;
  return m;
}

std::string MeasureSpec::name() const {
  switch (kind) {
    case MeasureKind::PrecAtK:
      return "preck";
    case MeasureKind::Prbep:
      return "prbep";
    case MeasureKind::PAuc:
      return "pauc";
    case MeasureKind::FMeasure:
      return "fmeasure";
  }
  return "unknown";
}

Sequence make_sequence(const Dataset& d) {
  Sequence seq;
  seq.reserve(d.size());
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    seq.push_back({&d.points[i], i});
  return seq;
}

Sequence make_sequence(const std::vector<LabeledPoint>& pts) {
  Sequence seq;
  seq.reserve(pts.size());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    seq.push_back({&pts[i], i});
  return seq;
}

int top_count(double fraction, int total) {
  // Guard against FP noise in fraction*total landing just above an integer.
  int c = static_cast<int>(std::ceil(fraction * static_cast<double>(total) -
                                     1e-9));
  return std::clamp(c, 1, total);
}

LossEval eval_prec_at_k(const Sequence& seq, const WeightVector& w, double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::invalid_argument("Prec@k requires k in (0,1)");
  if (seq.empty()) throw std::invalid_argument("empty point sequence");
  return eval_structural_topk(seq, w,
                              top_count(k, static_cast<int>(seq.size())));
}

LossEval eval_prbep(const Sequence& seq, const WeightVector& w) {
  if (seq.empty()) throw std::invalid_argument("empty point sequence");
  int t_pos = 0;
  for (const auto& h : seq)
    if (h.pt->label > 0) ++t_pos;
  if (t_pos == 0) throw std::invalid_argument("PRBEP requires a positive");
  return eval_structural_topk(seq, w, t_pos);
}

LossEval eval_pauc(const Sequence& seq, const WeightVector& w, double beta,
                   bool normalize) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("pAUC requires beta in (0,1]");
  const int t = static_cast<int>(seq.size());
  const auto scores = compute_scores(seq, w);

  std::vector<int> pos;
  int n_neg = 0;
  for (int i = 0; i < t; ++i) {
    if (seq[i].pt->label > 0)
      pos.push_back(i);
    else
      ++n_neg;
  }
  if (pos.empty() || n_neg == 0)
    throw std::invalid_argument("pAUC requires both classes");

  const int c = top_count(beta, n_neg);
  const auto negs = top_negatives(seq, scores, c);

  // A pos-neg pair is hinge-active iff s_i - s_j < 1. Counting active pairs
  // per point via sorted score lists keeps the epoch cost at O(t log t).
  std::vector<double> pos_scores, sel_scores;
  pos_scores.reserve(pos.size());
  for (int i : pos) pos_scores.push_back(scores[i]);
  sel_scores.reserve(c);
  for (int j : negs) sel_scores.push_back(scores[j]);
  std::sort(pos_scores.begin(), pos_scores.end());
  std::sort(sel_scores.begin(), sel_scores.end());

  // Per-point active-pair counts, stored only for contributing positions:
  // for a selected negative j, the number of positives with s_i < s_j + 1;
  // for a positive i, the number of selected negatives with s_j > s_i - 1.
  std::vector<long long> active(t, 0);
  for (int j : negs) {
    const auto it = std::lower_bound(pos_scores.begin(), pos_scores.end(),
                                     scores[j] + 1.0);
    active[j] = it - pos_scores.begin();
  }
  for (int i : pos) {
    const auto it = std::upper_bound(sel_scores.begin(), sel_scores.end(),
                                     scores[i] - 1.0);
    active[i] = static_cast<long long>(sel_scores.size()) -
                (it - sel_scores.begin());
  }

  const double scale =
      normalize ? 1.0 / (static_cast<double>(c) * pos.size()) : 1.0;

  // Unselected negatives never contribute, so accumulate over the
  // positives and selected negatives only, in ascending-id order.
  std::vector<int> contrib = pos;
  contrib.insert(contrib.end(), negs.begin(), negs.end());
  std::sort(contrib.begin(), contrib.end(),
            [&](int a, int b) { return seq[a].id < seq[b].id; });

  LossEval out;
  out.subgradient.assign(w.size(), 0.0);
  long double value = 0.0L;
  for (int i : contrib) {
    if (active[i] == 0) continue;
    if (seq[i].pt->label > 0) {
      value -= static_cast<long double>(active[i]) * scores[i];
      add_scaled(out.subgradient, *seq[i].pt, -scale * active[i]);
    } else {
      value += static_cast<long double>(active[i]) * (1.0 + scores[i]);
      add_scaled(out.subgradient, *seq[i].pt, scale * active[i]);
    }
  }
  out.value = static_cast<double>(value) * scale;
  out.selected_negatives.reserve(c);
  for (int i : contrib)
    if (seq[i].pt->label < 0) out.selected_negatives.push_back(seq[i].id);
  return out;
}

LossEval eval_fmeasure(const Sequence& seq, const WeightVector& w) {
  const int t = static_cast<int>(seq.size());
  if (t == 0) throw std::invalid_argument("empty point sequence");
  const auto scores = compute_scores(seq, w);

  std::vector<int> pos, neg;
  for (int i = 0; i < t; ++i)
    (seq[i].pt->label > 0 ? pos : neg).push_back(i);
  if (pos.empty())
    throw std::invalid_argument("F-measure requires a positive");

  auto by_score_desc = [&](std::vector<int>& v) {
    std::sort(v.begin(), v.end(), [&](int a, int b) {
      if (scores[a] != scores[b]) return scores[a] > scores[b];
      return seq[a].id < seq[b].id;
    });
  };
  by_score_desc(pos);
  by_score_desc(neg);

  const int P = static_cast<int>(pos.size());
  const int N = static_cast<int>(neg.size());
  std::vector<long double> pos_prefix(P + 1, 0.0L), neg_prefix(N + 1, 0.0L);
  for (int i = 0; i < P; ++i)
    pos_prefix[i + 1] = pos_prefix[i] + scores[pos[i]];
  for (int j = 0; j < N; ++j)
    neg_prefix[j + 1] = neg_prefix[j] + scores[neg[j]];

  // Relabeling the a top-scoring positives +1 and the b top-scoring
  // negatives +1 dominates every other assignment with the same counts, so
  // the argmax reduces to an (a, b) scan. F1 = 2a / (a + b + P), 0 when a=0.
  auto f1 = [&](int a, int b) {
    return a == 0 ? 0.0L : 2.0L * a / (a + b + P);
  };
  long double best = 0.0L;
  int best_a = -1, best_b = -1;
  for (int a = 0; a <= P; ++a) {
    const long double pos_term = -2.0L * (pos_prefix[P] - pos_prefix[a]);
    for (int b = 0; b <= N; ++b) {
      const long double obj =
          pos_term + 2.0L * neg_prefix[b] + (1.0L - f1(a, b));
      if (best_a < 0 || obj > best) {
        best = obj;
        best_a = a;
        best_b = b;
      }
    }
  }

  LossEval out;
  out.value = static_cast<double>(best);
  out.subgradient.assign(w.size(), 0.0);
  out.witness_labels.assign(t, -1);
  for (int i = 0; i < best_a; ++i) out.witness_labels[pos[i]] = 1;
  for (int j = 0; j < best_b; ++j) out.witness_labels[neg[j]] = 1;
  for (int i : id_order(seq)) {
    const int coef = out.witness_labels[i] - seq[i].pt->label;
    if (coef != 0) add_scaled(out.subgradient, *seq[i].pt, coef);
  }
  return out;
}

TopBetaSelection select_top_beta_negatives(const Sequence& seq,
                                           const WeightVector& w,
                                           double beta) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("beta must be in (0,1]");
  const auto scores = compute_scores(seq, w);
  int n_neg = 0;
  for (const auto& h : seq)
    if (h.pt->label < 0) ++n_neg;
  if (n_neg == 0) throw std::invalid_argument("no negatives in sequence");
  TopBetaSelection sel;
  sel.threshold_rank = top_count(beta, n_neg);
  for (int i : top_negatives(seq, scores, sel.threshold_rank))
    sel.selected.push_back(seq[i].id);
  std::sort(sel.selected.begin(), sel.selected.end());
  return sel;
}

LossEval eval_surrogate(const Sequence& seq, const WeightVector& w,
                        const MeasureSpec& m) {
  switch (m.kind) {
    case MeasureKind::PrecAtK:
      return eval_prec_at_k(seq, w, m.k);
    case MeasureKind::Prbep:
      return eval_prbep(seq, w);
    case MeasureKind::PAuc:
      return eval_pauc(seq, w, m.beta, m.normalize);
    case MeasureKind::FMeasure:
      return eval_fmeasure(seq, w);
  }
  throw std::logic_error("unknown measure");
}

double surrogate_value(const Sequence& seq, const WeightVector& w,
                       const MeasureSpec& m) {
  return eval_surrogate(seq, w, m).value;
}

bool measure_feasible(const Sequence& seq, const MeasureSpec& m) {
  if (seq.empty()) return false;
  int pos = 0, neg = 0;
  for (const auto& h : seq) (h.pt->label > 0 ? pos : neg)++;
  switch (m.kind) {
    case MeasureKind::PrecAtK:
      return true;
    case MeasureKind::Prbep:
    case MeasureKind::FMeasure:
      return pos >= 1;
    case MeasureKind::PAuc:
      return pos >= 1 && neg >= 1;
  }
  return false;
}

double normalized_surrogate(const Sequence& seq, const WeightVector& w,
                            const MeasureSpec& m) {
  if (m.kind == MeasureKind::PAuc)
    return eval_pauc(seq, w, m.beta, /*normalize=*/true).value;
  return surrogate_value(seq, w, m) / static_cast<double>(seq.size());
}

}  // namespace ndopt
