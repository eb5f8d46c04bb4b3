#include "ndopt/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ndopt {

namespace {

std::vector<double> all_scores(const Dataset& d, const WeightVector& w) {
  std::vector<double> s(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) s[i] = score(w, d.points[i]);
  return s;
}

EvalResult prec_at_cardinality(const Dataset& d, const WeightVector& w,
                               int m, const std::string& name) {
  const int t = static_cast<int>(d.size());
  if (t == 0) throw std::invalid_argument("empty dataset");
  const auto s = all_scores(d, w);
  std::vector<int> order(t);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (s[a] != s[b]) return s[a] > s[b];
    return a < b;
  });
  int tp = 0;
  for (int r = 0; r < m; ++r)
    if (d.points[order[r]].label > 0) ++tp;
  return {name, static_cast<double>(tp) / m, d.n_pos, d.n_neg};
}

}  // namespace

EvalResult raw_prec_at_k(const Dataset& d, const WeightVector& w, double k) {
  if (d.points.empty()) throw std::invalid_argument("empty dataset");
  return prec_at_cardinality(
      d, w, top_count(k, static_cast<int>(d.size())), "preck");
}

EvalResult raw_prbep(const Dataset& d, const WeightVector& w) {
  if (d.n_pos < 1) throw std::invalid_argument("PRBEP requires a positive");
  return prec_at_cardinality(d, w, d.n_pos, "prbep");
}

EvalResult raw_pauc(const Dataset& d, const WeightVector& w, double beta) {
  if (d.n_pos < 1 || d.n_neg < 1)
    throw std::invalid_argument("pAUC requires both classes");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("pAUC requires beta in (0,1]");
  const auto s = all_scores(d, w);
  std::vector<int> neg;
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    if (d.points[i].label < 0) neg.push_back(i);
  std::sort(neg.begin(), neg.end(), [&](int a, int b) {
    if (s[a] != s[b]) return s[a] > s[b];
    return a < b;
  });
  const int c = top_count(beta, static_cast<int>(neg.size()));
  neg.resize(c);

  // Count s_i >= s_j pairs against the sorted selected negatives.
  std::vector<double> sel_scores;
  for (int j : neg) sel_scores.push_back(s[j]);
  std::sort(sel_scores.begin(), sel_scores.end());
  long long correct = 0;
  for (int i = 0; i < static_cast<int>(d.size()); ++i) {
    if (d.points[i].label <= 0) continue;
    const auto it =
        std::upper_bound(sel_scores.begin(), sel_scores.end(), s[i]);
    correct += it - sel_scores.begin();
  }
  const double value =
      static_cast<double>(correct) / (static_cast<double>(c) * d.n_pos);
  return {"pauc", value, d.n_pos, d.n_neg};
}

EvalResult raw_f1(const Dataset& d, const WeightVector& w, double threshold) {
  if (d.n_pos < 1) throw std::invalid_argument("F1 requires a positive");
  int tp = 0, fp = 0, fn = 0;
  for (const auto& p : d.points) {
    // sign(s - threshold) with 0 mapped to +1
    const bool pred_pos = score(w, p) - threshold >= 0.0;
    if (pred_pos && p.label > 0)
      ++tp;
    else if (pred_pos)
      ++fp;
    else if (p.label > 0)
      ++fn;
  }
  const int denom = 2 * tp + fp + fn;
  const double f1 = denom == 0 ? 0.0 : 2.0 * tp / denom;
  return {"f1", f1, d.n_pos, d.n_neg};
}

EvalResult best_threshold_f1(const Dataset& d, const WeightVector& w) {
  if (d.n_pos < 1) throw std::invalid_argument("F1 requires a positive");
  const auto s = all_scores(d, w);
  std::vector<double> candidates(s.begin(), s.end());
  candidates.push_back(*std::max_element(s.begin(), s.end()) + 1.0);
  EvalResult best{"f1_best_threshold", 0.0, d.n_pos, d.n_neg};
  for (double thr : candidates) {
    const auto r = raw_f1(d, w, thr);
    if (r.value > best.value) best.value = r.value;
  }
  return best;
}

EvalResult raw_measure(const Dataset& d, const WeightVector& w,
                       const MeasureSpec& m) {
  switch (m.kind) {
    case MeasureKind::PrecAtK:
      return raw_prec_at_k(d, w, m.k);
    case MeasureKind::Prbep:
      return raw_prbep(d, w);
    case MeasureKind::PAuc:
      return raw_pauc(d, w, m.beta);
    case MeasureKind::FMeasure:
      return raw_f1(d, w);
  }
  throw std::logic_error("unknown measure");
}

}  // namespace ndopt
