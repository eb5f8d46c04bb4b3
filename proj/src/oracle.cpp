#include "ndopt/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ndopt {

namespace {

double popcount_objective(const Sequence& seq, const std::vector<double>& s,
                          std::uint32_t mask, const MeasureSpec& m) {
  const int t = static_cast<int>(seq.size());
  double margin = 0.0;
  int tp = 0, pred_pos = 0, t_pos = 0;
  double dot_yy = 0.0;
  for (int i = 0; i < t; ++i) {
    const int y = seq[i].pt->label;
    const int ybar = (mask >> i) & 1u ? 1 : -1;
    margin += (ybar - y) * s[i];
    dot_yy += y * ybar;
    if (y > 0) ++t_pos;
    if (ybar > 0) {
      ++pred_pos;
      if (y > 0) ++tp;
    }
  }
  if (m.kind == MeasureKind::FMeasure) {
    const double f1 =
        tp == 0 ? 0.0 : 2.0 * tp / static_cast<double>(pred_pos + t_pos);
    return margin + (1.0 - f1);
  }
  return margin - dot_yy;
}

}  // namespace

double brute_force_structural(const Sequence& seq, const WeightVector& w,
                              const MeasureSpec& m) {
  const int t = static_cast<int>(seq.size());
  if (t == 0) throw std::invalid_argument("empty point sequence");
  if (t > 20) throw std::length_error("enumeration capped at t <= 20");
  if (m.kind == MeasureKind::PAuc)
    throw std::invalid_argument("use brute_force_pauc for pAUC");

  int cardinality = -1;  // -1: unconstrained (F-measure)
  if (m.kind == MeasureKind::PrecAtK) {
    cardinality = top_count(m.k, t);
  } else if (m.kind == MeasureKind::Prbep) {
    cardinality = 0;
    for (const auto& h : seq)
      if (h.pt->label > 0) ++cardinality;
    if (cardinality == 0)
      throw std::invalid_argument("PRBEP requires a positive");
  }

  std::vector<double> s(t);
  for (int i = 0; i < t; ++i) s[i] = score(w, *seq[i].pt);

  bool found = false;
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
    if (cardinality >= 0 &&
        std::popcount(mask) != cardinality)
      continue;
    const double obj = popcount_objective(seq, s, mask, m);
    if (!found || obj > best) {
      best = obj;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no feasible labeling");
  return best;
}

BruteForcePaucResult brute_force_pauc(const Sequence& seq,
                                      const WeightVector& w, double beta,
                                      bool normalize) {
  const int t = static_cast<int>(seq.size());
  std::vector<double> s(t);
  for (int i = 0; i < t; ++i) s[i] = score(w, *seq[i].pt);

  std::vector<int> pos, neg;
  for (int i = 0; i < t; ++i)
    (seq[i].pt->label > 0 ? pos : neg).push_back(i);
  if (pos.empty() || neg.empty())
    throw std::invalid_argument("pAUC requires both classes");

  const int c = top_count(beta, static_cast<int>(neg.size()));

  // Rank each negative against every other by (score desc, id asc); a
  // negative is selected iff fewer than c negatives rank strictly above it.
  std::vector<int> selected;
  for (int j : neg) {
    int above = 0;
    for (int j2 : neg) {
      if (j2 == j) continue;
      if (s[j2] > s[j] || (s[j2] == s[j] && seq[j2].id < seq[j].id)) ++above;
    }
    if (above < c) selected.push_back(j);
  }

  double value = 0.0;
  for (int i : pos)
    for (int j : selected) value += std::max(0.0, 1.0 - (s[i] - s[j]));
  if (normalize) value /= static_cast<double>(c) * pos.size();

  BruteForcePaucResult out;
  out.value = value;
  for (int j : selected) out.selected.push_back(seq[j].id);
  std::sort(out.selected.begin(), out.selected.end());
  return out;
}

UniformConvergenceReport empirical_uniform_convergence(
    const Dataset& d, const MeasureSpec& m, int s, int trials,
    const std::vector<WeightVector>& w_grid, std::uint64_t seed) {
  const int n = static_cast<int>(d.size());
  if (s > n) throw std::invalid_argument("sample size exceeds dataset");
  if (s < 1 || trials < 1) throw std::invalid_argument("bad s/trials");
  if (w_grid.empty()) throw std::invalid_argument("empty model grid");

  const auto full_seq = make_sequence(d);
  std::vector<double> full_vals;
  full_vals.reserve(w_grid.size());
  for (const auto& w : w_grid)
    full_vals.push_back(normalized_surrogate(full_seq, w, m));

  std::vector<int> indices(n);
  std::iota(indices.begin(), indices.end(), 0);

  UniformConvergenceReport rep;
  rep.s = s;
  rep.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
    // Sample without replacement via a partial Fisher-Yates pass.
    for (int i = 0; i < s; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(indices[i], indices[pick(rng)]);
    }
    Sequence sample;
    sample.reserve(s);
    for (int i = 0; i < s; ++i)
      sample.push_back({&d.points[indices[i]], indices[i]});
    if (!measure_feasible(sample, m)) {
      rep.gaps.push_back(0.0);
      continue;
    }
    double sup = 0.0;
    for (std::size_t g = 0; g < w_grid.size(); ++g) {
      const double sv = normalized_surrogate(sample, w_grid[g], m);
      sup = std::max(sup, std::abs(full_vals[g] - sv));
    }
    rep.gaps.push_back(sup);
  }
  auto sorted = rep.gaps;
  std::sort(sorted.begin(), sorted.end());
  rep.median_gap = sorted[sorted.size() / 2];
  return rep;
}

}  // namespace ndopt
