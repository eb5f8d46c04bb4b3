#include "ndopt/ftrl.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace ndopt {

namespace {

LossEval eval_or_zero(const Sequence& seq, const WeightVector& w,
                      const MeasureSpec& m) {
  if (!measure_feasible(seq, m)) {
    LossEval ev;
    ev.subgradient.assign(w.size(), 0.0);
    return ev;
  }
  return eval_surrogate(seq, w, m);
}

double diff_norm(const WeightVector& a, const WeightVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

struct InnerSolveFull {
  InnerSolveResult best;
  double min_loss_seen = 0.0;
};

InnerSolveFull inner_solve(const Sequence& history, const FtrlConfig& cfg,
                           const FeasibleSet& W, int dim) {
  WeightVector w(dim, 0.0);
  InnerSolveFull out;
  out.best.w = w;
  bool have_best = false;
  for (int i = 1; i <= cfg.inner_iters + 1; ++i) {
    const auto ev = eval_or_zero(history, w, cfg.measure);
    double sqn = 0.0;
    for (double v : w) sqn += v * v;
    const double obj = ev.value + 0.5 * cfg.eta * sqn;
    if (!have_best || obj < out.best.objective) {
      out.best.w = w;
      out.best.objective = obj;
      out.best.loss = ev.value;
      have_best = true;
    }
    out.min_loss_seen =
        have_best && i > 1 ? std::min(out.min_loss_seen, ev.value) : ev.value;
    if (i > cfg.inner_iters) break;
    const double step = 1.0 / (cfg.eta * i);
    for (int j = 0; j < dim; ++j)
      w[j] -= step * (ev.subgradient[j] + cfg.eta * w[j]);
    w = project(std::move(w), W);
  }
  return out;
}

}  // namespace

double sequence_loss_or_zero(const Sequence& seq, const WeightVector& w,
                             const MeasureSpec& m) {
  if (!measure_feasible(seq, m)) return 0.0;
  return surrogate_value(seq, w, m);
}

double instantaneous_penalty(const Sequence& prefix, const Sequence& batch,
                             const WeightVector& w, const MeasureSpec& m) {
  if (batch.empty()) throw std::invalid_argument("empty batch");
  Sequence combined = prefix;
  combined.insert(combined.end(), batch.begin(), batch.end());
  // Preconditions on the combined sequence propagate.
  const double full = surrogate_value(combined, w, m);
  return full - sequence_loss_or_zero(prefix, w, m);
}

InnerSolveResult ftrl_step(const Sequence& history, const FtrlConfig& cfg,
                           const FeasibleSet& W, int dim) {
  if (history.empty()) throw std::invalid_argument("empty history");
  if (cfg.eta <= 0.0 || cfg.inner_iters < 1)
    throw std::invalid_argument("bad FTRL config");
  return inner_solve(history, cfg, W, dim).best;
}

FtrlRun run_ftrl(const Dataset& d, const StreamOrder& order,
                 const FtrlConfig& cfg, const FeasibleSet& W,
                 const FtrlObserver& obs) {
  const int n = static_cast<int>(d.size());
  const int s = std::max(1, cfg.batch_size_s);
  const int dim = d.dimension;

  FtrlRun run;
  Sequence history;
  history.reserve(n);
  long double cumulative = 0.0L;
  double solver_ms = 0.0;

  for (int start = 0; start < n; start += s) {
    const auto t0 = std::chrono::steady_clock::now();
    const int end = std::min(start + s, n);
    WeightVector w_t = history.empty()
                           ? WeightVector(dim, 0.0)
                           : ftrl_step(history, cfg, W, dim).w;
    Sequence combined = history;
    for (int p = start; p < end; ++p)
      combined.push_back({&d.points[order.permutation[p]], p});
    cumulative += sequence_loss_or_zero(combined, w_t, cfg.measure) -
                  sequence_loss_or_zero(history, w_t, cfg.measure);
    solver_ms += std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    if (obs)
      obs(static_cast<int>(run.trajectory.size()) + 1, w_t, solver_ms);
    run.trajectory.push_back(std::move(w_t));
    history = std::move(combined);
  }

  run.averaged.assign(dim, 0.0);
  for (const auto& w : run.trajectory)
    for (int j = 0; j < dim; ++j) run.averaged[j] += w[j];
  if (!run.trajectory.empty())
    for (double& v : run.averaged) v /= run.trajectory.size();

  // Regret baseline: same inner solver, 10x iterations, on the full stream.
  FtrlConfig opt_cfg = cfg;
  opt_cfg.inner_iters = cfg.inner_iters * 10;
  const auto opt = inner_solve(history, opt_cfg, W, dim);

  double denom = static_cast<double>(n);
  if (cfg.measure.kind == MeasureKind::PAuc && !cfg.measure.normalize)
    denom = cfg.measure.beta * d.n_pos * d.n_neg;  // pair-count scaling

  run.report.T = n;
  run.report.steps = static_cast<int>(run.trajectory.size());
  run.report.avg_penalty = static_cast<double>(cumulative) / denom;
  run.report.batch_opt_loss = opt.min_loss_seen / denom;
  run.report.regret_upper =
      run.report.avg_penalty - run.report.batch_opt_loss;
  return run;
}

double stability_check(const Sequence& prefix, const LabeledPoint& new_point,
                       const WeightVector& w, const WeightVector& w2,
                       const MeasureSpec& m) {
  const double dn = diff_norm(w, w2);
  if (dn == 0.0) return 0.0;
  Sequence combined = prefix;
  combined.push_back({&new_point, static_cast<int>(prefix.size())});
  const double l1 = sequence_loss_or_zero(combined, w, m) -
                    sequence_loss_or_zero(prefix, w, m);
  const double l2 = sequence_loss_or_zero(combined, w2, m) -
                    sequence_loss_or_zero(prefix, w2, m);
  return std::abs(l1 - l2) / dn;
}

}  // namespace ndopt
