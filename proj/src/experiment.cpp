#include "ndopt/experiment.hpp"

#include <cmath>
#include <stdexcept>

#include "ndopt/metrics.hpp"

namespace ndopt {

SolverKind solver_kind_from_name(const std::string& name) {
  if (name == "1pmb") return SolverKind::OnePmb;
  if (name == "2pmb") return SolverKind::TwoPmb;
  if (name == "psg") return SolverKind::Psg;
  if (name == "ftrl") return SolverKind::Ftrl;
  throw std::invalid_argument("unknown solver '" + name + "'");
}

ExperimentResult run_experiment(const Dataset& train, const Dataset& test,
                                SolverKind solver, const SgdConfig& scfg,
                                const FtrlConfig& fcfg, const FeasibleSet& W) {
  const auto& measure =
      solver == SolverKind::Ftrl ? fcfg.measure : scfg.measure;
  const auto train_seq = make_sequence(train);

  ExperimentResult result;
  const auto snapshot = [&](int epoch, const WeightVector& model,
                            double solver_ms) {
    TraceRow row;
    row.wall_clock_ms = static_cast<long>(std::llround(solver_ms));
    row.epoch = epoch;
    row.train_surrogate = measure_feasible(train_seq, measure)
                              ? normalized_surrogate(train_seq, model, measure)
                              : 0.0;
    row.test_measure = raw_measure(test, model, measure).value;
    result.trace.rows.push_back(row);
  };

  snapshot(0, WeightVector(train.dimension, 0.0), 0.0);

  if (solver == SolverKind::Ftrl) {
    WeightVector sum(train.dimension, 0.0);
    const auto obs = [&](int step, const WeightVector& w_t,
                         double solver_ms) {
      for (int j = 0; j < train.dimension; ++j) sum[j] += w_t[j];
      WeightVector avg = sum;
      for (double& v : avg) v /= step;
      snapshot(step, avg, solver_ms);
    };
    auto run = run_ftrl(train, shuffle(train, scfg.seed), fcfg, W, obs);
    result.model = std::move(run.averaged);
    return result;
  }

  const EpochObserver obs = [&](int epoch, const WeightVector& avg,
                                double solver_ms) {
    snapshot(epoch, avg, solver_ms);
  };
  const auto order = shuffle(train, scfg.seed);
  SolverOutput out;
  switch (solver) {
    case SolverKind::OnePmb:
      out = run_1pmb(train, order, scfg, W, obs);
      break;
    case SolverKind::TwoPmb:
      out = run_2pmb(train, order, scfg, W, obs);
      break;
    case SolverKind::Psg:
      out = run_psg(train, scfg, W, obs);
      break;
    case SolverKind::Ftrl:
      break;  // handled above
  }
  result.model = std::move(out.averaged_model);
  return result;
}

}  // namespace ndopt
