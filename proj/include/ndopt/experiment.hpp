#pragma once

#include "ndopt/data.hpp"
#include "ndopt/ftrl.hpp"
#include "ndopt/io.hpp"
#include "ndopt/solvers.hpp"

namespace ndopt {

enum class SolverKind { OnePmb, TwoPmb, Psg, Ftrl };

SolverKind solver_kind_from_name(const std::string& name);

struct ExperimentResult {
  ExperimentTrace trace;
  WeightVector model;  // the averaged model the solver returns
};

// Runs the chosen solver on `train`, snapshotting once per epoch (FTRL: per
// step): solver-only wall clock, epoch, normalized train surrogate at the
// running averaged model, and the raw test measure at the same model. Row 0
// records the initial state.
ExperimentResult run_experiment(const Dataset& train, const Dataset& test,
                                SolverKind solver, const SgdConfig& scfg,
                                const FtrlConfig& fcfg, const FeasibleSet& W);

}  // namespace ndopt
