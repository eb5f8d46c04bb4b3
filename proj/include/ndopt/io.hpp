#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ndopt/data.hpp"
#include "ndopt/solvers.hpp"

namespace ndopt {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

// LIBSVM text format: `<label> <idx>:<val> ...`, ascending 1-based indices.
// Labels > 0 map to +1, everything else to -1. The dataset is normalized
// after loading (global scale by 1/max ||x||).
Dataset parse_libsvm(std::istream& in);
Dataset load_libsvm(const std::string& path);
void write_libsvm(const Dataset& d, std::ostream& out);

struct SynthSpec {
  long n = 1000;
  int dim = 10;
  double pos_fraction = 0.1;
  double separation = 2.0;  // distance between class means
  double noise = 1.0;       // per-coordinate Gaussian noise
  std::uint64_t seed = 0;
};

// Two isotropic Gaussian clouds at the given distance along a random unit
// direction; deterministic under seed; normalized like parsed data.
Dataset gen_synthetic(const SynthSpec& spec);

// Deterministic label-stratified split; class proportions preserved within
// one point on each side.
std::pair<Dataset, Dataset> stratified_split(const Dataset& d,
                                             double train_fraction,
                                             std::uint64_t seed);

// Model file: line 1 = dimension, line 2 = coordinates, 17 significant
// digits for exact round-trips.
void save_model(const WeightVector& w, std::ostream& out);
WeightVector load_model(std::istream& in);

struct TraceRow {
  long wall_clock_ms = 0;
  int epoch = 0;
  double train_surrogate = 0.0;
  double test_measure = 0.0;
};

struct ExperimentTrace {
  std::vector<TraceRow> rows;
};

void write_trace_csv(const ExperimentTrace& trace, std::ostream& out);
ExperimentTrace parse_trace_csv(std::istream& in);

}  // namespace ndopt
