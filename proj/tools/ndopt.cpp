// Command-line front end: train/eval/gen-synth/verify subcommands.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ndopt/experiment.hpp"
#include "ndopt/io.hpp"
#include "ndopt/metrics.hpp"
#include "ndopt/verify.hpp"

namespace {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ndopt::MeasureSpec make_measure(const std::string& loss, double k,
                                double beta) {
  if (loss == "preck") {
    if (!(k > 0.0 && k < 1.0))
      throw CLI::ValidationError("--k", "must be in (0,1)");
    return ndopt::MeasureSpec::prec_at_k(k);
  }
  if (loss == "prbep") return ndopt::MeasureSpec::prbep();
  if (loss == "pauc") {
    if (!(beta > 0.0 && beta <= 1.0))
      throw CLI::ValidationError("--beta", "must be in (0,1]");
    return ndopt::MeasureSpec::pauc(beta);
  }
  if (loss == "fmeasure") return ndopt::MeasureSpec::fmeasure();
  throw CLI::ValidationError("--loss", "unknown loss '" + loss + "'");
}

ndopt::Dataset load_or_throw(const std::string& path) {
  try {
    return ndopt::load_libsvm(path);
  } catch (const std::exception& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  return out;
}

struct TrainArgs {
  std::string solver = "1pmb";
  std::string loss = "prbep";
  double k = 0.25;
  double beta = 0.1;
  double eta = 1.0;
  int buffer = 500;
  int passes = 5;
  double radius = 100.0;
  std::uint64_t seed = 0;
  std::string train_file;
  std::string test_file;
  double split = 0.7;
  std::string out = "trace.csv";
  std::string model_out;
};

int cmd_train(const TrainArgs& a) {
  const auto measure = make_measure(a.loss, a.k, a.beta);
  ndopt::Dataset train = load_or_throw(a.train_file);
  ndopt::Dataset test;
  if (!a.test_file.empty()) {
    test = load_or_throw(a.test_file);
  } else {
    auto parts = ndopt::stratified_split(train, a.split, a.seed);
    train = std::move(parts.first);
    test = std::move(parts.second);
  }

  ndopt::SgdConfig scfg;
  scfg.eta_scale = a.eta;
  scfg.buffer_size_s = a.buffer;
  scfg.passes = a.passes;
  scfg.measure = measure;
  scfg.seed = a.seed;

  ndopt::FtrlConfig fcfg;
  fcfg.eta = a.eta;
  fcfg.batch_size_s = a.buffer;
  fcfg.measure = measure;

  const ndopt::FeasibleSet W{a.radius};
  const auto kind = ndopt::solver_kind_from_name(a.solver);
  const auto result =
      ndopt::run_experiment(train, test, kind, scfg, fcfg, W);

  {
    auto out = open_out(a.out);
    ndopt::write_trace_csv(result.trace, out);
  }
  if (!a.model_out.empty()) {
    auto out = open_out(a.model_out);
    ndopt::save_model(result.model, out);
  }

  const auto ev = ndopt::raw_measure(test, result.model, measure);
  std::printf("solver=%s loss=%s train_n=%zu test_n=%zu test_%s=%.6f\n",
              a.solver.c_str(), measure.name().c_str(), train.size(),
              test.size(), ev.measure_name.c_str(), ev.value);
  return 0;
}

int cmd_eval(const std::string& model_path, const std::string& data_path,
             const std::string& loss, double k, double beta) {
  const auto measure = make_measure(loss, k, beta);
  std::ifstream min(model_path);
  if (!min) throw DataError("cannot read " + model_path);
  ndopt::WeightVector w;
  try {
    w = ndopt::load_model(min);
  } catch (const std::exception& e) {
    throw DataError(model_path + ": " + e.what());
  }
  const auto d = load_or_throw(data_path);
  if (d.dimension > static_cast<int>(w.size())) w.resize(d.dimension, 0.0);
  const auto ev = ndopt::raw_measure(d, w, measure);
  std::printf("%s=%.6f n=%zu pos=%d neg=%d\n", ev.measure_name.c_str(),
              ev.value, d.size(), ev.t_pos, ev.t_neg);
  return 0;
}

int cmd_gen_synth(const ndopt::SynthSpec& spec, const std::string& out_path) {
  const auto d = ndopt::gen_synthetic(spec);
  auto out = open_out(out_path);
  ndopt::write_libsvm(d, out);
  std::printf("wrote %zu points (dim=%d, pos=%d, neg=%d) to %s\n", d.size(),
              d.dimension, d.n_pos, d.n_neg, out_path.c_str());
  return 0;
}

int cmd_verify(int trials, std::uint64_t seed) {
  const auto results = ndopt::run_verification(trials, seed);
  bool all_ok = true;
  for (const auto& r : results) {
    std::printf("%-6s %-22s worst=%.3e bound=%.3e trials=%d\n",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.worst, r.bound,
                r.trials);
    all_ok = all_ok && r.passed;
  }
  return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimization of non-decomposable ranking measures"};
  app.require_subcommand(1);

  TrainArgs ta;
  auto* train = app.add_subcommand("train", "train a model and emit a trace");
  train->add_option("--solver", ta.solver, "1pmb | 2pmb | psg | ftrl");
  train->add_option("--loss", ta.loss, "preck | prbep | pauc | fmeasure");
  train->add_option("--k", ta.k, "top fraction for preck");
  train->add_option("--beta", ta.beta, "false-positive range for pauc");
  train->add_option("--eta", ta.eta, "step scale (SGD) / regularizer (FTRL)");
  train->add_option("--buffer", ta.buffer, "epoch / buffer size s");
  train->add_option("--passes", ta.passes, "passes over the data");
  train->add_option("--radius", ta.radius, "feasible-ball radius");
  train->add_option("--seed", ta.seed, "RNG seed");
  train->add_option("--train-file", ta.train_file, "LIBSVM training data")
      ->required();
  train->add_option("--test-file", ta.test_file,
                    "LIBSVM test data (default: split off train)");
  train->add_option("--split", ta.split, "train fraction when splitting");
  train->add_option("--out", ta.out, "trace CSV path");
  train->add_option("--model-out", ta.model_out, "model file path");

  std::string ev_model, ev_data, ev_loss = "prbep";
  double ev_k = 0.25, ev_beta = 0.1;
  auto* eval = app.add_subcommand("eval", "evaluate a saved model");
  eval->add_option("--model", ev_model, "model file")->required();
  eval->add_option("--data", ev_data, "LIBSVM data file")->required();
  eval->add_option("--loss", ev_loss, "preck | prbep | pauc | fmeasure");
  eval->add_option("--k", ev_k, "top fraction for preck");
  eval->add_option("--beta", ev_beta, "false-positive range for pauc");

  ndopt::SynthSpec sspec;
  std::string gs_out = "synth.libsvm";
  auto* gen = app.add_subcommand("gen-synth", "generate Gaussian-cloud data");
  gen->add_option("--n", sspec.n, "number of points");
  gen->add_option("--dim", sspec.dim, "feature dimension");
  gen->add_option("--pos-fraction", sspec.pos_fraction, "positive fraction");
  gen->add_option("--separation", sspec.separation, "class-mean distance");
  gen->add_option("--noise", sspec.noise, "per-coordinate noise sigma");
  gen->add_option("--seed", sspec.seed, "RNG seed");
  gen->add_option("--out", gs_out, "output LIBSVM path");

  int vf_trials = 100;
  std::uint64_t vf_seed = 7;
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--trials", vf_trials, "trials per check");
  verify->add_option("--seed", vf_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*train) return cmd_train(ta);
    if (*eval) return cmd_eval(ev_model, ev_data, ev_loss, ev_k, ev_beta);
    if (*gen) return cmd_gen_synth(sspec, gs_out);
    if (*verify) return cmd_verify(vf_trials, vf_seed);
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
