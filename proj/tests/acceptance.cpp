// Acceptance gate: each numbered criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ndopt/experiment.hpp"
#include "ndopt/ftrl.hpp"
#include "ndopt/io.hpp"
#include "ndopt/metrics.hpp"
#include "ndopt/oracle.hpp"
#include "ndopt/solvers.hpp"
#include "ndopt/verify.hpp"

using namespace ndopt;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, bool ok, const std::string& name,
            const std::string& detail) {
  std::printf("%s  c%02d %-38s %s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Dataset synth(long n, std::uint64_t seed, double pos_fraction = 0.1,
              double separation = 1.5, int dim = 10) {
  SynthSpec spec;
  spec.n = n;
  spec.dim = dim;
  spec.pos_fraction = pos_fraction;
  spec.separation = separation;
  spec.noise = 1.0;
  spec.seed = seed;
  return gen_synthetic(spec);
}

// --- c1/c2: oracle equivalence -------------------------------------------

void c1_structural_oracles() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  bool ok = true;
  for (const auto& m : {MeasureSpec::prec_at_k(0.5), MeasureSpec::prbep(),
                        MeasureSpec::fmeasure()}) {
    const auto r = check_oracle_structural(m, 200, 101);
    ok = ok && r.passed;
    worst = std::max(worst, r.worst);
  }
  const double secs = seconds_since(t0);
  report(1, ok && secs < 30.0, "structural surrogate vs enumeration",
         fmt("worst=%.2e (<=1e-9), %.1fs (<30s)", worst, secs));
}

void c2_pauc_oracle() {
  const auto t0 = Clock::now();
  const auto r = check_oracle_pauc(200, 211);
  const double secs = seconds_since(t0);
  report(2, r.passed && secs < 10.0, "pAUC sorted eval vs brute force",
         fmt("worst=%.2e (<=1e-12), %.1fs (<10s)", r.worst, secs));
}

// --- c3-c6: structural properties ----------------------------------------

void c3_sorted_lipschitz() {
  const auto r = check_sorted_lipschitz(1000, 301);
  report(3, r.passed, "sorted-list Lipschitz bound",
         fmt("worst ratio=%.4f (<=3)", r.worst));
}

void c4_penalty_stability() {
  const auto a = check_penalty_stability(MeasureSpec::prec_at_k(0.5), 1000,
                                         401);
  const auto b = check_penalty_stability(MeasureSpec::prbep(), 1000, 409);
  report(4, a.passed && b.passed, "instantaneous-penalty stability",
         fmt("worst ratio preck=%.4f prbep=%.4f (<=8)", a.worst, b.worst));
}

void c5_subgradients() {
  bool ok = true;
  double worst = -1e300;
  for (const auto& m : {MeasureSpec::prec_at_k(0.5), MeasureSpec::prbep(),
                        MeasureSpec::pauc(0.3), MeasureSpec::fmeasure()}) {
    const auto r = check_subgradient_validity(m, 500, 503);
    ok = ok && r.passed;
    worst = std::max(worst, r.worst);
  }
  report(5, ok, "subgradient convexity certificate",
         fmt("worst violation=%.2e (<=1e-8)", worst));
}

void c6_telescoping() {
  const auto r = check_telescoping(500, 601);
  report(6, r.passed, "penalty telescoping identity",
         fmt("worst gap=%.2e (<=1e-9)", r.worst));
}

// --- c7: uniform convergence scaling -------------------------------------

void c7_uniform_convergence() {
  const auto t0 = Clock::now();
  const auto d = synth(20000, 701);
  std::mt19937_64 rng(702);
  std::vector<WeightVector> grid;
  for (int i = 0; i < 20; ++i)
    grid.push_back(random_weights(rng, d.dimension, 5.0));

  bool ok = true;
  std::string detail;
  for (const auto& m :
       {MeasureSpec::pauc(0.1), MeasureSpec::prec_at_k(0.25)}) {
    const auto g100 = empirical_uniform_convergence(d, m, 100, 50, grid, 703);
    const auto g400 = empirical_uniform_convergence(d, m, 400, 50, grid, 704);
    const double ratio = g100.median_gap / g400.median_gap;
    ok = ok && ratio >= 1.3 && ratio <= 3.0;
    detail += m.name() + fmt("=%.2f ", ratio);
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 300.0;
  report(7, ok, "uniform-convergence 1/sqrt(s) scaling",
         detail + fmt("(in [1.3,3.0]), %.0fs (<300s)", secs));
}

// --- c8: ERM convergence of 1PMB against PSG -----------------------------

void c8_erm_convergence() {
  const auto d = synth(20000, 801);
  const auto full = make_sequence(d);
  bool ok = true;
  std::string detail;

  struct Setup {
    MeasureSpec m;
    double eta_small, eta_full;
  };
  const Setup setups[] = {
      {MeasureSpec::pauc(0.1), 1.0, 1.0},
      {MeasureSpec::prec_at_k(0.1), 4.0 / 500.0, 4.0 / 20000.0}};

  for (const auto& su : setups) {
    SgdConfig psg_cfg;
    psg_cfg.measure = su.m;
    psg_cfg.eta_scale = su.eta_full;
    psg_cfg.passes = 500;
    const auto psg = run_psg(d, psg_cfg, FeasibleSet{});
    const double psg_loss =
        normalized_surrogate(full, psg.averaged_model, su.m);

    std::vector<double> losses;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      SgdConfig cfg;
      cfg.measure = su.m;
      cfg.eta_scale = su.eta_small;
      cfg.buffer_size_s = 500;
      cfg.passes = 5;
      cfg.seed = seed;
      const auto out = run_1pmb(d, shuffle(d, seed), cfg, FeasibleSet{});
      losses.push_back(normalized_surrogate(full, out.averaged_model, su.m));
    }
    // Structural losses can be negative, so apply the 5% allowance on the
    // magnitude of the baseline.
    const double med = median(losses);
    ok = ok && med <= psg_loss + 0.05 * std::abs(psg_loss);
    detail += su.m.name() + fmt("=%.4f/%.4f ", med, psg_loss);
  }
  report(8, ok, "1PMB loss within 1.05x of PSG-500", detail);
}

// --- c9: relative speed on n = 1e5 ---------------------------------------

void c9_relative_speed() {
  const auto train = synth(100000, 901);
  const auto test = synth(20000, 902);
  const auto m = MeasureSpec::pauc(0.1);

  SgdConfig psg_cfg;
  psg_cfg.measure = m;
  psg_cfg.eta_scale = 1.0;
  psg_cfg.passes = 20;
  const auto psg = run_psg(train, psg_cfg, FeasibleSet{});
  double psg_ms = 0.0;
  for (double t : psg.epoch_times_ms) psg_ms += t;
  const double psg_test = raw_pauc(test, psg.averaged_model, 0.1).value;

  std::vector<double> gaps, time_fracs;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    SgdConfig cfg;
    cfg.measure = m;
    cfg.eta_scale = 1.0;
    cfg.buffer_size_s = 500;
    cfg.passes = 1;
    cfg.seed = seed;
    const auto out = run_1pmb(train, shuffle(train, seed), cfg, FeasibleSet{});
    double ms = 0.0;
    for (double t : out.epoch_times_ms) ms += t;
    gaps.push_back(psg_test - raw_pauc(test, out.averaged_model, 0.1).value);
    time_fracs.push_back(ms / psg_ms);
  }
  const double gap = median(gaps), frac = median(time_fracs);
  report(9, gap <= 0.02 && frac <= 0.2, "1PMB fast convergence vs PSG",
         fmt("test gap=%.4f (<=0.02), time frac=%.3f (<=0.2)", gap, frac));
}

// --- c10: pAUC epoch cost scaling ----------------------------------------

void c10_epoch_complexity() {
  const auto m = MeasureSpec::pauc(0.1);
  // Several measurement rounds per size; the minimum of the round medians
  // suppresses scheduler noise symmetrically for both sizes.
  const auto time_epoch = [&](int s, int reps) {
    const auto d = synth(s, 1000 + s);
    const auto seq = make_sequence(d);
    std::mt19937_64 rng(17);
    const auto w = random_weights(rng, d.dimension, 3.0);
    volatile double sink = 0.0;
    double best = 1e300;
    for (int round = 0; round < 5; ++round) {
      std::vector<double> times;
      for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        sink = sink + eval_surrogate(seq, w, m).value;
        times.push_back(
            std::chrono::duration<double, std::micro>(Clock::now() - t0)
                .count());
      }
      best = std::min(best, median(times));
    }
    return best;
  };
  const double t500 = time_epoch(500, 200);
  const double t4000 = time_epoch(4000, 40);
  const double ratio = t4000 / t500;
  report(10, ratio <= 12.0, "pAUC epoch wall-time scaling",
         fmt("t(4000)/t(500)=%.2f (<=12)", ratio));
}

// --- c11: FTRL regret decay ----------------------------------------------

void c11_ftrl_regret() {
  std::vector<double> ratios;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto stream = synth(2000, 1100 + seed, 0.3);
    const auto regret_at = [&](long T) {
      Dataset d;
      d.points.assign(stream.points.begin(), stream.points.begin() + T);
      d.finalize();
      d.dimension = stream.dimension;
      FtrlConfig cfg;
      cfg.measure = MeasureSpec::prec_at_k(0.3);
      cfg.eta = 0.2 * std::sqrt(static_cast<double>(T));
      cfg.inner_iters = 100;
      cfg.batch_size_s = 25;
      StreamOrder order;
      for (long i = 0; i < T; ++i)
        order.permutation.push_back(static_cast<int>(i));
      return run_ftrl(d, order, cfg, FeasibleSet{}).report.regret_upper;
    };
    ratios.push_back(regret_at(2000) / regret_at(250));
  }
  const double med = median(ratios);
  report(11, med <= 0.7, "FTRL average regret decay",
         fmt("regret(2000)/regret(250)=%.3f (<=0.7)", med));
}

// --- c12: beta = 1 consistency -------------------------------------------

void c12_beta1() {
  const auto r = check_beta1_consistency(100, 1201);
  report(12, r.passed, "beta=1 reduces to plain AUC",
         fmt("worst gap=%.2e (<=1e-12)", r.worst));
}

}  // namespace

int main() {
  c1_structural_oracles();
  c2_pauc_oracle();
  c3_sorted_lipschitz();
  c4_penalty_stability();
  c5_subgradients();
  c6_telescoping();
  c7_uniform_convergence();
  c8_erm_convergence();
  c9_relative_speed();
  c10_epoch_complexity();
  c11_ftrl_regret();
  c12_beta1();
  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
