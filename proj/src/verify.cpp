#include "ndopt/verify.hpp"

#include <algorithm>
#include <cmath>

#include "ndopt/ftrl.hpp"
#include "ndopt/metrics.hpp"
#include "ndopt/oracle.hpp"

namespace ndopt {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double dot(const WeightVector& a, const WeightVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

MeasureSpec randomized(const MeasureSpec& m, std::mt19937_64& rng) {
  MeasureSpec out = m;
  if (m.kind == MeasureKind::PrecAtK) out.k = uniform(rng, 0.05, 0.95);
  if (m.kind == MeasureKind::PAuc) out.beta = uniform(rng, 0.05, 1.0);
  return out;
}

}  // namespace

LabeledPoint random_unit_point(std::mt19937_64& rng, int dim, int label) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(dim);
  double n = 0.0;
  for (auto& x : v) {
    x = gauss(rng);
    n += x * x;
  }
  n = std::sqrt(n);
  const double r =
      std::pow(uniform(rng, 0.0, 1.0), 1.0 / dim) / (n > 0 ? n : 1.0);
  LabeledPoint p;
  p.label = label;
  for (int j = 0; j < dim; ++j)
    if (v[j] != 0.0) p.features.emplace_back(j + 1, v[j] * r);
  return p;
}

WeightVector random_weights(std::mt19937_64& rng, int dim, double max_norm) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  WeightVector w(dim);
  double n = 0.0;
  for (auto& x : w) {
    x = gauss(rng);
    n += x * x;
  }
  n = std::sqrt(n);
  const double target = uniform(rng, 0.0, max_norm);
  if (n > 0)
    for (auto& x : w) x *= target / n;
  return w;
}

std::vector<LabeledPoint> random_points(std::mt19937_64& rng, int t, int dim,
                                        bool force_pos, bool force_neg) {
  std::vector<LabeledPoint> pts;
  pts.reserve(t);
  for (int i = 0; i < t; ++i)
    pts.push_back(
        random_unit_point(rng, dim, uniform_int(rng, 0, 1) ? 1 : -1));
  if (force_pos &&
      std::none_of(pts.begin(), pts.end(),
                   [](const auto& p) { return p.label > 0; }))
    pts[0].label = 1;
  if (force_neg && t > 1 &&
      std::none_of(pts.begin(), pts.end(),
                   [](const auto& p) { return p.label < 0; }))
    pts[t - 1].label = -1;
  return pts;
}

CheckResult check_oracle_structural(const MeasureSpec& m, int trials,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult res{"oracle_" + m.name(), true, 0.0, 1e-9, trials};
  const bool needs_pos = m.kind != MeasureKind::PrecAtK;
  for (int trial = 0; trial < trials; ++trial) {
    const int t = uniform_int(rng, 1, 12);
    const int dim = uniform_int(rng, 1, 5);
    const auto pts = random_points(rng, t, dim, needs_pos, false);
    const auto seq = make_sequence(pts);
    const auto w = random_weights(rng, dim, 5.0);
    const auto spec = randomized(m, rng);
    const double fast = surrogate_value(seq, w, spec);
    const double oracle = brute_force_structural(seq, w, spec);
    res.worst = std::max(res.worst, std::abs(fast - oracle));
  }
  res.passed = res.worst <= res.bound;
  return res;
}

CheckResult check_oracle_pauc(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult res{"oracle_pauc", true, 0.0, 1e-12, trials};
  for (int trial = 0; trial < trials; ++trial) {
    const int t = uniform_int(rng, 2, 50);
    const int dim = uniform_int(rng, 1, 5);
    const auto pts = random_points(rng, t, dim, true, true);
    const auto seq = make_sequence(pts);
    const auto w = random_weights(rng, dim, 2.0);
    const double beta = uniform(rng, 0.02, 1.0);
    const auto fast = eval_pauc(seq, w, beta, /*normalize=*/false);
    const auto oracle = brute_force_pauc(seq, w, beta, /*normalize=*/false);
    if (fast.selected_negatives != oracle.selected) {
      res.passed = false;
      res.worst = std::numeric_limits<double>::infinity();
      return res;
    }
    res.worst = std::max(res.worst, std::abs(fast.value - oracle.value));
  }
  res.passed = res.worst <= res.bound;
  return res;
}

CheckResult check_sorted_lipschitz(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult res{"sorted_lipschitz", true, 0.0, 3.0, trials};
  for (int trial = 0; trial < trials; ++trial) {
    const int t = uniform_int(rng, 1, 50);
    const int dim = uniform_int(rng, 1, 10);
    std::vector<LabeledPoint> pts;
    std::vector<double> c(t);
    for (int i = 0; i < t; ++i) {
      pts.push_back(random_unit_point(rng, dim, 1));
      c[i] = uniform(rng, -2.0, 2.0);
    }
    const auto w = random_weights(rng, dim, 5.0);
    const auto w2 = random_weights(rng, dim, 5.0);
    double dn = 0.0;
    for (int j = 0; j < dim; ++j) dn += (w[j] - w2[j]) * (w[j] - w2[j]);
    dn = std::sqrt(dn);
    if (dn == 0.0) continue;

    std::vector<double> z(t), z2(t);
    for (int i = 0; i < t; ++i) {
      z[i] = score(w, pts[i]) - c[i];
      z2[i] = score(w2, pts[i]) - c[i];
    }
    std::sort(z.begin(), z.end(), std::greater<>());
    std::sort(z2.begin(), z2.end(), std::greater<>());

    const double cap = uniform(rng, -1.0, 1.0);
    for (int k = 0; k < t; ++k) {
      const double gid = std::abs(z[k] - z2[k]) / dn;
      const double gcap =
          std::abs(std::min(z[k], cap) - std::min(z2[k], cap)) / dn;
      res.worst = std::max({res.worst, gid, gcap});
    }
  }
  res.passed = res.worst <= res.bound + 1e-9;
  return res;
}

CheckResult check_penalty_stability(const MeasureSpec& m, int trials,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult res{"stability_" + m.name(), true, 0.0, 8.0, trials};
  const bool needs_pos = m.kind == MeasureKind::Prbep;
  for (int trial = 0; trial < trials; ++trial) {
    const int t = uniform_int(rng, 2, 50);
    const int dim = uniform_int(rng, 1, 10);
    const auto pts = random_points(rng, t - 1, dim, needs_pos, false);
    const auto prefix = make_sequence(pts);
    const auto next =
        random_unit_point(rng, dim, uniform_int(rng, 0, 1) ? 1 : -1);
    const auto w = random_weights(rng, dim, 5.0);
    const auto w2 = random_weights(rng, dim, 5.0);
    const auto spec = randomized(m, rng);
    res.worst =
        std::max(res.worst, stability_check(prefix, next, w, w2, spec));
  }
  res.passed = res.worst <= res.bound + 1e-9;
  return res;
}

CheckResult check_subgradient_validity(const MeasureSpec& m, int trials,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult res{"subgradient_" + m.name(), true, 0.0, 1e-8, trials};
  const bool needs_pos = m.kind != MeasureKind::PrecAtK;
  const bool needs_neg = m.kind == MeasureKind::PAuc;
  for (int trial = 0; trial < trials; ++trial) {
    const int t = uniform_int(rng, needs_neg ? 2 : 1, 30);
    const int dim = uniform_int(rng, 1, 6);
    const auto pts = random_points(rng, t, dim, needs_pos, needs_neg);
    const auto seq = make_sequence(pts);
    const auto w = random_weights(rng, dim, 5.0);
    const auto w2 = random_weights(rng, dim, 5.0);
    const auto spec = randomized(m, rng);
    const auto ev = eval_surrogate(seq, w, spec);
    WeightVector delta(dim);
    for (int j = 0; j < dim; ++j) delta[j] = w2[j] - w[j];
    const double lower = ev.value + dot(ev.subgradient, delta);
    const double actual = surrogate_value(seq, w2, spec);
    res.worst = std::max(res.worst, lower - actual);
  }
  res.passed = res.worst <= res.bound;
  return res;
}

CheckResult check_telescoping(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult res{"telescoping", true, 0.0, 1e-9, trials};
  for (int trial = 0; trial < trials; ++trial) {
    const int t = uniform_int(rng, 2, 40);
    const int dim = uniform_int(rng, 1, 6);
    const auto pts = random_points(rng, t, dim, true, true);
    const auto full = make_sequence(pts);
    const auto w = random_weights(rng, dim, 5.0);

    std::vector<int> cuts{0};
    for (int i = 1; i < t; ++i)
      if (uniform(rng, 0.0, 1.0) < 0.3) cuts.push_back(i);
    cuts.push_back(t);

    const MeasureSpec measures[] = {
        MeasureSpec::prec_at_k(uniform(rng, 0.05, 0.95)),
        MeasureSpec::prbep(),
        MeasureSpec::pauc(uniform(rng, 0.05, 1.0)),
        MeasureSpec::fmeasure()};
    for (const auto& m : measures) {
      double total = 0.0;
      for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
        const Sequence prefix(full.begin(), full.begin() + cuts[b]);
        const Sequence upto(full.begin(), full.begin() + cuts[b + 1]);
        total += sequence_loss_or_zero(upto, w, m) -
                 sequence_loss_or_zero(prefix, w, m);
      }
      res.worst =
          std::max(res.worst, std::abs(total - surrogate_value(full, w, m)));
    }
  }
  res.passed = res.worst <= res.bound;
  return res;
}

CheckResult check_beta1_consistency(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult res{"beta1_consistency", true, 0.0, 1e-12, trials};
  for (int trial = 0; trial < trials; ++trial) {
    const int t = uniform_int(rng, 2, 30);
    const int dim = uniform_int(rng, 1, 6);
    Dataset d;
    d.points = random_points(rng, t, dim, true, true);
    d.finalize();
    d.dimension = dim;
    const auto w = random_weights(rng, dim, 2.0);

    std::vector<double> s(t);
    for (int i = 0; i < t; ++i) s[i] = score(w, d.points[i]);

    // Plain AUC by pair counting, ties counted as correct.
    long long correct = 0, pairs = 0;
    double hinge_sum = 0.0;
    for (int i = 0; i < t; ++i) {
      if (d.points[i].label <= 0) continue;
      for (int j = 0; j < t; ++j) {
        if (d.points[j].label > 0) continue;
        ++pairs;
        if (s[i] >= s[j]) ++correct;
        hinge_sum += std::max(0.0, 1.0 - (s[i] - s[j]));
      }
    }
    const double auc = static_cast<double>(correct) / pairs;
    const double raw = raw_pauc(d, w, 1.0).value;
    const auto seq = make_sequence(d);
    const double surr = eval_pauc(seq, w, 1.0, /*normalize=*/false).value;
    res.worst = std::max({res.worst, std::abs(raw - auc),
                          std::abs(surr - hinge_sum)});
  }
  res.passed = res.worst <= res.bound;
  return res;
}

std::vector<CheckResult> run_verification(int trials, std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(
      check_oracle_structural(MeasureSpec::prec_at_k(0.5), trials, seed));
  out.push_back(check_oracle_structural(MeasureSpec::prbep(), trials, seed + 1));
  out.push_back(
      check_oracle_structural(MeasureSpec::fmeasure(), trials, seed + 2));
  out.push_back(check_oracle_pauc(trials, seed + 3));
  out.push_back(check_sorted_lipschitz(trials, seed + 4));
  out.push_back(
      check_penalty_stability(MeasureSpec::prec_at_k(0.5), trials, seed + 5));
  out.push_back(
      check_penalty_stability(MeasureSpec::prbep(), trials, seed + 6));
  out.push_back(check_subgradient_validity(MeasureSpec::prec_at_k(0.5),
                                           trials, seed + 7));
  out.push_back(
      check_subgradient_validity(MeasureSpec::prbep(), trials, seed + 8));
  out.push_back(
      check_subgradient_validity(MeasureSpec::pauc(0.3), trials, seed + 9));
  out.push_back(
      check_subgradient_validity(MeasureSpec::fmeasure(), trials, seed + 10));
  out.push_back(check_telescoping(trials, seed + 11));
  out.push_back(check_beta1_consistency(trials, seed + 12));
  return out;
}

}  // namespace ndopt
