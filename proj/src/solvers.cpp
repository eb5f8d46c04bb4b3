#include "ndopt/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace ndopt {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t pass_seed(std::uint64_t base, int pass) {
  return base + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(pass);
}

struct SgdState {
  WeightVector w, sum_w;
  int e = 0;
  double solver_ms = 0.0;
  std::vector<double> epoch_times_ms;
};

void epoch_update(SgdState& st, const Sequence& seq, const SgdConfig& cfg,
                  const FeasibleSet& W, const EpochObserver& obs) {
  const auto t0 = Clock::now();
  ++st.e;
  // Epochs lacking the measure's required classes contribute a zero update.
  if (measure_feasible(seq, cfg.measure)) {
    const auto ev = eval_surrogate(seq, st.w, cfg.measure);
    const double step = cfg.eta_scale / std::sqrt(static_cast<double>(st.e));
    for (std::size_t j = 0; j < st.w.size(); ++j)
      st.w[j] -= step * ev.subgradient[j];
    st.w = project(std::move(st.w), W);
  }
  for (std::size_t j = 0; j < st.w.size(); ++j) st.sum_w[j] += st.w[j];
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  st.solver_ms += ms;
  st.epoch_times_ms.push_back(ms);
  if (obs) {
    WeightVector avg = st.sum_w;
    for (double& v : avg) v /= st.e;
    obs(st.e, avg, st.solver_ms);
  }
}

SolverOutput finish(SgdState&& st) {
  SolverOutput out;
  out.epochs = st.e;
  out.epoch_times_ms = std::move(st.epoch_times_ms);
  out.averaged_model = std::move(st.sum_w);
  if (st.e > 0)
    for (double& v : out.averaged_model) v /= st.e;
  out.final_model = std::move(st.w);
  return out;
}

SgdState init_state(int dim) {
  SgdState st;
  st.w.assign(dim, 0.0);
  st.sum_w.assign(dim, 0.0);
  return st;
}

}  // namespace

void reservoir_offer(ReservoirBuffer& buf, int point_index,
                     std::mt19937_64& rng) {
  ++buf.seen;
  if (static_cast<int>(buf.items.size()) < buf.capacity) {
    buf.items.push_back(point_index);
    return;
  }
  std::uniform_int_distribution<long> slot(0, buf.seen - 1);
  const long r = slot(rng);
  if (r < buf.capacity) buf.items[r] = point_index;
}

SolverOutput run_1pmb(const Dataset& d, const StreamOrder& order,
                      const SgdConfig& cfg, const FeasibleSet& W,
                      const EpochObserver& obs) {
  if (d.points.empty()) throw std::invalid_argument("empty dataset");
  const int n = static_cast<int>(d.size());
  const int s = std::max(1, cfg.buffer_size_s);
  auto st = init_state(d.dimension);

  for (int pass = 0; pass < cfg.passes; ++pass) {
    const std::vector<int>& perm =
        pass == 0 ? order.permutation
                  : shuffle(d, pass_seed(cfg.seed, pass)).permutation;
    for (int start = 0; start < n; start += s) {
      const int end = std::min(start + s, n);
      Sequence seq;
      seq.reserve(end - start);
      for (int p = start; p < end; ++p)
        seq.push_back({&d.points[perm[p]], perm[p]});
      epoch_update(st, seq, cfg, W, obs);
    }
  }
  return finish(std::move(st));
}

SolverOutput run_2pmb(const Dataset& d, const StreamOrder& order,
                      const SgdConfig& cfg, const FeasibleSet& W,
                      const EpochObserver& obs) {
  if (d.n_pos < 1 || d.n_neg < 1)
    throw std::invalid_argument("2PMB requires both classes");
  const int n = static_cast<int>(d.size());
  const int s = std::max(1, cfg.buffer_size_s);
  const int rare_label = cfg.rare_class_negative ? -1 : 1;

  // Pass 1: stream sample of the rare class.
  ReservoirBuffer buf;
  buf.capacity = s;
  std::mt19937_64 rng(cfg.seed);
  for (int p = 0; p < n; ++p) {
    const int idx = order.permutation[p];
    if (d.points[idx].label == rare_label) reservoir_offer(buf, idx, rng);
  }

  Sequence buffered;
  buffered.reserve(buf.items.size());
  for (int idx : buf.items) buffered.push_back({&d.points[idx], idx});

  // Pass 2: stream the non-rare class in epochs against the fixed buffer.
  auto st = init_state(d.dimension);
  for (int pass = 0; pass < cfg.passes; ++pass) {
    const std::vector<int>& perm =
        pass == 0 ? order.permutation
                  : shuffle(d, pass_seed(cfg.seed, pass + 1)).permutation;
    std::vector<int> stream;
    stream.reserve(n);
    for (int p = 0; p < n; ++p)
      if (d.points[perm[p]].label != rare_label) stream.push_back(perm[p]);
    for (int start = 0; start < static_cast<int>(stream.size());
         start += s) {
      const int end = std::min<int>(start + s, stream.size());
      Sequence seq = buffered;
      for (int p = start; p < end; ++p)
        seq.push_back({&d.points[stream[p]], stream[p]});
      epoch_update(st, seq, cfg, W, obs);
    }
  }
  return finish(std::move(st));
}

SolverOutput run_psg(const Dataset& d, const SgdConfig& cfg,
                     const FeasibleSet& W, const EpochObserver& obs) {
  if (d.points.empty()) throw std::invalid_argument("empty dataset");
  const auto seq = make_sequence(d);
  auto st = init_state(d.dimension);
  for (int it = 0; it < cfg.passes; ++it) epoch_update(st, seq, cfg, W, obs);
  return finish(std::move(st));
}

}  // namespace ndopt
