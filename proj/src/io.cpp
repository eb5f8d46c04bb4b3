#include "ndopt/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace ndopt {

Dataset parse_libsvm(std::istream& in) {
  Dataset d;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double label_value;
    if (!(ls >> label_value)) throw ParseError("malformed label", line_no);
    LabeledPoint p;
    p.label = label_value > 0 ? 1 : -1;
    std::string tok;
    int last_idx = 0;
    while (ls >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw ParseError("malformed feature '" + tok + "'", line_no);
      int idx;
      double val;
      try {
        std::size_t used;
        idx = std::stoi(tok.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(tok);
        val = std::stod(tok.substr(colon + 1), &used);
        if (used != tok.size() - colon - 1) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("malformed feature '" + tok + "'", line_no);
      }
      if (idx < 1) throw ParseError("feature index must be >= 1", line_no);
      if (idx == last_idx)
        throw ParseError("duplicate feature index " + std::to_string(idx),
                         line_no);
      if (idx < last_idx)
        throw ParseError("feature indices must be ascending", line_no);
      last_idx = idx;
      p.features.emplace_back(idx, val);
    }
    d.points.push_back(std::move(p));
  }
  d.finalize();
  d.normalize_features();
  return d;
}

Dataset load_libsvm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_libsvm(in);
}

void write_libsvm(const Dataset& d, std::ostream& out) {
  out << std::setprecision(17);
  for (const auto& p : d.points) {
    out << (p.label > 0 ? "+1" : "-1");
    for (const auto& [idx, v] : p.features) out << ' ' << idx << ':' << v;
    out << '\n';
  }
}

Dataset gen_synthetic(const SynthSpec& spec) {
  if (spec.n < 1 || spec.dim < 1 ||
      !(spec.pos_fraction > 0.0 && spec.pos_fraction < 1.0) ||
      spec.separation < 0.0 || spec.noise < 0.0)
    throw std::invalid_argument("bad synthetic spec");

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::bernoulli_distribution is_pos(spec.pos_fraction);

  std::vector<double> dir(spec.dim);
  double dn = 0.0;
  for (double& v : dir) {
    v = gauss(rng);
    dn += v * v;
  }
  dn = std::sqrt(dn);
  if (dn == 0.0) dn = 1.0;
  for (double& v : dir) v /= dn;

  Dataset d;
  d.points.reserve(spec.n);
  for (long i = 0; i < spec.n; ++i) {
    LabeledPoint p;
    p.label = is_pos(rng) ? 1 : -1;
    const double shift = 0.5 * spec.separation * p.label;
    p.features.reserve(spec.dim);
    for (int j = 0; j < spec.dim; ++j) {
      const double v = shift * dir[j] + spec.noise * gauss(rng);
      if (v != 0.0) p.features.emplace_back(j + 1, v);
    }
    d.points.push_back(std::move(p));
  }
  d.finalize();
  d.dimension = std::max(d.dimension, spec.dim);
  d.normalize_features();
  return d;
}

std::pair<Dataset, Dataset> stratified_split(const Dataset& d,
                                             double train_fraction,
                                             std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw std::invalid_argument("train fraction must be in (0,1)");
  std::vector<int> pos, neg;
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    (d.points[i].label > 0 ? pos : neg).push_back(i);

  std::mt19937_64 rng(seed);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::shuffle(neg.begin(), neg.end(), rng);

  std::vector<char> in_train(d.size(), 0);
  const auto take = [&](std::vector<int>& v) {
    const auto cut = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(v.size())));
    for (std::size_t i = 0; i < cut; ++i) in_train[v[i]] = 1;
  };
  take(pos);
  take(neg);

  Dataset train, test;
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    (in_train[i] ? train : test).points.push_back(d.points[i]);
  train.finalize();
  test.finalize();
  // Points are already in the unit ball; keep the parent's scale so train
  // and test scores stay comparable.
  train.dimension = d.dimension;
  test.dimension = d.dimension;
  return {std::move(train), std::move(test)};
}

void save_model(const WeightVector& w, std::ostream& out) {
  out << w.size() << '\n' << std::setprecision(17);
  for (std::size_t i = 0; i < w.size(); ++i)
    out << (i ? " " : "") << w[i];
  out << '\n';
}

WeightVector load_model(std::istream& in) {
  std::size_t dim;
  if (!(in >> dim)) throw std::runtime_error("malformed model file");
  WeightVector w(dim);
  for (auto& v : w)
    if (!(in >> v)) throw std::runtime_error("malformed model file");
  return w;
}

void write_trace_csv(const ExperimentTrace& trace, std::ostream& out) {
  out << "wall_clock_ms,epoch,train_surrogate,test_measure\n"
      << std::setprecision(17);
  for (const auto& r : trace.rows)
    out << r.wall_clock_ms << ',' << r.epoch << ',' << r.train_surrogate
        << ',' << r.test_measure << '\n';
}

ExperimentTrace parse_trace_csv(std::istream& in) {
  ExperimentTrace trace;
  std::string line;
  if (!std::getline(in, line) ||
      line != "wall_clock_ms,epoch,train_surrogate,test_measure")
    throw std::runtime_error("bad trace header");
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    TraceRow r;
    char c1, c2, c3;
    std::istringstream ls(line);
    if (!(ls >> r.wall_clock_ms >> c1 >> r.epoch >> c2 >> r.train_surrogate >>
          c3 >> r.test_measure) ||
        c1 != ',' || c2 != ',' || c3 != ',')
      throw ParseError("malformed trace row", line_no);
    trace.rows.push_back(r);
  }
  return trace;
}

}  // namespace ndopt
