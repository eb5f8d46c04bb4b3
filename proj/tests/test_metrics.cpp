#include "doctest.h"
#include "helpers.hpp"
#include "ndopt/metrics.hpp"

using namespace ndopt;
using test_helpers::dataset_1d;

TEST_CASE("raw prec@k") {
  // Scores (3,2,1,0) under w=(1), labels (+,-,+,-).
  const auto d = dataset_1d({{3.0, 1}, {2.0, -1}, {1.0, 1}, {0.0, -1}});
  const WeightVector w{1.0};
  CHECK(raw_prec_at_k(d, w, 0.5).value == doctest::Approx(0.5));

  // Perfect separator: top slots all positive.
  const auto sep = dataset_1d({{3.0, 1}, {2.0, 1}, {1.0, -1}, {0.0, -1}});
  CHECK(raw_prec_at_k(sep, w, 0.5).value == doctest::Approx(1.0));

  // Anti-separator: positives scored lowest.
  const auto anti = dataset_1d({{3.0, -1}, {2.0, -1}, {1.0, 1}, {0.0, 1}});
  CHECK(raw_prec_at_k(anti, w, 0.5).value == doctest::Approx(0.0));
}

TEST_CASE("raw prbep") {
  const auto d = dataset_1d({{3.0, 1}, {2.0, -1}, {1.0, 1}, {0.0, -1}});
  const WeightVector w{1.0};
  const auto r = raw_prbep(d, w);
  CHECK(r.value == doctest::Approx(0.5));
  CHECK(r.t_pos == 2);

  const auto sep = dataset_1d({{3.0, 1}, {2.0, 1}, {1.0, -1}, {0.0, -1}});
  CHECK(raw_prbep(sep, w).value == doctest::Approx(1.0));
}

TEST_CASE("raw pauc") {
  const WeightVector w{1.0};
  // pos {1}, neg {0.5, -1}, beta=1 -> both pairs correct.
  CHECK(raw_pauc(dataset_1d({{1.0, 1}, {0.5, -1}, {-1.0, -1}}), w, 1.0)
            .value == doctest::Approx(1.0));
  CHECK(raw_pauc(dataset_1d({{0.6, 1}, {0.5, -1}, {-1.0, -1}}), w, 1.0)
            .value == doctest::Approx(1.0));
  CHECK(raw_pauc(dataset_1d({{0.4, 1}, {0.5, -1}, {-1.0, -1}}), w, 1.0)
            .value == doctest::Approx(0.5));
  // w = 0: every comparison ties and ties count as correct.
  CHECK(raw_pauc(dataset_1d({{1.0, 1}, {0.5, -1}}), WeightVector{0.0}, 0.5)
            .value == doctest::Approx(1.0));
}

TEST_CASE("raw F1") {
  const WeightVector w{1.0};
  // TP=1 (pos at 1), FP=1 (neg at 0.5), FN=0 -> F1 = 2/3.
  CHECK(raw_f1(dataset_1d({{1.0, 1}, {0.5, -1}}), w).value ==
        doctest::Approx(2.0 / 3.0));
  // Perfect predictions.
  CHECK(raw_f1(dataset_1d({{1.0, 1}, {-0.5, -1}}), w).value ==
        doctest::Approx(1.0));
  // Zero predicted positives -> 0 by convention.
  CHECK(raw_f1(dataset_1d({{-1.0, 1}, {-0.5, -1}}), w).value ==
        doctest::Approx(0.0));
}

TEST_CASE("best threshold F1 dominates the fixed-threshold value") {
  const auto d = dataset_1d({{1.0, 1}, {0.8, -1}, {0.5, 1}, {-0.2, -1}});
  const WeightVector w{1.0};
  CHECK(best_threshold_f1(d, w).value >= raw_f1(d, w).value);
  // Threshold at the top positive separates perfectly here? No: 0.8 negative
  // sits between the positives, so the best F1 is 2*2/(2*2+1) = 0.8.
  CHECK(best_threshold_f1(d, w).value == doctest::Approx(0.8));
}

TEST_CASE("raw_measure dispatch") {
  const auto d = dataset_1d({{1.0, 1}, {0.5, -1}});
  const WeightVector w{1.0};
  CHECK(raw_measure(d, w, MeasureSpec::prec_at_k(0.5)).measure_name ==
        "preck");
  CHECK(raw_measure(d, w, MeasureSpec::prbep()).measure_name == "prbep");
  CHECK(raw_measure(d, w, MeasureSpec::pauc(0.5)).measure_name == "pauc");
  CHECK(raw_measure(d, w, MeasureSpec::fmeasure()).measure_name == "f1");
}
