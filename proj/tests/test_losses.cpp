#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"

using namespace ndopt;
using test_helpers::pt;

namespace {

// The balanced pair used throughout: x1=(1),+1 and x2=(0.5),-1.
std::vector<LabeledPoint> pair_instance() {
  return {pt(1.0, 1), pt(0.5, -1)};
}

}  // namespace

TEST_CASE("top_count: rounding, clamping, FP-noise guard") {
  CHECK(top_count(0.5, 2) == 1);
  CHECK(top_count(0.5, 3) == 2);
  CHECK(top_count(1.0, 7) == 7);
  CHECK(top_count(0.001, 5) == 1);   // clamped up to 1
  CHECK(top_count(0.1, 10) == 1);    // 0.1*10 may round just above 1
  CHECK(top_count(0.3, 10) == 3);
}

TEST_CASE("prec@k surrogate: balanced pair, w=(1)") {
  const auto pts = pair_instance();
  const auto seq = make_sequence(pts);
  const auto ev = eval_prec_at_k(seq, WeightVector{1.0}, 0.5);
  CHECK(ev.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ev.witness_labels == std::vector<int>{-1, 1});
}

TEST_CASE("prec@k surrogate: balanced pair, w=0") {
  const auto pts = pair_instance();
  const auto seq = make_sequence(pts);
  CHECK(eval_prec_at_k(seq, WeightVector{0.0}, 0.5).value ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("prec@k surrogate: single positive point, w=0") {
  const std::vector<LabeledPoint> pts = {pt(1.0, 1)};
  const auto seq = make_sequence(pts);
  CHECK(eval_prec_at_k(seq, WeightVector{0.0}, 0.5).value ==
        doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("prec@k surrogate: invalid k throws") {
  const auto pts = pair_instance();
  const auto seq = make_sequence(pts);
  CHECK_THROWS_AS(eval_prec_at_k(seq, WeightVector{0.0}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_prec_at_k(seq, WeightVector{0.0}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("prbep surrogate: cardinality = positive count") {
  const auto pts = pair_instance();
  const auto seq = make_sequence(pts);
  CHECK(eval_prbep(seq, WeightVector{1.0}).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eval_prbep(seq, WeightVector{0.0}).value ==
        doctest::Approx(2.0).epsilon(1e-12));

  const std::vector<LabeledPoint> single = {pt(1.0, 1)};
  CHECK(eval_prbep(make_sequence(single), WeightVector{0.0}).value ==
        doctest::Approx(-1.0).epsilon(1e-12));

  const std::vector<LabeledPoint> all_neg = {pt(1.0, -1)};
  CHECK_THROWS_AS(eval_prbep(make_sequence(all_neg), WeightVector{0.0}),
                  std::invalid_argument);
}

TEST_CASE("pauc surrogate: three-point instance") {
  const std::vector<LabeledPoint> pts = {pt(1.0, 1), pt(0.5, -1),
                                         pt(-1.0, -1)};
  const auto seq = make_sequence(pts);
  // beta=0.5 keeps only the top negative (0.5); h(1-0.5) = 0.5.
  CHECK(eval_pauc(seq, WeightVector{1.0}, 0.5, false).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  // beta=1: h(0.5) + h(2) = 0.5 + 0; normalized by 2*1.
  CHECK(eval_pauc(seq, WeightVector{1.0}, 1.0, false).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eval_pauc(seq, WeightVector{1.0}, 1.0, true).value ==
        doctest::Approx(0.25).epsilon(1e-12));
  // w=0: every counted pair contributes h(0)=1, so normalized value is 1.
  CHECK(eval_pauc(seq, WeightVector{0.0}, 0.5, true).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eval_pauc(seq, WeightVector{0.0}, 1.0, true).value ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pauc surrogate: precondition and beta validation") {
  const std::vector<LabeledPoint> pos_only = {pt(1.0, 1)};
  CHECK_THROWS_AS(eval_pauc(make_sequence(pos_only), WeightVector{0.0}, 0.5,
                            true),
                  std::invalid_argument);
  const auto pts = pair_instance();
  CHECK_THROWS_AS(eval_pauc(make_sequence(pts), WeightVector{0.0}, 1.5, true),
                  std::invalid_argument);
}

TEST_CASE("f-measure surrogate: pair instance") {
  const std::vector<LabeledPoint> pts = {pt(1.0, 1), pt(-1.0, -1)};
  const auto seq = make_sequence(pts);
  const auto ev = eval_fmeasure(seq, WeightVector{1.0});
  CHECK(ev.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev.witness_labels == std::vector<int>{1, -1});
  CHECK(eval_fmeasure(seq, WeightVector{0.0}).value ==
        doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<LabeledPoint> single = {pt(1.0, 1)};
  CHECK(eval_fmeasure(make_sequence(single), WeightVector{1.0}).value ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("top-beta negative selection") {
  const std::vector<LabeledPoint> pts = {pt(1.0, 1), pt(0.5, -1),
                                         pt(-1.0, -1)};
  const auto seq = make_sequence(pts);
  const auto sel = select_top_beta_negatives(seq, WeightVector{1.0}, 0.5);
  CHECK(sel.threshold_rank == 1);
  CHECK(sel.selected == std::vector<int>{1});
  // beta=1 selects all negatives.
  CHECK(select_top_beta_negatives(seq, WeightVector{1.0}, 1.0).selected ==
        std::vector<int>{1, 2});
  // All-equal scores: lowest ids win.
  const auto tied = select_top_beta_negatives(seq, WeightVector{0.0}, 0.5);
  CHECK(tied.selected == std::vector<int>{1});
}

TEST_CASE("value and subgradient are invariant to input permutation") {
  const std::vector<LabeledPoint> pts = {pt(0.7, 1), pt(0.3, -1),
                                         pt(-0.2, 1), pt(0.9, -1)};
  Sequence fwd = make_sequence(pts);
  Sequence rev(fwd.rbegin(), fwd.rend());
  const WeightVector w{0.8};
  for (const auto& m :
       {MeasureSpec::prec_at_k(0.5), MeasureSpec::prbep(),
        MeasureSpec::pauc(0.5), MeasureSpec::fmeasure()}) {
    const auto a = eval_surrogate(fwd, w, m);
    const auto b = eval_surrogate(rev, w, m);
    CHECK(a.value == b.value);  // bitwise: same id-ordered accumulation
    CHECK(a.subgradient == b.subgradient);
  }
}

TEST_CASE("measure feasibility and normalization") {
  const std::vector<LabeledPoint> pos_only = {pt(1.0, 1)};
  const auto seq = make_sequence(pos_only);
  CHECK(measure_feasible(seq, MeasureSpec::prec_at_k(0.5)));
  CHECK(measure_feasible(seq, MeasureSpec::prbep()));
  CHECK(!measure_feasible(seq, MeasureSpec::pauc(0.5)));
  CHECK(!measure_feasible(Sequence{}, MeasureSpec::prec_at_k(0.5)));

  const auto pts = pair_instance();
  const auto pair_seq = make_sequence(pts);
  CHECK(normalized_surrogate(pair_seq, WeightVector{1.0},
                             MeasureSpec::prec_at_k(0.5)) ==
        doctest::Approx(0.5));  // value 1.0 over t=2
}

TEST_CASE("measure spec factories validate their parameters") {
  CHECK_THROWS_AS(MeasureSpec::prec_at_k(1.5), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpec::pauc(1.5), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpec::pauc(0.0), std::invalid_argument);
  CHECK(MeasureSpec::prec_at_k(0.3).name() == "preck");
  CHECK(MeasureSpec::prbep().name() == "prbep");
  CHECK(MeasureSpec::pauc(0.1).name() == "pauc");
  CHECK(MeasureSpec::fmeasure().name() == "fmeasure");
}
