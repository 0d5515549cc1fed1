#include <doctest.h>

#include <stdexcept>

#include "adpt/base_tracker.hpp"
#include "adpt/metrics.hpp"
#include "adpt/synthworld.hpp"

using namespace adpt;

namespace {

LabeledBox box(int frame, int id, double l, double t = 0, double w = 10, double h = 10) {
    return {frame, id, BoundingBox(l, t, w, h)};
}

// Two identities three frames apart in x; predictions swap ids at frame 3.
std::vector<LabeledBox> swap_gt() {
    return {box(1, 1, 0), box(1, 2, 100), box(2, 1, 0), box(2, 2, 100), box(3, 1, 0), box(3, 2, 100)};
}
std::vector<LabeledBox> swap_pred() {
    return {box(1, 7, 0), box(1, 8, 100), box(2, 7, 0), box(2, 8, 100), box(3, 8, 0), box(3, 7, 100)};
}

void check_identity(const MetricsReport& r) {
    CHECK(r.mota == doctest::Approx(1.0 - static_cast<double>(r.fp + r.fn + r.idsw) / r.gt_total).epsilon(1e-15));
    CHECK(r.idf1 >= 0.0);
    CHECK(r.idf1 <= 1.0);
}

}  // namespace

TEST_CASE("clear_match examples") {
    const std::vector<LabeledBox> g{box(1, 1, 0), box(1, 2, 50)};
    const Correspondence full = clear_match(g, g, {});
    CHECK(full == Correspondence{{1, 1}, {2, 2}});

    const std::vector<LabeledBox> far{box(1, 5, 500), box(1, 6, 700)};
    CHECK(clear_match(g, far, {}).empty());

    // previous pair still at IOU 0.55 survives a fresh candidate at IOU 0.6
    const double d55 = 10 * (1 - 0.55) / 1.55, d60 = 10 * (1 - 0.6) / 1.6;
    const std::vector<LabeledBox> gt1{box(1, 1, 0)};
    const std::vector<LabeledBox> pr{box(1, 3, d55), box(1, 4, -d60)};
    CHECK(iou(gt1[0].bbox, pr[0].bbox) == doctest::Approx(0.55));
    CHECK(iou(gt1[0].bbox, pr[1].bbox) == doctest::Approx(0.6));
    CHECK(clear_match(gt1, pr, {{1, 3}}) == Correspondence{{1, 3}});
    CHECK(clear_match(gt1, pr, {}) == Correspondence{{1, 4}});
    CHECK_THROWS_AS(clear_match(gt1, pr, {}, 0.0), std::invalid_argument);
}

TEST_CASE("evaluate examples") {
    const auto gt = swap_gt();
    const MetricsReport same = evaluate(gt, gt);
    CHECK(same.idf1 == 1.0);
    CHECK(same.mota == 1.0);
    CHECK(same.fp + same.fn + same.idsw + same.frag == 0);

    const MetricsReport none = evaluate(gt, {});
    CHECK(none.fn == 6);
    CHECK(none.fp == 0);
    CHECK(none.idsw == 0);
    CHECK(none.mota == 0.0);
    CHECK(none.idf1 == 0.0);

    const MetricsReport sw = evaluate(gt, swap_pred());
    CHECK(sw.fp == 0);
    CHECK(sw.fn == 0);
    CHECK(sw.idsw == 2);
    CHECK(sw.frag == 0);
    CHECK(sw.mota == doctest::Approx(0.666667).epsilon(1e-6));
    CHECK(sw.idf1 == doctest::Approx(0.666667).epsilon(1e-6));
    check_identity(sw);

    CHECK_THROWS_AS(evaluate({}, gt), std::invalid_argument);
    std::vector<LabeledBox> dup = gt;
    dup.push_back(gt[0]);
    CHECK_THROWS_AS(evaluate(dup, gt), std::invalid_argument);
}

TEST_CASE("fragmentation counts each gap") {
    const std::vector<LabeledBox> gt{box(1, 1, 0), box(2, 1, 0), box(3, 1, 0), box(4, 1, 0), box(5, 1, 0)};
    const std::vector<LabeledBox> pred{box(1, 9, 0), box(3, 9, 0), box(5, 9, 0)};
    const MetricsReport r = evaluate(gt, pred);
    CHECK(r.frag == 2);
    CHECK(r.fn == 2);
    CHECK(r.idsw == 0);
    check_identity(r);
}

TEST_CASE("metric invariances on synthetic scenarios") {
    ScenarioConfig c;
    c.seed = 8;
    c.identities = 6;
    c.crossings = 2;
    c.det_noise_px = 2;
    c.feature_noise = 0.2;
    c.drop_prob_occluded = 1.0;
    const Scenario s = generate(c);
    const auto pred = to_labeled(run_base(s.det_frames, {}));
    const MetricsReport r = evaluate(s.gt, pred);
    check_identity(r);

    // renaming prediction ids by a bijection
    std::vector<LabeledBox> renamed = pred;
    for (LabeledBox& b : renamed) b.id = 1000 - 3 * b.id;
    const MetricsReport rr = evaluate(s.gt, renamed);
    CHECK(rr.idf1 == r.idf1);
    CHECK(rr.mota == r.mota);
    CHECK(rr.fp == r.fp);
    CHECK(rr.fn == r.fn);
    CHECK(rr.idsw == r.idsw);
    CHECK(rr.frag == r.frag);

    // swapping roles when both sides hold the same boxes
    std::vector<LabeledBox> relabeled = s.gt;
    for (LabeledBox& b : relabeled) b.id = (b.frame > 60 && b.id <= 2) ? 3 - b.id : b.id;
    CHECK(evaluate(s.gt, relabeled).idf1 == doctest::Approx(evaluate(relabeled, s.gt).idf1).epsilon(1e-15));

    const MetricsReport perfect = evaluate(s.gt, s.gt);
    CHECK(perfect.idf1 == 1.0);
    CHECK(perfect.mota == 1.0);
}

TEST_CASE("combine_reports sums counts") {
    const MetricsReport a = evaluate(swap_gt(), swap_pred());
    const MetricsReport b = evaluate(swap_gt(), swap_gt());
    const std::vector<MetricsReport> both{a, b};
    const MetricsReport t = combine_reports(both);
    CHECK(t.idsw == 2);
    CHECK(t.gt_total == 12);
    CHECK(t.mota == doctest::Approx(1 - 2.0 / 12));
    CHECK(t.idf1 == doctest::Approx(2.0 * (a.idtp + b.idtp) / 24.0));
}
