#pragma once

#include <map>
#include <span>
#include <vector>

#include "adpt/core.hpp"

namespace adpt {

/// Ground-truth or result record; (frame, id) is unique within a set.
struct LabeledBox {
    int frame;
    int id;
    BoundingBox bbox;

    bool operator==(const LabeledBox&) const = default;
};

struct MetricsReport {
    double idf1 = 0.0;
    double mota = 0.0;
    long fp = 0;
    long fn = 0;
    long idsw = 0;
    long frag = 0;
    long gt_total = 0;
    long pred_total = 0;
    long idtp = 0;
};

/// gt id -> pred id.
using Correspondence = std::map<int, int>;

/// Per-frame CLEAR correspondence: pairs from `prev` that still overlap by at
/// least `iou_threshold` are kept first, the rest are matched by maximum IOU.
Correspondence clear_match(std::span<const LabeledBox> gt_frame, std::span<const LabeledBox> pred_frame,
                           const Correspondence& prev, double iou_threshold = 0.5);

/// CLEAR counts (FP, FN, IDSW, Frag, MOTA) and IDF1 for one sequence.
MetricsReport evaluate(std::span<const LabeledBox> gt, std::span<const LabeledBox> pred,
                       double iou_threshold = 0.5);

/// Pools several sequences: counts are summed and the ratios recomputed.
MetricsReport combine_reports(std::span<const MetricsReport> reports);

std::vector<LabeledBox> to_labeled(std::span<const TrackedBox> boxes);

}  // namespace adpt
