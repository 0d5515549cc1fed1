#include "adpt/metrics.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "adpt/assignment.hpp"

namespace adpt {

namespace {

using FrameIndex = std::map<int, std::vector<LabeledBox>>;

FrameIndex group_by_frame(std::span<const LabeledBox> boxes, const char* what) {
    FrameIndex out;
    std::set<std::pair<int, int>> seen;
    for (const LabeledBox& b : boxes) {
        if (!seen.emplace(b.frame, b.id).second) {
            throw std::invalid_argument(std::string(what) + ": duplicate (frame, id) = (" + std::to_string(b.frame) +
                                        ", " + std::to_string(b.id) + ")");
        }
        out[b.frame].push_back(b);
    }
    return out;
}

const LabeledBox* find_id(std::span<const LabeledBox> boxes, int id) {
    for (const LabeledBox& b : boxes) {
        if (b.id == id) {
            return &b;
        }
    }
    return nullptr;
}

void finish_ratios(MetricsReport& r) {
    r.mota = r.gt_total > 0 ? 1.0 - static_cast<double>(r.fp + r.fn + r.idsw) / static_cast<double>(r.gt_total) : 0.0;
    const long denom = r.gt_total + r.pred_total;
    r.idf1 = denom > 0 ? 2.0 * static_cast<double>(r.idtp) / static_cast<double>(denom) : 0.0;
}

}  // namespace

Correspondence clear_match(std::span<const LabeledBox> gt_frame, std::span<const LabeledBox> pred_frame,
                           const Correspondence& prev, double iou_threshold) {
    if (!(iou_threshold > 0.0 && iou_threshold <= 1.0)) {
        throw std::invalid_argument("clear_match: iou_threshold must lie in (0,1]");
    }
    Correspondence out;
    std::set<int> pred_taken;
    for (const auto& [gid, pid] : prev) {
        const LabeledBox* g = find_id(gt_frame, gid);
        const LabeledBox* p = find_id(pred_frame, pid);
        if (g && p && !pred_taken.contains(pid) && iou(g->bbox, p->bbox) >= iou_threshold) {
            out[gid] = pid;
            pred_taken.insert(pid);
        }
    }

    std::vector<const LabeledBox*> gt_left, pred_left;
    for (const LabeledBox& g : gt_frame) {
        if (!out.contains(g.id)) {
            gt_left.push_back(&g);
        }
    }
    for (const LabeledBox& p : pred_frame) {
        if (!pred_taken.contains(p.id)) {
            pred_left.push_back(&p);
        }
    }
    WeightMatrix overlap(gt_left.size(), pred_left.size());
    for (std::size_t i = 0; i < gt_left.size(); ++i) {
        for (std::size_t j = 0; j < pred_left.size(); ++j) {
            overlap(i, j) = iou(gt_left[i]->bbox, pred_left[j]->bbox);
        }
    }
    for (const auto& [i, j] : hungarian_max(overlap, iou_threshold).pairs) {
        out[gt_left[i]->id] = pred_left[j]->id;
    }
    return out;
}

MetricsReport evaluate(std::span<const LabeledBox> gt, std::span<const LabeledBox> pred, double iou_threshold) {
    if (gt.empty()) {
        throw std::invalid_argument("evaluate: ground truth is empty");
    }
    const FrameIndex gt_frames = group_by_frame(gt, "ground truth");
    const FrameIndex pred_frames = group_by_frame(pred, "prediction");

    std::set<int> frames;
    for (const auto& [f, _] : gt_frames) frames.insert(f);
    for (const auto& [f, _] : pred_frames) frames.insert(f);

    std::map<int, std::size_t> gt_index, pred_index;
    for (const LabeledBox& b : gt) gt_index.try_emplace(b.id, gt_index.size());
    for (const LabeledBox& b : pred) pred_index.try_emplace(b.id, pred_index.size());
    WeightMatrix co_occurrence(gt_index.size(), pred_index.size());

    MetricsReport r;
    r.gt_total = static_cast<long>(gt.size());
    r.pred_total = static_cast<long>(pred.size());

    Correspondence last_match;
    std::set<int> in_gap;
    const std::vector<LabeledBox> none;
    for (int f : frames) {
        const auto git = gt_frames.find(f);
        const auto pit = pred_frames.find(f);
        const auto& gf = git == gt_frames.end() ? none : git->second;
        const auto& pf = pit == pred_frames.end() ? none : pit->second;

        for (const LabeledBox& g : gf) {
            for (const LabeledBox& p : pf) {
                if (iou(g.bbox, p.bbox) >= iou_threshold) {
                    co_occurrence(gt_index.at(g.id), pred_index.at(p.id)) += 1.0;
                }
            }
        }

        const Correspondence corr = clear_match(gf, pf, last_match, iou_threshold);
        r.fp += static_cast<long>(pf.size() - corr.size());
        r.fn += static_cast<long>(gf.size() - corr.size());
        for (const LabeledBox& g : gf) {
            const auto m = corr.find(g.id);
            if (m == corr.end()) {
                if (last_match.contains(g.id)) {
                    in_gap.insert(g.id);
                }
                continue;
            }
            const auto last = last_match.find(g.id);
            if (last != last_match.end() && last->second != m->second) {
                ++r.idsw;
            }
            if (in_gap.erase(g.id) > 0) {
                ++r.frag;
            }
            last_match[g.id] = m->second;
        }
    }

    r.idtp = static_cast<long>(hungarian_max(co_occurrence, 0.5).total_weight + 0.5);
    finish_ratios(r);
    return r;
}

MetricsReport combine_reports(std::span<const MetricsReport> reports) {
    MetricsReport total;
    for (const MetricsReport& r : reports) {
        total.fp += r.fp;
        total.fn += r.fn;
        total.idsw += r.idsw;
        total.frag += r.frag;
        total.gt_total += r.gt_total;
        total.pred_total += r.pred_total;
        total.idtp += r.idtp;
    }
    finish_ratios(total);
    return total;
}

std::vector<LabeledBox> to_labeled(std::span<const TrackedBox> boxes) {
    std::vector<LabeledBox> out;
    out.reserve(boxes.size());
    for (const TrackedBox& b : boxes) {
        out.push_back({b.frame, b.track_id, b.bbox});
    }
    return out;
}

}  // namespace adpt
