#include "adpt/base_tracker.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace adpt {

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

Track spawn(int id, const Detection& det, const KalmanFilter& kf) {
    Track t{
        .id = id,
        .history = {det},
        .kalman = kf.init(det.bbox),
        .rep_feature = det.feature,
        .quality = {},
    };
    // A newborn track's representative feature is its own detection's.
    t.quality.append(1.0);
    return t;
}

void check_order(const TrackerState& state, int index) {
    if (state.frame_cursor && index != *state.frame_cursor + 1) {
        throw std::invalid_argument("out-of-order frame: expected " + std::to_string(*state.frame_cursor + 1) +
                                    ", got " + std::to_string(index));
    }
}

}  // namespace

void TrackerParams::validate() const {
    if (!in_unit(match_threshold) || !in_unit(appearance_gate) || !in_unit(iou_gate) || !in_unit(ema_momentum) ||
        !in_unit(min_confidence)) {
        throw std::invalid_argument("TrackerParams: thresholds must lie in [0,1]");
    }
    if (max_age < 1) {
        throw std::invalid_argument("TrackerParams: max_age must be at least 1");
    }
}

double fused_similarity(const Track& track, const Detection& det, const TrackerParams& params) {
    const double overlap = iou(state_to_bbox(track.kalman), det.bbox);
    const double cos = cosine_sim(track.rep_feature, det.feature);
    const double gated = (cos >= params.appearance_gate && overlap >= params.iou_gate) ? std::max(cos, 0.0) : 0.0;
    return std::min(overlap, gated);
}

WeightMatrix base_weight_matrix(std::span<const Track> tracks, const FrameData& frame,
                                std::span<const std::size_t> candidates, const TrackerParams& params,
                                Execution exec) {
    WeightMatrix w(tracks.size(), candidates.size());
    fill_matrix(w, exec, [&](std::size_t r, std::size_t c) {
        return fused_similarity(tracks[r], frame.detections[candidates[c]], params);
    });
    return w;
}

WeightMatrix compute_base_weights(const TrackerState& state, const FrameData& frame) {
    check_order(state, frame.index);
    const KalmanFilter kf(state.params.noise);
    std::vector<Track> predicted = state.tracks;
    for (Track& t : predicted) {
        t.kalman = kf.predict(t.kalman);
    }
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < frame.detections.size(); ++j) {
        if (frame.detections[j].confidence >= state.params.min_confidence) {
            candidates.push_back(j);
        }
    }
    return base_weight_matrix(predicted, frame, candidates, state.params, state.params.execution);
}

std::vector<std::size_t> begin_frame(TrackerState& state, const FrameData& frame) {
    check_order(state, frame.index);
    const KalmanFilter kf(state.params.noise);
    for (Track& t : state.tracks) {
        t.kalman = kf.predict(t.kalman);
        ++t.age;
    }
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < frame.detections.size(); ++j) {
        const Detection& d = frame.detections[j];
        if (d.frame != frame.index) {
            throw std::invalid_argument("detection frame does not match its FrameData index");
        }
        if (d.confidence >= state.params.min_confidence) {
            candidates.push_back(j);
        }
    }
    return candidates;
}

StepResult finish_frame(TrackerState& state, const FrameData& frame, std::span<const std::size_t> candidates,
                        const Matching& matching) {
    const TrackerParams& params = state.params;
    const KalmanFilter kf(params.noise);
    StepResult result;

    std::vector<char> track_matched(state.tracks.size(), 0);
    std::vector<char> cand_matched(candidates.size(), 0);
    for (const auto& [r, c] : matching.pairs) {
        track_matched[r] = 1;
        cand_matched[c] = 1;
        const std::size_t det_index = candidates[c];
        const Detection& det = frame.detections[det_index];
        Track& t = state.tracks[r];

        t.kalman = kf.update(t.kalman, det.bbox);
        t.quality.append(cosine_sim(t.rep_feature, det.feature));
        t.rep_feature = ema_update(t.rep_feature, det.feature, params.ema_momentum);
        t.history.push_back(det);
        t.status = TrackStatus::Active;
        t.frames_lost = 0;

        result.matching.pairs.emplace_back(r, det_index);
        result.output.push_back({frame.index, t.id, det.bbox, det.confidence});
    }
    result.matching.total_weight = matching.total_weight;

    std::vector<Track> survivors;
    survivors.reserve(state.tracks.size() + candidates.size());
    for (std::size_t r = 0; r < state.tracks.size(); ++r) {
        Track& t = state.tracks[r];
        if (!track_matched[r]) {
            ++t.frames_lost;
            t.status = t.frames_lost > params.max_age ? TrackStatus::Removed : TrackStatus::Lost;
        }
        if (t.status == TrackStatus::Removed) {
            result.removed.push_back(std::move(t));
        } else {
            survivors.push_back(std::move(t));
        }
    }

    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (cand_matched[c]) {
            continue;
        }
        const Detection& det = frame.detections[candidates[c]];
        survivors.push_back(spawn(state.next_id++, det, kf));
        result.output.push_back({frame.index, survivors.back().id, det.bbox, det.confidence});
    }

    state.tracks = std::move(survivors);
    state.frame_cursor = frame.index;
    return result;
}

StepResult step(TrackerState& state, const FrameData& frame) {
    const auto candidates = begin_frame(state, frame);
    const WeightMatrix w = base_weight_matrix(state.tracks, frame, candidates, state.params, state.params.execution);
    const Matching m = hungarian_max(w, state.params.match_threshold);
    return finish_frame(state, frame, candidates, m);
}

TrackerState fork_at(const FrameData& frame, const TrackerParams& params) {
    TrackerState state(params);
    const KalmanFilter kf(params.noise);
    for (const Detection& det : frame.detections) {
        state.tracks.push_back(spawn(state.next_id++, det, kf));
    }
    state.frame_cursor = frame.index;
    return state;
}

std::vector<TrackedBox> run_base(std::span<const FrameData> frames, const TrackerParams& params) {
    params.validate();
    TrackerState state(params);
    std::vector<TrackedBox> out;
    for (const FrameData& frame : frames) {
        auto r = step(state, frame);
        out.insert(out.end(), r.output.begin(), r.output.end());
    }
    return out;
}

}  // namespace adpt
