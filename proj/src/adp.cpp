#include "adpt/adp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace adpt {

ScoreVariant parse_variant(std::string_view name) {
    if (name == "main") return ScoreVariant::Main;
    if (name == "f1") return ScoreVariant::F1;
    if (name == "f2") return ScoreVariant::F2;
    if (name == "f3") return ScoreVariant::F3;
    throw std::invalid_argument("unknown score variant: " + std::string(name));
}

std::string_view variant_name(ScoreVariant v) {
    switch (v) {
        case ScoreVariant::Main: return "main";
        case ScoreVariant::F1: return "f1";
        case ScoreVariant::F2: return "f2";
        case ScoreVariant::F3: return "f3";
    }
    return "main";
}

void AdpConfig::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("AdpConfig: alpha must lie in [0,1]");
    }
    if (horizon < 1 || window < 1) {
        throw std::invalid_argument("AdpConfig: horizon and window must be at least 1");
    }
    if (crowd_min_age < 1) {
        throw std::invalid_argument("AdpConfig: crowd_min_age must be at least 1");
    }
}

std::vector<TentativeTrack> simulate_tentative(std::span<const FrameData> frames, const TrackerParams& params) {
    if (frames.empty()) {
        throw std::invalid_argument("simulate_tentative: empty frame list");
    }
    const std::size_t seeds = frames.front().detections.size();
    TrackerState sim = fork_at(frames.front(), params);
    std::vector<Track> retired;
    for (const FrameData& frame : frames.subspan(1)) {
        auto r = step(sim, frame);
        for (Track& t : r.removed) {
            retired.push_back(std::move(t));
        }
    }

    std::vector<TentativeTrack> out(seeds);
    for (std::size_t j = 0; j < seeds; ++j) {
        out[j].origin_det = j;
    }
    // Fork ids are 1..seeds in detection order.
    auto harvest = [&](std::vector<Track>& tracks) {
        for (Track& t : tracks) {
            if (t.id >= 1 && static_cast<std::size_t>(t.id) <= seeds) {
                out[static_cast<std::size_t>(t.id) - 1].entries = std::move(t.history);
            }
        }
    };
    harvest(sim.tracks);
    harvest(retired);
    return out;
}

std::vector<double> motion_walk_ious(const Track& track, const TentativeTrack& tent, const KalmanFilter& kf) {
    std::vector<double> ious;
    if (tent.entries.empty()) {
        return ious;
    }
    ious.reserve(tent.entries.size());
    KalmanState clone = track.kalman;
    int frame = tent.entries.front().frame;
    for (std::size_t b = 0; b < tent.entries.size(); ++b) {
        const Detection& e = tent.entries[b];
        for (; frame < e.frame; ++frame) {
            clone = kf.predict(clone);
        }
        ious.push_back(iou(state_to_bbox(clone), e.bbox));
        if (b + 1 < tent.entries.size()) {
            clone = kf.predict(kf.update(clone, e.bbox));
            ++frame;
        }
    }
    return ious;
}

std::vector<std::size_t> candidate_filter(const Track& track, const TentativeTrack& tent, const AdpConfig& cfg,
                                          const KalmanFilter& kf) {
    const auto ious = motion_walk_ious(track, tent, kf);
    std::vector<std::size_t> keep;
    for (std::size_t b = 0; b < tent.entries.size(); ++b) {
        if (ious[b] >= cfg.cand_iou && cosine_sim(track.rep_feature, tent.entries[b].feature) >= cfg.cand_app) {
            keep.push_back(b);
        }
    }
    return keep;
}

namespace {

QualityWindow checked_window(const Track& track, const AdpConfig& cfg) {
    if (track.history.empty()) {
        throw std::invalid_argument("track has no matched detections");
    }
    const QualityWindow win = select_quality_window(track.quality, cfg.beta, static_cast<std::size_t>(cfg.window));
    if (win.last >= track.history.size()) {
        throw std::invalid_argument("quality vector longer than track history");
    }
    return win;
}

}  // namespace

double score_main(const Track& track, const TentativeTrack& tent, const AdpConfig& cfg, const KalmanFilter& kf) {
    const QualityWindow win = checked_window(track, cfg);
    std::vector<std::size_t> cands;
    if (cfg.enable_candidate_filter) {
        cands = candidate_filter(track, tent, cfg, kf);
    } else {
        cands.resize(tent.entries.size());
        for (std::size_t b = 0; b < cands.size(); ++b) {
            cands[b] = b;
        }
    }
    if (cands.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (std::size_t a = win.first; a <= win.last; ++a) {
        for (std::size_t b : cands) {
            sum += cosine_sim(track.history[a].feature, tent.entries[b].feature);
        }
    }
    return sum / static_cast<double>(win.size() * cands.size());
}

double score_f1(const Track& track, const TentativeTrack& tent, const KalmanFilter& kf) {
    const auto ious = motion_walk_ious(track, tent, kf);
    if (ious.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (double x : ious) {
        sum += x;
    }
    return sum / static_cast<double>(ious.size());
}

double score_f2(const Track& track, const Detection& target, const AdpConfig& cfg) {
    const QualityWindow win = checked_window(track, cfg);
    double sum = 0.0;
    for (std::size_t a = win.first; a <= win.last; ++a) {
        sum += cosine_sim(track.history[a].feature, target.feature);
    }
    return sum / static_cast<double>(win.size());
}

double score_f3(const Track& track, const TentativeTrack& tent, const KalmanFilter& kf) {
    const auto ious = motion_walk_ious(track, tent, kf);
    if (ious.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (std::size_t b = 0; b < ious.size(); ++b) {
        sum += std::min(ious[b], std::max(cosine_sim(track.rep_feature, tent.entries[b].feature), 0.0));
    }
    return sum / static_cast<double>(ious.size());
}

bool crowd_check(const Track& track, const AdpConfig& cfg) {
    if (track.age < cfg.crowd_min_age || track.quality.empty()) {
        return false;
    }
    const auto q = track.quality.values();
    const auto low = std::count_if(q.begin(), q.end(), [&](double v) { return v < cfg.beta; });
    return static_cast<double>(low) / static_cast<double>(q.size()) >= cfg.crowd_ratio;
}

WeightMatrix combine_costs(const WeightMatrix& w, const WeightMatrix& z, double alpha,
                           std::span<const char> w_only_rows) {
    if (w.rows() != z.rows() || w.cols() != z.cols()) {
        throw std::invalid_argument("combine_costs: dimension mismatch");
    }
    if (!w_only_rows.empty() && w_only_rows.size() != w.rows()) {
        throw std::invalid_argument("combine_costs: row mask size mismatch");
    }
    WeightMatrix c(w.rows(), w.cols());
    for (std::size_t r = 0; r < w.rows(); ++r) {
        const bool w_only = !w_only_rows.empty() && w_only_rows[r];
        for (std::size_t j = 0; j < w.cols(); ++j) {
            c(r, j) = w_only ? w(r, j) : alpha * z(r, j) + (1.0 - alpha) * w(r, j);
        }
    }
    return c;
}

WeightMatrix similarity_matrix(std::span<const Track> tracks, const FrameData& target,
                               std::span<const std::size_t> candidates, std::span<const TentativeTrack> tentative,
                               const AdpConfig& cfg, const KalmanFilter& kf, Execution exec) {
    if (cfg.variant != ScoreVariant::F2 && tentative.size() != target.detections.size()) {
        throw std::invalid_argument("similarity_matrix: one tentative track per target detection required");
    }
    WeightMatrix z(tracks.size(), candidates.size());
    fill_matrix(z, exec, [&](std::size_t r, std::size_t c) {
        const std::size_t j = candidates[c];
        switch (cfg.variant) {
            case ScoreVariant::Main: return score_main(tracks[r], tentative[j], cfg, kf);
            case ScoreVariant::F1: return score_f1(tracks[r], tentative[j], kf);
            case ScoreVariant::F2: return score_f2(tracks[r], target.detections[j], cfg);
            case ScoreVariant::F3: return score_f3(tracks[r], tentative[j], kf);
        }
        return 0.0;
    });
    return z;
}

StepResult adp_step(TrackerState& state, std::span<const FrameData> window, const AdpConfig& cfg) {
    if (window.empty()) {
        throw std::invalid_argument("adp_step: empty window");
    }
    cfg.validate();
    const FrameData& target = window.front();
    const TrackerParams& params = state.params;
    const KalmanFilter kf(params.noise);

    const auto candidates = begin_frame(state, target);
    const WeightMatrix w = base_weight_matrix(state.tracks, target, candidates, params, params.execution);

    std::vector<TentativeTrack> tentative;
    if (cfg.variant != ScoreVariant::F2 && !w.empty()) {
        tentative = simulate_tentative(window, params);
    }
    const WeightMatrix z = w.empty() ? WeightMatrix(w.rows(), w.cols())
                                     : similarity_matrix(state.tracks, target, candidates, tentative, cfg, kf,
                                                         cfg.execution);

    std::vector<char> w_only(state.tracks.size(), 0);
    if (cfg.enable_crowd_heuristic) {
        for (std::size_t r = 0; r < state.tracks.size(); ++r) {
            w_only[r] = crowd_check(state.tracks[r], cfg) ? 1 : 0;
        }
    }
    const WeightMatrix c = combine_costs(w, z, cfg.alpha, w_only);
    const Matching m = hungarian_max(c, params.match_threshold);
    return finish_frame(state, target, candidates, m);
}

std::vector<TrackedBox> run_adp(std::span<const FrameData> frames, const TrackerParams& params,
                                const AdpConfig& cfg) {
    params.validate();
    cfg.validate();
    TrackerState state(params);
    std::vector<TrackedBox> out;
    const std::size_t horizon = static_cast<std::size_t>(cfg.horizon);
    for (std::size_t t = 0; t < frames.size(); ++t) {
        StepResult r;
        if (t == 0) {
            r = step(state, frames[t]);
        } else {
            const std::size_t len = std::min(horizon + 1, frames.size() - t);
            r = adp_step(state, frames.subspan(t, len), cfg);
        }
        out.insert(out.end(), r.output.begin(), r.output.end());
    }
    return out;
}

}  // namespace adpt
