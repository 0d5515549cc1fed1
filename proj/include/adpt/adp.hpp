#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "adpt/base_tracker.hpp"

namespace adpt {

/// Which track-to-tentative-track similarity feeds the z matrix.
///   Main: pairwise cosine between the track's quality window and the tentative track.
///   F1:   mean IOU along a cloned-filter walk over the tentative track.
///   F2:   quality window against the target detection only (no simulation).
///   F3:   per-entry min(walk IOU, cosine with the representative feature).
enum class ScoreVariant { Main, F1, F2, F3 };

ScoreVariant parse_variant(std::string_view name);
std::string_view variant_name(ScoreVariant v);

struct AdpConfig {
    double alpha = 0.25;    ///< weight of z in the combined cost
    int horizon = 15;       ///< future frames simulated after the target frame
    int window = 5;         ///< quality-window length s
    double beta = 0.15;     ///< quality threshold
    ScoreVariant variant = ScoreVariant::Main;
    double cand_iou = 0.3;
    double cand_app = 0.25;
    double crowd_ratio = 0.5;
    int crowd_min_age = 10;
    bool enable_candidate_filter = true;
    bool enable_crowd_heuristic = true;
    Execution execution = Execution::Parallel;

    void validate() const;
};

/// Tracklet grown from detection `origin_det` of the target frame by re-running
/// the base tracker from scratch over the look-ahead window.
struct TentativeTrack {
    std::size_t origin_det;
    std::vector<Detection> entries;
};

/// Forks a fresh base tracker at frames[0] and steps it through the rest.
/// Returns one tentative track per detection of frames[0], in detection order.
std::vector<TentativeTrack> simulate_tentative(std::span<const FrameData> frames, const TrackerParams& params);

/// IOU between each tentative entry and a clone of the track's filter that is
/// predicted forward and corrected with the entry boxes along the way. The
/// track's filter must already be predicted to the first entry's frame.
std::vector<double> motion_walk_ious(const Track& track, const TentativeTrack& tent, const KalmanFilter& kf);

/// Indices of tentative entries passing both candidate gates.
std::vector<std::size_t> candidate_filter(const Track& track, const TentativeTrack& tent, const AdpConfig& cfg,
                                          const KalmanFilter& kf);

double score_main(const Track& track, const TentativeTrack& tent, const AdpConfig& cfg, const KalmanFilter& kf);
double score_f1(const Track& track, const TentativeTrack& tent, const KalmanFilter& kf);
double score_f2(const Track& track, const Detection& target, const AdpConfig& cfg);
double score_f3(const Track& track, const TentativeTrack& tent, const KalmanFilter& kf);

/// True when the track has been poorly visible for a large share of its life.
bool crowd_check(const Track& track, const AdpConfig& cfg);

/// alpha * z + (1 - alpha) * w; rows flagged in `w_only_rows` copy w verbatim.
WeightMatrix combine_costs(const WeightMatrix& w, const WeightMatrix& z, double alpha,
                           std::span<const char> w_only_rows = {});

/// z matrix over (tracks x candidate detections of the target frame).
/// `tentative` is indexed by detection index and may be empty for F2.
WeightMatrix similarity_matrix(std::span<const Track> tracks, const FrameData& target,
                               std::span<const std::size_t> candidates, std::span<const TentativeTrack> tentative,
                               const AdpConfig& cfg, const KalmanFilter& kf, Execution exec);

/// One frame of look-ahead association. window[0] is the target frame, the
/// rest are the (possibly truncated) future frames.
StepResult adp_step(TrackerState& state, std::span<const FrameData> window, const AdpConfig& cfg);

/// Whole-sequence driver: base step on the first frame, then adp_step with a
/// window sliding one frame at a time.
std::vector<TrackedBox> run_adp(std::span<const FrameData> frames, const TrackerParams& params,
                                const AdpConfig& cfg);

}  // namespace adpt
