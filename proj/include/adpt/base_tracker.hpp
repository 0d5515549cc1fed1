#pragma once

#include <optional>
#include <span>
#include <vector>

#include "adpt/appearance.hpp"
#include "adpt/assignment.hpp"
#include "adpt/core.hpp"
#include "adpt/kernels.hpp"
#include "adpt/motion.hpp"

namespace adpt {

enum class TrackStatus { Active, Lost, Removed };

struct TrackerParams {
    double match_threshold = 0.2;  ///< minimum fused similarity for a pair
    double appearance_gate = 0.25;
    double iou_gate = 0.1;
    int max_age = 30;              ///< frames a track may stay lost
    double ema_momentum = 0.9;
    double min_confidence = 0.1;
    KalmanNoise noise;
    Execution execution = Execution::Parallel;

    void validate() const;
};

/// A partial grouping: the detections matched so far plus motion and appearance state.
struct Track {
    int id;
    std::vector<Detection> history;  ///< matched detections, frames strictly increasing
    KalmanState kalman;
    FeatureVec rep_feature;          ///< EMA of matched features
    QualityVector quality;           ///< one entry per history entry
    TrackStatus status = TrackStatus::Active;
    int frames_lost = 0;
    int age = 1;                     ///< frames since birth, birth frame included
};

struct TrackerState {
    explicit TrackerState(TrackerParams p = {}) : params(p) {}

    std::vector<Track> tracks;  ///< live tracks (Active or Lost) in id order
    int next_id = 1;
    TrackerParams params;
    std::optional<int> frame_cursor;  ///< last processed frame
};

struct StepResult {
    Matching matching;               ///< rows: track positions before the step, cols: detection indices
    std::vector<TrackedBox> output;  ///< boxes emitted this frame (matched and newborn tracks)
    std::vector<Track> removed;      ///< tracks retired by this step
};

/// min(IOU(predicted box, det), gated cosine). The track's filter state must
/// already be predicted to the detection's frame.
double fused_similarity(const Track& track, const Detection& det, const TrackerParams& params);

/// Kernel behind the weight matrix: rows are `tracks` (already predicted),
/// columns are `frame.detections[candidates[c]]`.
WeightMatrix base_weight_matrix(std::span<const Track> tracks, const FrameData& frame,
                                std::span<const std::size_t> candidates, const TrackerParams& params,
                                Execution exec);

/// Weights between every live track (predicted one frame ahead) and every
/// detection of `frame` above min_confidence. Does not modify `state`.
WeightMatrix compute_base_weights(const TrackerState& state, const FrameData& frame);

/// First half of a frame update: checks ordering, advances every live track's
/// filter one frame, and returns the indices of detections eligible for matching.
std::vector<std::size_t> begin_frame(TrackerState& state, const FrameData& frame);

/// Second half: applies a matching over (tracks x candidates) and runs the
/// track lifecycle (updates, loss, removal, births).
StepResult finish_frame(TrackerState& state, const FrameData& frame, std::span<const std::size_t> candidates,
                        const Matching& matching);

/// One frame of the online base tracker.
StepResult step(TrackerState& state, const FrameData& frame);

/// Fresh tracker seeded with one track per detection of `frame`, in detection order.
TrackerState fork_at(const FrameData& frame, const TrackerParams& params);

/// Runs the base tracker over a whole sequence.
std::vector<TrackedBox> run_base(std::span<const FrameData> frames, const TrackerParams& params);

}  // namespace adpt
