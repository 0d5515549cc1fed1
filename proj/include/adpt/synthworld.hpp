#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adpt/core.hpp"
#include "adpt/metrics.hpp"

namespace adpt {

/// Parameters of a synthetic scenario. Identities live in horizontal lanes;
/// each crossing pair shares a lane and walks head-on through the other.
struct ScenarioConfig {
    std::uint64_t seed = 42;
    int frames = 120;
    double world_width = 1280.0;
    double world_height = 720.0;
    int identities = 6;
    int crossings = 0;                 ///< identity pairs sharing a lane
    int feature_dim = 32;
    double det_noise_px = 0.0;         ///< std of per-coordinate box jitter
    double feature_noise = 0.0;        ///< std of per-component feature noise
    double appearance_similarity = 0.0;  ///< expected cosine between identity means, in [0,1)
    double occlusion_iou = 0.1;        ///< IOU with a nearer identity above which a box is occluded
    double drop_prob_occluded = 0.0;
    bool mix_features = true;
    double turn_prob = 0.0;            ///< chance a crossing identity picks a new velocity after the crossing
    double lane_offset = 0.15;         ///< max vertical offset inside a shared lane, as a fraction of height

    void validate() const;
};

struct Scenario {
    std::vector<LabeledBox> gt;
    std::vector<FrameData> det_frames;  ///< frames 1..frames, contiguous
    std::map<int, FeatureVec> identity_features;
    int dropped_detections = 0;
};

/// Pure function of the config: all randomness is keyed by (seed, frame, identity).
Scenario generate(const ScenarioConfig& cfg);

/// Named scenario suite. Currently "occlusion-20": twenty fixed-seed crossing scenarios.
std::vector<ScenarioConfig> preset_configs(const std::string& name);

}  // namespace adpt
