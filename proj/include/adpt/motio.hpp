#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "adpt/core.hpp"
#include "adpt/metrics.hpp"

namespace adpt {

/// Detection line before its appearance feature is attached.
struct DetRecord {
    BoundingBox bbox;
    double confidence;
};

struct RawFrame {
    int index;
    std::vector<DetRecord> detections;  ///< file line order
};

/// Appearance features keyed by (frame, 0-based position of the detection in its frame).
struct FeatureTable {
    int dim = 0;
    std::map<std::pair<int, int>, FeatureVec> rows;

    const FeatureVec& at(int frame, int det_index) const;
};

/// MOTChallenge detections: "frame,id,left,top,width,height,conf[,x,y,z]".
/// Frames are contiguous from 1 (or 0) to the last frame; missing ones are empty.
std::vector<RawFrame> read_detections(const std::filesystem::path& path);

/// MOTChallenge ground truth / results: id >= 1, extra columns ignored.
std::vector<LabeledBox> read_gt(const std::filesystem::path& path);

/// Sidecar features: header "frame,det,dim=D", rows "frame,det_index,f0,...".
FeatureTable read_features(const std::filesystem::path& path, std::span<const RawFrame> dets);

std::vector<FrameData> attach_features(std::span<const RawFrame> dets, const FeatureTable& features);

/// read_detections + read_features + attach_features.
std::vector<FrameData> load_sequence(const std::filesystem::path& det_path, const std::filesystem::path& feature_path);

/// "frame,track_id,left,top,width,height,conf,-1,-1,-1", sorted by (frame, track_id),
/// reals with 6 significant digits.
void write_results(const std::filesystem::path& path, std::span<const TrackedBox> boxes);

void write_detections(const std::filesystem::path& path, std::span<const FrameData> frames);
void write_features(const std::filesystem::path& path, std::span<const FrameData> frames);
void write_gt(const std::filesystem::path& path, std::span<const LabeledBox> gt);

}  // namespace adpt
