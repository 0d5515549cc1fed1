#pragma once

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "adpt/base_tracker.hpp"
#include "adpt/rng.hpp"

namespace testing {

inline adpt::FeatureVec unit(std::size_t i, std::size_t dim = 4) {
    std::vector<double> v(dim, 0.0);
    v[i] = 1.0;
    return adpt::FeatureVec(v);
}

inline adpt::FeatureVec vec(std::vector<double> v) { return adpt::FeatureVec(std::move(v)); }

inline adpt::Detection det(int frame, double l, double t, double w, double h, adpt::FeatureVec f = unit(0),
                           double conf = 0.9) {
    return adpt::Detection(frame, adpt::BoundingBox(l, t, w, h), std::move(f), conf);
}

inline adpt::FrameData frame(int index, std::vector<adpt::Detection> dets) {
    return adpt::FrameData{index, std::move(dets)};
}

/// Track whose filter sits at rest on its last detection.
inline adpt::Track make_track(int id, std::vector<adpt::Detection> history, std::vector<double> quality = {}) {
    adpt::KalmanFilter kf;
    adpt::Track t{.id = id,
                  .history = history,
                  .kalman = kf.init(history.back().bbox),
                  .rep_feature = history.back().feature,
                  .quality = {}};
    if (quality.empty()) quality.assign(history.size(), 1.0);
    for (double q : quality) t.quality.append(q);
    t.age = static_cast<int>(history.size());
    return t;
}

inline adpt::BoundingBox random_box(adpt::CounterRng& rng) {
    return adpt::BoundingBox(rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(0.5, 40), rng.uniform(0.5, 40));
}

/// Fresh directory under the system temp dir, removed on destruction.
struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               ("adpt_" + tag + "_" + std::to_string(adpt::mix64(reinterpret_cast<std::uintptr_t>(this)) % 1000000007));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::filesystem::path operator/(const std::string& name) const { return path / name; }
};

}  // namespace testing
