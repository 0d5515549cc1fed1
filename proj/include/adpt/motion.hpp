#pragma once

#include <Eigen/Core>

#include "adpt/core.hpp"

namespace adpt {

using StateVector = Eigen::Matrix<double, 8, 1>;
using StateCovariance = Eigen::Matrix<double, 8, 8>;

/// Constant-velocity filter state over (cx, cy, w, h, vcx, vcy, vw, vh).
struct KalmanState {
    StateVector mean = StateVector::Zero();
    StateCovariance covariance = StateCovariance::Identity();

    bool operator==(const KalmanState& o) const { return mean == o.mean && covariance == o.covariance; }
};

/// Noise profile. Every standard deviation is a multiple of the current box height.
struct KalmanNoise {
    double std_weight_position = 1.0 / 20.0;
    double std_weight_velocity = 1.0 / 160.0;
    double init_position_factor = 2.0;
    double init_velocity_factor = 10.0;
};

class KalmanFilter {
public:
    KalmanFilter() = default;
    explicit KalmanFilter(const KalmanNoise& noise) : noise_(noise) {}

    KalmanState init(const BoundingBox& b) const;
    KalmanState predict(const KalmanState& s) const;
    KalmanState update(const KalmanState& s, const BoundingBox& measurement) const;

    const KalmanNoise& noise() const noexcept { return noise_; }

private:
    KalmanNoise noise_;
};

/// Box at the state mean; width and height are clamped to at least 1e-3.
BoundingBox state_to_bbox(const KalmanState& s);

}  // namespace adpt
