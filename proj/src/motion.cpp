#include "adpt/motion.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>

namespace adpt {

namespace {

constexpr double kMinSize = 1e-3;

using Measurement = Eigen::Matrix<double, 4, 1>;

StateCovariance motion_matrix() {
    StateCovariance f = StateCovariance::Identity();
    for (int i = 0; i < 4; ++i) {
        f(i, i + 4) = 1.0;
    }
    return f;
}

StateCovariance symmetrized(const StateCovariance& p) { return 0.5 * (p + p.transpose()); }

}  // namespace

KalmanState KalmanFilter::init(const BoundingBox& b) const {
    const CenterBox c = to_center(b);
    KalmanState s;
    s.mean << c.cx, c.cy, c.w, c.h, 0.0, 0.0, 0.0, 0.0;

    const double pos = noise_.init_position_factor * noise_.std_weight_position * c.h;
    const double vel = noise_.init_velocity_factor * noise_.std_weight_velocity * c.h;
    StateVector std_dev;
    std_dev << pos, pos, pos, pos, vel, vel, vel, vel;
    s.covariance = std_dev.array().square().matrix().asDiagonal();
    return s;
}

KalmanState KalmanFilter::predict(const KalmanState& s) const {
    static const StateCovariance f = motion_matrix();
    const double h = s.mean(3);
    const double pos = noise_.std_weight_position * h;
    const double vel = noise_.std_weight_velocity * h;
    StateVector std_dev;
    std_dev << pos, pos, pos, pos, vel, vel, vel, vel;
    const StateCovariance q = std_dev.array().square().matrix().asDiagonal();

    KalmanState out;
    out.mean = f * s.mean;
    out.covariance = symmetrized(f * s.covariance * f.transpose() + q);
    return out;
}

KalmanState KalmanFilter::update(const KalmanState& s, const BoundingBox& measurement) const {
    const CenterBox c = to_center(measurement);
    Measurement z;
    z << c.cx, c.cy, c.w, c.h;

    const double r_std = noise_.std_weight_position * s.mean(3);
    const Eigen::Matrix4d r = Eigen::Vector4d::Constant(r_std * r_std).asDiagonal();

    // H selects the first four components, so H P H^T and P H^T are blocks of P.
    const Eigen::Matrix4d innovation_cov = s.covariance.topLeftCorner<4, 4>() + r;
    const Eigen::Matrix<double, 8, 4> cross = s.covariance.leftCols<4>();
    const Eigen::LLT<Eigen::Matrix4d> chol(innovation_cov);
    const Eigen::Matrix<double, 8, 4> gain = chol.solve(cross.transpose()).transpose();

    KalmanState out;
    out.mean = s.mean + gain * (z - s.mean.head<4>());
    out.covariance = symmetrized(s.covariance - gain * innovation_cov * gain.transpose());
    return out;
}

BoundingBox state_to_bbox(const KalmanState& s) {
    const double w = std::max(s.mean(2), kMinSize);
    const double h = std::max(s.mean(3), kMinSize);
    return from_center(s.mean(0), s.mean(1), w, h);
}

}  // namespace adpt
