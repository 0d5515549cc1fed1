#include "adpt/core.hpp"

#include <algorithm>
#include <cmath>

namespace adpt {

BoundingBox::BoundingBox(double left, double top, double width, double height)
    : left_(left), top_(top), width_(width), height_(height) {
    if (!std::isfinite(left) || !std::isfinite(top) || !std::isfinite(width) || !std::isfinite(height)) {
        throw std::invalid_argument("BoundingBox: non-finite coordinate");
    }
    if (width <= 0.0 || height <= 0.0) {
        throw std::invalid_argument("BoundingBox: width and height must be positive");
    }
}

CenterBox to_center(const BoundingBox& b) noexcept {
    return {b.left() + b.width() / 2.0, b.top() + b.height() / 2.0, b.width(), b.height()};
}

BoundingBox from_center(double cx, double cy, double w, double h) {
    if (!(w > 0.0) || !(h > 0.0)) {
        throw std::invalid_argument("from_center: width and height must be positive");
    }
    return BoundingBox(cx - w / 2.0, cy - h / 2.0, w, h);
}

double iou(const BoundingBox& a, const BoundingBox& b) noexcept {
    const double iw = std::min(a.right(), b.right()) - std::max(a.left(), b.left());
    const double ih = std::min(a.bottom(), b.bottom()) - std::max(a.top(), b.top());
    if (iw <= 0.0 || ih <= 0.0) {
        return 0.0;
    }
    const double inter = iw * ih;
    const double uni = a.area() + b.area() - inter;
    return std::clamp(inter / uni, 0.0, 1.0);
}

FeatureVec::FeatureVec(std::vector<double> raw) : values_(std::move(raw)) {
    if (values_.size() < 2) {
        throw std::invalid_argument("FeatureVec: dimension must be at least 2");
    }
    double sq = 0.0;
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("FeatureVec: non-finite component");
        }
        sq += v * v;
    }
    const double norm = std::sqrt(sq);
    if (!(norm > 0.0)) {
        throw std::invalid_argument("FeatureVec: zero vector cannot be normalized");
    }
    for (double& v : values_) {
        v /= norm;
    }
}

Detection::Detection(int frame_, BoundingBox bbox_, FeatureVec feature_, double confidence_)
    : frame(frame_), bbox(bbox_), feature(std::move(feature_)), confidence(confidence_) {
    if (frame < 0) {
        throw std::invalid_argument("Detection: negative frame index");
    }
    if (!(confidence >= 0.0 && confidence <= 1.0)) {
        throw std::invalid_argument("Detection: confidence outside [0,1]");
    }
}

}  // namespace adpt
