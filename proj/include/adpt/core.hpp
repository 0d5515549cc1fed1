#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace adpt {

/// Thrown for malformed input data (files, feature tables). The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Axis-aligned box in MOTChallenge convention: top-left corner plus size.
class BoundingBox {
public:
    BoundingBox(double left, double top, double width, double height);

    double left() const noexcept { return left_; }
    double top() const noexcept { return top_; }
    double width() const noexcept { return width_; }
    double height() const noexcept { return height_; }
    double right() const noexcept { return left_ + width_; }
    double bottom() const noexcept { return top_ + height_; }
    double area() const noexcept { return width_ * height_; }

    bool operator==(const BoundingBox&) const = default;

private:
    double left_;
    double top_;
    double width_;
    double height_;
};

struct CenterBox {
    double cx;
    double cy;
    double w;
    double h;

    bool operator==(const CenterBox&) const = default;
};

CenterBox to_center(const BoundingBox& b) noexcept;
BoundingBox from_center(double cx, double cy, double w, double h);
inline BoundingBox from_center(const CenterBox& c) { return from_center(c.cx, c.cy, c.w, c.h); }

/// Intersection over union; 0 for disjoint boxes.
double iou(const BoundingBox& a, const BoundingBox& b) noexcept;

/// Unit-norm appearance embedding. Raw input is normalized on construction;
/// zero, non-finite or one-dimensional input is rejected.
class FeatureVec {
public:
    explicit FeatureVec(std::vector<double> raw);

    std::size_t dim() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    bool operator==(const FeatureVec&) const = default;

private:
    std::vector<double> values_;
};

struct Detection {
    Detection(int frame, BoundingBox bbox, FeatureVec feature, double confidence);

    int frame;
    BoundingBox bbox;
    FeatureVec feature;
    double confidence;
};

/// All detections of one frame, in file/generation order.
struct FrameData {
    int index = 0;
    std::vector<Detection> detections;
};

/// One output row: a track's box in a frame.
struct TrackedBox {
    int frame;
    int track_id;
    BoundingBox bbox;
    double confidence;

    bool operator==(const TrackedBox&) const = default;
};

}  // namespace adpt
