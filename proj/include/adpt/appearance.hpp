#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adpt/core.hpp"

namespace adpt {

/// Dot product of two unit vectors, clamped to [-1, 1].
double cosine_sim(const FeatureVec& u, const FeatureVec& v);

/// normalize(momentum * rep + (1 - momentum) * obs).
FeatureVec ema_update(const FeatureVec& rep, const FeatureVec& obs, double momentum);

/// Append-only record of appearance scores, one per association of a track.
class QualityVector {
public:
    void append(double value);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    bool operator==(const QualityVector&) const = default;

private:
    std::vector<double> values_;
};

/// Inclusive 0-based range [first, last] of positions in a track's history.
struct QualityWindow {
    std::size_t first;
    std::size_t last;

    std::size_t size() const noexcept { return last - first + 1; }
    bool operator==(const QualityWindow&) const = default;
};

/// Window of at most `s` positions ending at the latest entry scoring >= beta,
/// or at the latest entry when none does.
QualityWindow select_quality_window(std::span<const double> quality, double beta, std::size_t s);

inline QualityWindow select_quality_window(const QualityVector& q, double beta, std::size_t s) {
    return select_quality_window(q.values(), beta, s);
}

}  // namespace adpt
