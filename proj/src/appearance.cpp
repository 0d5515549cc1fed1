#include "adpt/appearance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adpt {

double cosine_sim(const FeatureVec& u, const FeatureVec& v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("cosine_sim: dimension mismatch");
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        dot += u[i] * v[i];
    }
    return std::clamp(dot, -1.0, 1.0);
}

FeatureVec ema_update(const FeatureVec& rep, const FeatureVec& obs, double momentum) {
    if (rep.dim() != obs.dim()) {
        throw std::invalid_argument("ema_update: dimension mismatch");
    }
    if (!(momentum >= 0.0 && momentum <= 1.0)) {
        throw std::invalid_argument("ema_update: momentum outside [0,1]");
    }
    std::vector<double> mixed(rep.dim());
    double sq = 0.0;
    for (std::size_t i = 0; i < rep.dim(); ++i) {
        mixed[i] = momentum * rep[i] + (1.0 - momentum) * obs[i];
        sq += mixed[i] * mixed[i];
    }
    if (sq < 1e-24) {
        throw std::invalid_argument("ema_update: degenerate (near-zero) average");
    }
    return FeatureVec(std::move(mixed));
}

void QualityVector::append(double value) {
    if (!(value >= -1.0 && value <= 1.0)) {
        throw std::invalid_argument("QualityVector: value outside [-1,1]");
    }
    values_.push_back(value);
}

QualityWindow select_quality_window(std::span<const double> quality, double beta, std::size_t s) {
    if (quality.empty()) {
        throw std::invalid_argument("select_quality_window: empty quality vector");
    }
    if (s == 0) {
        throw std::invalid_argument("select_quality_window: window size must be positive");
    }
    std::size_t q = quality.size() - 1;
    for (std::size_t i = quality.size(); i-- > 0;) {
        if (quality[i] >= beta) {
            q = i;
            break;
        }
    }
    const std::size_t first = q + 1 >= s ? q + 1 - s : 0;
    return {first, q};
}

}  // namespace adpt
