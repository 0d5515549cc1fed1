#include "adpt/synthworld.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adpt/rng.hpp"

namespace adpt {

namespace {

// Stream tags keep independent draws for the same (seed, frame, identity) apart.
enum Stream : std::uint64_t { kSetup = 1, kDetection = 2, kShuffle = 3, kPair = 4, kScene = 5 };

double quantize(double x) { return std::round(x * 100.0) / 100.0; }

struct Motion {
    double x, y;     // top-left
    double vx, vy;
    double w, h;
    double lane_top, lane_bottom;
    int turn_frame = -1;  // frame at which a new velocity is drawn
};

std::vector<double> gaussian_vector(CounterRng& rng, int dim) {
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (double& x : v) {
        x = rng.normal();
    }
    return v;
}

std::vector<double> normalized(std::vector<double> v) {
    double sq = 0.0;
    for (double x : v) sq += x * x;
    const double n = std::sqrt(sq);
    for (double& x : v) x /= n;
    return v;
}

void advance(Motion& m, double world_width) {
    m.x += m.vx;
    m.y += m.vy;
    if (m.x < 0.0) {
        m.x = -m.x;
        m.vx = -m.vx;
    } else if (m.x + m.w > world_width) {
        m.x = 2.0 * (world_width - m.w) - m.x;
        m.vx = -m.vx;
    }
    if (m.y < m.lane_top) {
        m.y = 2.0 * m.lane_top - m.y;
        m.vy = -m.vy;
    } else if (m.y + m.h > m.lane_bottom) {
        m.y = 2.0 * (m.lane_bottom - m.h) - m.y;
        m.vy = -m.vy;
    }
}

double intersection_area(const BoundingBox& a, const BoundingBox& b) {
    const double iw = std::min(a.right(), b.right()) - std::max(a.left(), b.left());
    const double ih = std::min(a.bottom(), b.bottom()) - std::max(a.top(), b.top());
    return (iw > 0.0 && ih > 0.0) ? iw * ih : 0.0;
}

}  // namespace

void ScenarioConfig::validate() const {
    if (frames < 1 || identities < 1 || feature_dim < 2) {
        throw std::invalid_argument("ScenarioConfig: frames, identities >= 1 and feature_dim >= 2 required");
    }
    if (crossings < 0 || 2 * crossings > identities) {
        throw std::invalid_argument("ScenarioConfig: crossings must be between 0 and identities / 2");
    }
    if (!(world_width > 0.0 && world_height > 0.0)) {
        throw std::invalid_argument("ScenarioConfig: world size must be positive");
    }
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!prob(drop_prob_occluded) || !prob(turn_prob) || !prob(occlusion_iou) || !prob(lane_offset) ||
        !(appearance_similarity >= 0.0 && appearance_similarity < 1.0)) {
        throw std::invalid_argument("ScenarioConfig: probabilities and fractions must lie in [0,1]");
    }
    if (det_noise_px < 0.0 || feature_noise < 0.0) {
        throw std::invalid_argument("ScenarioConfig: noise levels must be non-negative");
    }
}

Scenario generate(const ScenarioConfig& cfg) {
    cfg.validate();
    const int n = cfg.identities;
    const int lanes = n - cfg.crossings;
    const double lane_h = cfg.world_height / lanes;

    // Lane order is shuffled so crossing lanes are not always at the top.
    std::vector<int> lane_of_slot(static_cast<std::size_t>(lanes));
    for (int i = 0; i < lanes; ++i) lane_of_slot[static_cast<std::size_t>(i)] = i;
    {
        CounterRng rng(cfg.seed, 0, 0, kScene);
        for (int i = lanes - 1; i > 0; --i) {
            const int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
            std::swap(lane_of_slot[static_cast<std::size_t>(i)], lane_of_slot[static_cast<std::size_t>(j)]);
        }
    }

    CounterRng scene(cfg.seed, 0, 1, kScene);
    const std::vector<double> shared = normalized(gaussian_vector(scene, cfg.feature_dim));

    Scenario out;
    std::vector<Motion> motion(static_cast<std::size_t>(n));
    std::vector<std::vector<double>> means(static_cast<std::size_t>(n));
    for (int id = 1; id <= n; ++id) {
        CounterRng rng(cfg.seed, 0, static_cast<std::uint64_t>(id), kSetup);
        const int slot = id <= 2 * cfg.crossings ? (id - 1) / 2 : id - cfg.crossings - 1;
        const double lane_top = lane_of_slot[static_cast<std::size_t>(slot)] * lane_h;
        Motion& m = motion[static_cast<std::size_t>(id - 1)];
        m.h = std::min(rng.uniform(0.55, 0.8) * lane_h, 200.0);
        m.w = m.h * rng.uniform(0.35, 0.45);
        m.lane_top = lane_top;
        m.lane_bottom = lane_top + lane_h;
        m.y = lane_top + (lane_h - m.h) / 2.0;
        m.vy = 0.0;
        m.x = rng.uniform(0.0, cfg.world_width - m.w);
        m.vx = rng.uniform(1.0, 4.0) * (rng.bernoulli(0.5) ? 1.0 : -1.0);

        const auto own = normalized(gaussian_vector(rng, cfg.feature_dim));
        std::vector<double> mu(own.size());
        const double a = std::sqrt(cfg.appearance_similarity);
        const double b = std::sqrt(1.0 - cfg.appearance_similarity);
        for (std::size_t k = 0; k < mu.size(); ++k) {
            mu[k] = a * shared[k] + b * own[k];
        }
        means[static_cast<std::size_t>(id - 1)] = normalized(std::move(mu));
        out.identity_features.emplace(id, FeatureVec(means[static_cast<std::size_t>(id - 1)]));
    }

    // Crossing pairs (2p+1 in front, 2p+2 behind) meet head-on at (t_c, x_c).
    for (int p = 0; p < cfg.crossings; ++p) {
        CounterRng rng(cfg.seed, 0, static_cast<std::uint64_t>(p), kPair);
        Motion& front = motion[static_cast<std::size_t>(2 * p)];
        Motion& back = motion[static_cast<std::size_t>(2 * p + 1)];
        const double t_c = std::round(rng.uniform(0.35, 0.65) * cfg.frames);
        const double x_c = rng.uniform(0.4, 0.6) * cfg.world_width;
        const double lead = std::max(t_c - 1.0, cfg.frames - t_c);
        const double cap = std::max(0.5, (0.4 * cfg.world_width - std::max(front.w, back.w)) / std::max(lead, 1.0));
        const double s_front = std::min(rng.uniform(1.5, 3.5), cap);
        const double s_back = std::min(rng.uniform(1.5, 3.5), cap);
        const double dir = rng.bernoulli(0.5) ? 1.0 : -1.0;
        const double lane_c = (front.lane_top + front.lane_bottom) / 2.0;
        const double off = cfg.lane_offset * std::min(front.h, back.h);

        front.vx = dir * s_front;
        back.vx = -dir * s_back;
        front.x = x_c - front.w / 2.0 - front.vx * (t_c - 1.0);
        back.x = x_c - back.w / 2.0 - back.vx * (t_c - 1.0);
        front.y = std::clamp(lane_c - front.h / 2.0 - rng.uniform(0.0, off), front.lane_top, front.lane_bottom - front.h);
        back.y = std::clamp(lane_c - back.h / 2.0 + rng.uniform(0.0, off), back.lane_top, back.lane_bottom - back.h);
        for (Motion* m : {&front, &back}) {
            if (rng.bernoulli(cfg.turn_prob)) {
                m->turn_frame = static_cast<int>(t_c) + static_cast<int>(rng.uniform(0.0, 6.0));
            }
        }
    }

    out.det_frames.reserve(static_cast<std::size_t>(cfg.frames));
    std::vector<BoundingBox> boxes;
    for (int t = 1; t <= cfg.frames; ++t) {
        boxes.clear();
        for (int id = 1; id <= n; ++id) {
            Motion& m = motion[static_cast<std::size_t>(id - 1)];
            if (t > 1) {
                if (t == m.turn_frame) {
                    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(id), kSetup);
                    m.vx = rng.uniform(1.0, 3.5) * (rng.bernoulli(0.5) ? 1.0 : -1.0);
                    m.vy = rng.uniform(-0.5, 0.5);
                }
                advance(m, cfg.world_width);
            }
            boxes.emplace_back(quantize(m.x), quantize(m.y), quantize(m.w), quantize(m.h));
            out.gt.push_back({t, id, boxes.back()});
        }

        FrameData frame;
        frame.index = t;
        for (int id = 1; id <= n; ++id) {
            const BoundingBox& box = boxes[static_cast<std::size_t>(id - 1)];
            CounterRng rng(cfg.seed, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(id), kDetection);

            int occluder = 0;
            double worst = cfg.occlusion_iou;
            for (int other = 1; other < id; ++other) {
                const double o = iou(box, boxes[static_cast<std::size_t>(other - 1)]);
                if (o > worst) {
                    worst = o;
                    occluder = other;
                }
            }
            const double lambda =
                occluder ? intersection_area(box, boxes[static_cast<std::size_t>(occluder - 1)]) / box.area() : 0.0;
            if (occluder && rng.bernoulli(cfg.drop_prob_occluded)) {
                ++out.dropped_detections;
                continue;
            }

            const double jl = cfg.det_noise_px * rng.normal();
            const double jt = cfg.det_noise_px * rng.normal();
            const double jw = cfg.det_noise_px * rng.normal();
            const double jh = cfg.det_noise_px * rng.normal();
            const BoundingBox det_box(quantize(box.left() + jl), quantize(box.top() + jt),
                                      quantize(std::max(1.0, box.width() + jw)),
                                      quantize(std::max(1.0, box.height() + jh)));

            const auto& self = means[static_cast<std::size_t>(id - 1)];
            std::vector<double> f(self.size());
            const bool mixed = occluder && cfg.mix_features;
            for (std::size_t k = 0; k < f.size(); ++k) {
                const double base = mixed ? (1.0 - lambda) * self[k] +
                                                lambda * means[static_cast<std::size_t>(occluder - 1)][k]
                                          : self[k];
                f[k] = base + cfg.feature_noise * rng.normal();
            }
            const double conf = quantize(occluder ? std::max(0.15, (1.0 - lambda) * rng.uniform(0.8, 1.0))
                                                  : rng.uniform(0.8, 1.0));
            frame.detections.emplace_back(t, det_box, FeatureVec(std::move(f)), conf);
        }

        CounterRng shuffle(cfg.seed, static_cast<std::uint64_t>(t), 0, kShuffle);
        for (std::size_t i = frame.detections.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(shuffle.next_u64() % i);
            std::swap(frame.detections[i - 1], frame.detections[j]);
        }
        out.det_frames.push_back(std::move(frame));
    }
    return out;
}

std::vector<ScenarioConfig> preset_configs(const std::string& name) {
    if (name != "occlusion-20") {
        throw std::invalid_argument("unknown preset: " + name);
    }
    std::vector<ScenarioConfig> out;
    for (int i = 0; i < 20; ++i) {
        ScenarioConfig c;
        c.seed = 1000 + static_cast<std::uint64_t>(i);
        c.frames = 150;
        c.identities = 6;
        c.crossings = 3;
        c.det_noise_px = 1.5;
        c.feature_noise = 0.18;
        c.appearance_similarity = 0.7;
        c.occlusion_iou = 0.1;
        c.drop_prob_occluded = 1.0;
        c.mix_features = true;
        c.turn_prob = 1.0;
        out.push_back(c);
    }
    return out;
}

}  // namespace adpt
