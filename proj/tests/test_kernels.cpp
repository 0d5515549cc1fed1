#include <doctest.h>

#include <stdexcept>

#include "adpt/adp.hpp"
#include "adpt/kernels.hpp"
#include "adpt/synthworld.hpp"

using namespace adpt;

namespace {

ScenarioConfig busy_config(std::uint64_t seed) {
    ScenarioConfig c;
    c.seed = seed;
    c.frames = 40;
    c.identities = 16;
    c.crossings = 6;
    c.det_noise_px = 2.0;
    c.feature_noise = 0.15;
    c.appearance_similarity = 0.6;
    c.drop_prob_occluded = 0.3;
    return c;
}

}  // namespace

TEST_CASE("fill_matrix serial and parallel agree bitwise") {
    for (std::size_t r : {0u, 1u, 7u, 40u}) {
        for (std::size_t c : {0u, 3u, 33u}) {
            WeightMatrix a(r, c), b(r, c);
            auto entry = [](std::size_t i, std::size_t j) { return std::sin(0.1 * i) * std::cos(0.37 * j) / (1 + i + j); };
            fill_matrix(a, Execution::Serial, entry);
            fill_matrix(b, Execution::Parallel, entry);
            CHECK(a == b);
        }
    }
}

TEST_CASE("fill_matrix rethrows entry failures") {
    WeightMatrix m(20, 20);
    auto bad = [](std::size_t i, std::size_t j) -> double {
        if (i == 13 && j == 7) throw std::invalid_argument("boom");
        return 0.0;
    };
    CHECK_THROWS_AS(fill_matrix(m, Execution::Parallel, bad), std::invalid_argument);
    CHECK_THROWS_AS(fill_matrix(m, Execution::Serial, bad), std::invalid_argument);
}

TEST_CASE("weight and z matrices agree between serial and parallel execution") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Scenario s = generate(busy_config(seed));
        TrackerParams params;
        params.execution = Execution::Serial;
        TrackerState state(params);
        for (std::size_t t = 0; t < 25; ++t) step(state, s.det_frames[t]);

        const FrameData& target = s.det_frames[25];
        const auto candidates = begin_frame(state, target);
        REQUIRE(state.tracks.size() * candidates.size() >= kParallelMinEntries);

        const WeightMatrix ws = base_weight_matrix(state.tracks, target, candidates, params, Execution::Serial);
        const WeightMatrix wp = base_weight_matrix(state.tracks, target, candidates, params, Execution::Parallel);
        CHECK(ws == wp);

        const std::span<const FrameData> window(s.det_frames.data() + 25, 10);
        const auto tentative = simulate_tentative(window, params);
        const KalmanFilter kf(params.noise);
        for (ScoreVariant v : {ScoreVariant::Main, ScoreVariant::F1, ScoreVariant::F2, ScoreVariant::F3}) {
            AdpConfig cfg;
            cfg.variant = v;
            const WeightMatrix zs = similarity_matrix(state.tracks, target, candidates, tentative, cfg, kf,
                                                      Execution::Serial);
            const WeightMatrix zp = similarity_matrix(state.tracks, target, candidates, tentative, cfg, kf,
                                                      Execution::Parallel);
            CHECK(zs == zp);
        }
    }
}

TEST_CASE("whole runs agree between serial and parallel execution") {
    const Scenario s = generate(busy_config(9));
    TrackerParams ps, pp;
    ps.execution = Execution::Serial;
    pp.execution = Execution::Parallel;
    AdpConfig cs, cp;
    cs.execution = Execution::Serial;
    cp.execution = Execution::Parallel;
    cs.horizon = cp.horizon = 5;
    CHECK(run_base(s.det_frames, ps) == run_base(s.det_frames, pp));
    CHECK(run_adp(s.det_frames, ps, cs) == run_adp(s.det_frames, pp, cp));
}
