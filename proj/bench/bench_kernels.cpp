// Serial vs OpenMP for the two per-frame matrix kernels.
#include <benchmark/benchmark.h>

#include <map>

#include "adpt/adp.hpp"
#include "adpt/base_tracker.hpp"
#include "adpt/synthworld.hpp"

using namespace adpt;

namespace {

// Tracker frozen just before a busy frame; shared by all benchmarks.
struct Fixture {
    Scenario scenario;
    TrackerParams params;
    TrackerState state;
    std::vector<std::size_t> candidates;
    std::vector<TentativeTrack> tentative;
    int target = 0;

    explicit Fixture(int identities) {
        ScenarioConfig c;
        c.seed = 11;
        c.frames = 60;
        c.identities = identities;
        c.crossings = identities / 3;
        c.det_noise_px = 1.5;
        c.feature_noise = 0.15;
        c.feature_dim = 128;
        scenario = generate(c);
        state = TrackerState(params);
        target = 40;
        for (int t = 0; t < target; ++t) step(state, scenario.det_frames[t]);
        candidates = begin_frame(state, scenario.det_frames[target]);
        tentative = simulate_tentative(std::span(scenario.det_frames).subspan(target, 11), params);
    }
};

const Fixture& fixture(int identities) {
    static std::map<int, Fixture> cache;
    auto it = cache.find(identities);
    if (it == cache.end()) it = cache.emplace(identities, Fixture(identities)).first;
    return it->second;
}

void BM_BaseWeights(benchmark::State& st) {
    const Fixture& f = fixture(static_cast<int>(st.range(0)));
    const auto exec = st.range(1) ? Execution::Parallel : Execution::Serial;
    for (auto _ : st) {
        benchmark::DoNotOptimize(
            base_weight_matrix(f.state.tracks, f.scenario.det_frames[f.target], f.candidates, f.params, exec));
    }
    st.SetLabel(st.range(1) ? "parallel" : "serial");
}

void BM_Similarity(benchmark::State& st) {
    const Fixture& f = fixture(static_cast<int>(st.range(0)));
    const auto exec = st.range(1) ? Execution::Parallel : Execution::Serial;
    const KalmanFilter kf(f.params.noise);
    AdpConfig cfg;
    cfg.horizon = 10;
    for (auto _ : st) {
        benchmark::DoNotOptimize(similarity_matrix(f.state.tracks, f.scenario.det_frames[f.target], f.candidates,
                                                   f.tentative, cfg, kf, exec));
    }
    st.SetLabel(st.range(1) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_BaseWeights)->ArgsProduct({{8, 32, 64}, {0, 1}});
BENCHMARK(BM_Similarity)->ArgsProduct({{8, 32, 64}, {0, 1}});

BENCHMARK_MAIN();
