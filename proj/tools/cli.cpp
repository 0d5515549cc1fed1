#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "adpt/adp.hpp"
#include "adpt/mda_dp.hpp"
#include "adpt/metrics.hpp"
#include "adpt/motio.hpp"
#include "adpt/synthworld.hpp"

namespace adpt::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string json_scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.starts_with(flag + "="); });
}

/// Replaces "--config FILE" with the flags stored in FILE (the "params" object of a
/// run manifest, or a flat object). Flags already on the command line win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
        if (args[i].starts_with("--config=")) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw DataError("cannot open config " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw DataError(path + ": not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw DataError(path + ": expected a JSON object");
    const json& params = doc.contains("params") ? doc.at("params") : doc;
    if (!params.is_object()) throw DataError(path + ": \"params\" must be an object");
    std::vector<std::string> extra;
    for (const auto& [key, value] : params.items()) {
        const std::string flag = "--" + key;
        if (value.is_null() || value.is_array() || value.is_object() || has_flag(args, flag)) continue;
        extra.push_back(flag + "=" + json_scalar(value));
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

std::string abs_path(const fs::path& p) { return fs::absolute(p).lexically_normal().string(); }

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) throw DataError("cannot write " + path.string());
}

void write_manifest(const fs::path& path, const std::string& command, json params, json seeds, json inputs,
                    json outputs) {
    json m;
    m["command"] = command;
    m["tool_version"] = kToolVersion;
    m["params"] = std::move(params);
    m["seeds"] = std::move(seeds);
    m["inputs"] = std::move(inputs);
    m["outputs"] = std::move(outputs);
    write_text(path, m.dump(2) + "\n");
}

fs::path manifest_for(const fs::path& output) { return fs::path(output.string() + ".manifest.json"); }

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string metric_cells(const MetricsReport& r) {
    return fixed6(r.idf1) + "," + fixed6(r.mota) + "," + std::to_string(r.fp) + "," + std::to_string(r.fn) + "," +
           std::to_string(r.idsw) + "," + std::to_string(r.frag);
}

json metric_json(const MetricsReport& r) {
    return {{"IDF1", r.idf1}, {"MOTA", r.mota},         {"FP", r.fp},
            {"FN", r.fn},     {"IDSW", r.idsw},         {"Frag", r.frag},
            {"gt_total", r.gt_total}, {"pred_total", r.pred_total}, {"IDTP", r.idtp}};
}

// --- tracker flags shared by track and sweep -------------------------------

struct TrackerFlags {
    TrackerParams params;
    AdpConfig adp;
    std::string variant = "main";
    bool no_candidate_filter = false;
    bool no_crowd = false;
    bool serial = false;

    void add_to(CLI::App* app) {
        app->add_option("--variant", variant, "z-score variant")->check(CLI::IsMember({"main", "f1", "f2", "f3"}));
        app->add_option("--alpha", adp.alpha, "weight of the rollout score");
        app->add_option("--horizon", adp.horizon, "future frames simulated");
        app->add_option("--window", adp.window, "quality window length");
        app->add_option("--beta", adp.beta, "appearance quality threshold");
        app->add_option("--cand-iou", adp.cand_iou, "candidate gate on walk IOU");
        app->add_option("--cand-app", adp.cand_app, "candidate gate on appearance");
        app->add_option("--crowd-ratio", adp.crowd_ratio, "share of low-quality entries marking a crowded track");
        app->add_option("--crowd-min-age", adp.crowd_min_age, "minimum age for the crowd heuristic");
        app->add_flag("--no-candidate-filter", no_candidate_filter, "disable candidate gating");
        app->add_flag("--no-crowd", no_crowd, "disable the crowd heuristic");
        app->add_option("--match-threshold", params.match_threshold, "minimum similarity for a match");
        app->add_option("--max-age", params.max_age, "frames a lost track is kept");
        app->add_option("--appearance-gate", params.appearance_gate);
        app->add_option("--iou-gate", params.iou_gate);
        app->add_option("--min-confidence", params.min_confidence);
        app->add_option("--ema-momentum", params.ema_momentum);
        app->add_flag("--serial", serial, "compute matrices on one thread");
    }

    void resolve() {
        adp.variant = parse_variant(variant);
        adp.enable_candidate_filter = !no_candidate_filter;
        adp.enable_crowd_heuristic = !no_crowd;
        const Execution e = serial ? Execution::Serial : Execution::Parallel;
        params.execution = e;
        adp.execution = e;
        params.validate();
        adp.validate();
    }

    json to_json() const {
        return {{"variant", variant},
                {"alpha", adp.alpha},
                {"horizon", adp.horizon},
                {"window", adp.window},
                {"beta", adp.beta},
                {"cand-iou", adp.cand_iou},
                {"cand-app", adp.cand_app},
                {"crowd-ratio", adp.crowd_ratio},
                {"crowd-min-age", adp.crowd_min_age},
                {"no-candidate-filter", no_candidate_filter},
                {"no-crowd", no_crowd},
                {"match-threshold", params.match_threshold},
                {"max-age", params.max_age},
                {"appearance-gate", params.appearance_gate},
                {"iou-gate", params.iou_gate},
                {"min-confidence", params.min_confidence},
                {"ema-momentum", params.ema_momentum},
                {"serial", serial}};
    }
};

std::vector<TrackedBox> run_tracker(std::span<const FrameData> frames, const std::string& mode,
                                    const TrackerFlags& f) {
    return mode == "base" ? run_base(frames, f.params) : run_adp(frames, f.params, f.adp);
}

// --- track ----------------------------------------------------------------

struct TrackCmd {
    std::string dets, features, out, mode = "adp";
    TrackerFlags flags;

    void add_to(CLI::App* app) {
        app->add_option("--dets", dets, "MOTChallenge detection file")->required();
        app->add_option("--features", features, "feature sidecar CSV")->required();
        app->add_option("--out", out, "result file")->required();
        app->add_option("--mode", mode, "tracker")->check(CLI::IsMember({"base", "adp"}));
        flags.add_to(app);
    }

    int run(std::ostream& os) {
        flags.resolve();
        const auto frames = load_sequence(dets, features);
        const auto boxes = run_tracker(frames, mode, flags);
        write_results(out, boxes);

        json params = flags.to_json();
        params["dets"] = abs_path(dets);
        params["features"] = abs_path(features);
        params["out"] = abs_path(out);
        params["mode"] = mode;
        write_manifest(manifest_for(out), "track", params, json::array(),
                       {{"dets", abs_path(dets)}, {"features", abs_path(features)}}, {{"results", abs_path(out)}});
        os << "wrote " << boxes.size() << " boxes over " << frames.size() << " frames to " << out << "\n";
        return kOk;
    }
};

// --- eval -----------------------------------------------------------------

struct EvalCmd {
    std::string gt, res, out, sequence;
    double iou_thresh = 0.5;

    void add_to(CLI::App* app) {
        app->add_option("--gt", gt, "ground truth file")->required();
        app->add_option("--res", res, "result file")->required();
        app->add_option("--iou-thresh", iou_thresh, "IOU threshold for a match");
        app->add_option("--sequence", sequence, "name in the sequence column (default: result file stem)");
        app->add_option("--out", out, "metrics CSV; a .json twin and a manifest are written beside it");
    }

    int run(std::ostream& os) {
        if (!(iou_thresh > 0.0 && iou_thresh <= 1.0)) throw UsageError("--iou-thresh must lie in (0,1]");
        const auto g = read_gt(gt);
        if (g.empty()) throw DataError(gt + ": ground truth is empty");
        const auto p = read_gt(res);
        const MetricsReport r = evaluate(g, p, iou_thresh);
        const std::string name = sequence.empty() ? fs::path(res).stem().string() : sequence;

        const std::string csv = "sequence,IDF1,MOTA,FP,FN,IDSW,Frag\n" + name + "," + metric_cells(r) + "\n";
        os << csv;
        if (!out.empty()) {
            const fs::path json_path = fs::path(out).replace_extension(".json");
            json j = metric_json(r);
            j["sequence"] = name;
            write_text(out, csv);
            write_text(json_path, j.dump(2) + "\n");
            write_manifest(manifest_for(out), "eval",
                           {{"gt", abs_path(gt)},
                            {"res", abs_path(res)},
                            {"iou-thresh", iou_thresh},
                            {"sequence", name},
                            {"out", abs_path(out)}},
                           json::array(), {{"gt", abs_path(gt)}, {"res", abs_path(res)}},
                           {{"csv", abs_path(out)}, {"json", abs_path(json_path)}});
        }
        return kOk;
    }
};

// --- synth ----------------------------------------------------------------

void write_scenario(const fs::path& dir, const Scenario& s) {
    write_gt(dir / "gt.txt", s.gt);
    write_detections(dir / "det.txt", s.det_frames);
    write_features(dir / "features.csv", s.det_frames);
}

json scenario_json(const ScenarioConfig& c) {
    return {{"seed", c.seed},
            {"frames", c.frames},
            {"objects", c.identities},
            {"crossings", c.crossings},
            {"noise", c.det_noise_px},
            {"feature-noise", c.feature_noise},
            {"feature-dim", c.feature_dim},
            {"drop-prob", c.drop_prob_occluded},
            {"appearance-sim", c.appearance_similarity},
            {"turn-prob", c.turn_prob},
            {"occlusion-iou", c.occlusion_iou},
            {"no-mix", !c.mix_features}};
}

std::string scenario_dir_name(std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "s%02zu", i + 1);
    return buf;
}

struct SynthCmd {
    std::string out, preset;
    ScenarioConfig cfg;
    bool no_mix = false;
    CLI::App* app = nullptr;

    void add_to(CLI::App* a) {
        app = a;
        a->add_option("--out", out, "output directory")->required();
        a->add_option("--preset", preset, "built-in scenario suite")->check(CLI::IsMember({"occlusion-20"}));
        a->add_option("--seed", cfg.seed);
        a->add_option("--frames", cfg.frames);
        a->add_option("--objects", cfg.identities, "number of identities");
        a->add_option("--crossings", cfg.crossings, "identity pairs walking through each other");
        a->add_option("--noise", cfg.det_noise_px, "box jitter std in pixels");
        a->add_option("--feature-noise", cfg.feature_noise);
        a->add_option("--feature-dim", cfg.feature_dim);
        a->add_option("--drop-prob", cfg.drop_prob_occluded, "drop probability for occluded detections");
        a->add_option("--appearance-sim", cfg.appearance_similarity, "expected cosine between identities");
        a->add_option("--turn-prob", cfg.turn_prob);
        a->add_option("--occlusion-iou", cfg.occlusion_iou);
        a->add_flag("--no-mix", no_mix, "keep occluded features unmixed");
    }

    int run(std::ostream& os) {
        cfg.mix_features = !no_mix;
        const fs::path dir(out);
        if (!preset.empty()) {
            for (const CLI::Option* opt : app->get_options()) {
                const std::string& n = opt->get_name();
                if (opt->count() > 0 && n != "--out" && n != "--preset" && n != "--config") {
                    throw UsageError("--preset cannot be combined with " + n);
                }
            }
            const auto configs = preset_configs(preset);
            json seeds = json::array(), dirs = json::array();
            for (std::size_t i = 0; i < configs.size(); ++i) {
                write_scenario(dir / scenario_dir_name(i), generate(configs[i]));
                seeds.push_back(configs[i].seed);
                dirs.push_back(abs_path(dir / scenario_dir_name(i)));
            }
            write_manifest(dir / "manifest.json", "synth", {{"out", abs_path(dir)}, {"preset", preset}}, seeds,
                           json::object(), {{"scenarios", dirs}});
            os << "wrote " << configs.size() << " scenarios under " << out << "\n";
            return kOk;
        }
        cfg.validate();
        write_scenario(dir, generate(cfg));
        json params = scenario_json(cfg);
        params["out"] = abs_path(dir);
        write_manifest(dir / "manifest.json", "synth", params, json::array({cfg.seed}), json::object(),
                       {{"gt", abs_path(dir / "gt.txt")},
                        {"dets", abs_path(dir / "det.txt")},
                        {"features", abs_path(dir / "features.csv")}});
        os << "wrote scenario to " << out << "\n";
        return kOk;
    }
};

// --- sweep ----------------------------------------------------------------

struct Sequence {
    std::string name;
    std::vector<FrameData> frames;
    std::vector<LabeledBox> gt;
};

Sequence load_dir(const fs::path& dir) {
    const auto gt = read_gt(dir / "gt.txt");
    if (gt.empty()) throw DataError((dir / "gt.txt").string() + ": ground truth is empty");
    return {dir.filename().string(), load_sequence(dir / "det.txt", dir / "features.csv"), gt};
}

struct SweepCmd {
    std::string param, values, data, dets, features, gt, preset, out;
    TrackerFlags flags;

    void add_to(CLI::App* app) {
        app->add_option("--param", param, "parameter to vary")
            ->required()
            ->check(CLI::IsMember({"alpha", "horizon", "window", "beta"}));
        app->add_option("--values", values, "comma-separated values")->required();
        app->add_option("--data", data, "scenario directory, or a directory of scenario directories");
        app->add_option("--dets", dets);
        app->add_option("--features", features);
        app->add_option("--gt", gt);
        app->add_option("--preset", preset, "generate a built-in suite in memory")
            ->check(CLI::IsMember({"occlusion-20"}));
        app->add_option("--out", out, "sweep CSV")->required();
        flags.add_to(app);
    }

    std::vector<double> parse_values() const {
        std::vector<double> v;
        std::stringstream ss(values);
        std::string item;
        while (std::getline(ss, item, ',')) {
            double x = 0.0;
            std::size_t used = 0;
            try {
                x = std::stod(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != item.size() || !std::isfinite(x)) {
                throw UsageError("--values: cannot parse '" + item + "'");
            }
            if ((param == "horizon" || param == "window") && x != std::floor(x)) {
                throw UsageError("--values: " + param + " takes integers");
            }
            v.push_back(x);
        }
        if (v.empty()) throw UsageError("--values is empty");
        return v;
    }

    std::vector<Sequence> load() const {
        const int sources = int(!data.empty()) + int(!dets.empty() || !features.empty() || !gt.empty()) +
                            int(!preset.empty());
        if (sources != 1) throw UsageError("give exactly one of --data, --dets/--features/--gt, --preset");
        std::vector<Sequence> seqs;
        if (!preset.empty()) {
            const auto configs = preset_configs(preset);
            for (std::size_t i = 0; i < configs.size(); ++i) {
                Scenario s = generate(configs[i]);
                seqs.push_back({scenario_dir_name(i), std::move(s.det_frames), std::move(s.gt)});
            }
        } else if (!data.empty()) {
            const fs::path root(data);
            if (fs::exists(root / "det.txt")) {
                seqs.push_back(load_dir(root));
            } else {
                std::set<fs::path> dirs;
                if (fs::is_directory(root)) {
                    for (const auto& e : fs::directory_iterator(root)) {
                        if (e.is_directory() && fs::exists(e.path() / "det.txt")) dirs.insert(e.path());
                    }
                }
                if (dirs.empty()) throw DataError(data + ": no scenario directories found");
                for (const auto& d : dirs) seqs.push_back(load_dir(d));
            }
        } else {
            if (dets.empty() || features.empty() || gt.empty()) {
                throw UsageError("--dets, --features and --gt go together");
            }
            auto g = read_gt(gt);
            if (g.empty()) throw DataError(gt + ": ground truth is empty");
            seqs.push_back({fs::path(dets).parent_path().filename().string(), load_sequence(dets, features),
                            std::move(g)});
        }
        return seqs;
    }

    int run(std::ostream& os) {
        flags.resolve();
        const std::vector<double> vals = parse_values();
        const std::vector<Sequence> seqs = load();

        struct Row {
            MetricsReport report;
            double seconds = 0.0;
        };
        std::vector<Row> rows(vals.size());
        std::exception_ptr error;
        const int n = static_cast<int>(vals.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < n; ++i) {
            try {
                TrackerFlags f = flags;
                const double v = vals[static_cast<std::size_t>(i)];
                if (param == "alpha") f.adp.alpha = v;
                if (param == "horizon") f.adp.horizon = static_cast<int>(v);
                if (param == "window") f.adp.window = static_cast<int>(v);
                if (param == "beta") f.adp.beta = v;
                f.adp.validate();
                std::vector<MetricsReport> per_seq;
                double seconds = 0.0;
                for (const Sequence& s : seqs) {
                    const auto t0 = std::chrono::steady_clock::now();
                    const auto boxes = run_tracker(s.frames, "adp", f);
                    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    per_seq.push_back(evaluate(s.gt, to_labeled(boxes)));
                }
                rows[static_cast<std::size_t>(i)] = {combine_reports(per_seq), seconds};
            } catch (...) {
#pragma omp critical(adpt_sweep_error)
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);

        std::string csv = "param,value,IDF1,MOTA,FP,FN,IDSW,Frag,runtime_s\n";
        char buf[64];
        for (std::size_t i = 0; i < vals.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%g", vals[i]);
            csv += param + "," + buf + "," + metric_cells(rows[i].report) + ",";
            std::snprintf(buf, sizeof buf, "%.4f", rows[i].seconds);
            csv += std::string(buf) + "\n";
        }
        write_text(out, csv);
        os << csv;

        json params = flags.to_json();
        params["param"] = param;
        params["values"] = values;
        params["out"] = abs_path(out);
        json inputs = json::object();
        if (!data.empty()) params["data"] = inputs["data"] = abs_path(data);
        if (!dets.empty()) {
            params["dets"] = inputs["dets"] = abs_path(dets);
            params["features"] = inputs["features"] = abs_path(features);
            params["gt"] = inputs["gt"] = abs_path(gt);
        }
        json seeds = json::array();
        if (!preset.empty()) {
            params["preset"] = preset;
            for (const auto& c : preset_configs(preset)) seeds.push_back(c.seed);
        }
        write_manifest(manifest_for(out), "sweep", params, seeds, inputs, {{"csv", abs_path(out)}});
        return kOk;
    }
};

// --- mda-oracle -----------------------------------------------------------

struct MdaCmd {
    int m = 3;
    int n_layers = 4;
    int instances = 50;
    std::uint64_t seed = 1;
    bool bonus = false;
    std::string out;

    void add_to(CLI::App* app) {
        app->add_option("--m", m, "nodes per layer (<= 4)");
        app->add_option("--n-layers", n_layers, "layers (<= 5)");
        app->add_option("--instances", instances);
        app->add_option("--seed", seed, "seed of the first instance; instance i uses seed + i");
        app->add_flag("--bonus", bonus, "add a coupling bonus per grouping");
        app->add_option("--out", out, "report CSV");
    }

    int run(std::ostream& os, std::ostream& err) {
        if (m < 1 || m > 4) throw UsageError("--m must lie in [1,4]");
        if (n_layers < 2 || n_layers > 5) throw UsageError("--n-layers must lie in [2,5]");
        if (instances < 1) throw UsageError("--instances must be positive");

        std::string csv = "instance,seed,exact,avs,gap\n";
        char buf[160];
        int violations = 0;
        for (int i = 0; i < instances; ++i) {
            const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
            const MdaInstance inst = make_random_instance(s, m, n_layers, bonus);
            const double exact = exact_solve(inst).value;
            const double approx = avs_solve(inst, arc_value_provider(inst)).value;
            const double gap = exact - approx;
            if ((!bonus && std::abs(gap) > 1e-9) || gap < -1e-9) ++violations;
            std::snprintf(buf, sizeof buf, "%d,%llu,%.12g,%.12g,%.12g\n", i, static_cast<unsigned long long>(s), exact,
                          approx, std::abs(gap) <= 1e-12 ? 0.0 : gap);
            csv += buf;
        }
        os << csv;
        if (!out.empty()) {
            write_text(out, csv);
            write_manifest(manifest_for(out), "mda-oracle",
                           {{"m", m},
                            {"n-layers", n_layers},
                            {"instances", instances},
                            {"seed", seed},
                            {"bonus", bonus},
                            {"out", abs_path(out)}},
                           json::array({seed}), json::object(), {{"csv", abs_path(out)}});
        }
        if (violations > 0) {
            err << "mda-oracle: " << violations << " instance(s) broke the gap check\n";
            return kData;
        }
        return kOk;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ADPTrack multi-object tracker", "adptrack"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    TrackCmd track;
    EvalCmd eval;
    SynthCmd synth;
    SweepCmd sweep;
    MdaCmd mda;
    std::string config_help;
    auto sub = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("--config", config_help, "JSON file of flag values (a run manifest works); flags given here win");
        return s;
    };
    CLI::App* track_app = sub("track", "run the base tracker or ADPTrack over a sequence");
    CLI::App* eval_app = sub("eval", "CLEAR metrics and IDF1 of a result file");
    CLI::App* synth_app = sub("synth", "generate synthetic scenarios");
    CLI::App* sweep_app = sub("sweep", "metrics of ADPTrack across values of one parameter");
    CLI::App* mda_app = sub("mda-oracle", "compare exact DP with approximation in value space");
    track.add_to(track_app);
    eval.add_to(eval_app);
    synth.add_to(synth_app);
    sweep.add_to(sweep_app);
    mda.add_to(mda_app);

    std::vector<std::string> expanded;
    try {
        expanded = expand_config(args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kData;
    }
    try {
        std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (track_app->parsed()) return track.run(out);
        if (eval_app->parsed()) return eval.run(out);
        if (synth_app->parsed()) return synth.run(out);
        if (sweep_app->parsed()) return sweep.run(out);
        if (mda_app->parsed()) return mda.run(out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kData;
    }
    return kUsage;
}

}  // namespace adpt::cli
