#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

#include "adpt/metrics.hpp"
#include "adpt/motio.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace adpt;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::string p(const std::filesystem::path& x) { return x.string(); }

}  // namespace

TEST_CASE("usage errors exit with 1") {
    CHECK(invoke({}).code == cli::kUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kUsage);
    CHECK(invoke({"track", "--dets", "x"}).code == cli::kUsage);
    CHECK(invoke({"mda-oracle", "--m", "5"}).code == cli::kUsage);
    CHECK(invoke({"mda-oracle", "--n-layers", "6"}).code == cli::kUsage);
    CHECK(invoke({"sweep", "--param", "gamma", "--values", "1", "--preset", "occlusion-20", "--out", "x"}).code ==
          cli::kUsage);
    CHECK(invoke({"--help"}).code == cli::kOk);
}

TEST_CASE("synth, track and eval") {
    testing::TempDir dir("cli");
    const auto scen = dir / "scen";
    REQUIRE(invoke({"synth", "--out", p(scen), "--objects", "5", "--frames", "50", "--seed", "3"}).code == cli::kOk);
    std::set<int> ids;
    for (const auto& b : read_gt(scen / "gt.txt")) ids.insert(b.id);
    CHECK(ids.size() == 5);
    CHECK(std::filesystem::exists(scen / "manifest.json"));

    const auto scen2 = dir / "scen2";
    REQUIRE(invoke({"synth", "--out", p(scen2), "--objects", "5", "--frames", "50", "--seed", "3"}).code == cli::kOk);
    for (const char* f : {"gt.txt", "det.txt", "features.csv"}) CHECK(slurp(scen / f) == slurp(scen2 / f));

    const auto base = dir / "base.txt", adp0 = dir / "adp0.txt";
    REQUIRE(invoke({"track", "--dets", p(scen / "det.txt"), "--features", p(scen / "features.csv"), "--mode", "base",
                 "--out", p(base)})
                .code == cli::kOk);
    REQUIRE(invoke({"track", "--dets", p(scen / "det.txt"), "--features", p(scen / "features.csv"), "--mode", "adp",
                 "--alpha", "0", "--out", p(adp0)})
                .code == cli::kOk);
    CHECK(slurp(base) == slurp(adp0));

    const Run e = invoke({"eval", "--gt", p(scen / "gt.txt"), "--res", p(base), "--out", p(dir / "m.csv")});
    REQUIRE(e.code == cli::kOk);
    const auto rows = lines(slurp(dir / "m.csv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "sequence,IDF1,MOTA,FP,FN,IDSW,Frag");
    CHECK(rows[1] == "base,1.000000,1.000000,0,0,0,0");
    const auto j = nlohmann::json::parse(slurp(dir / "m.json"));
    CHECK(j.at("IDF1").get<double>() == 1.0);

    const Run self = invoke({"eval", "--gt", p(scen / "gt.txt"), "--res", p(scen / "gt.txt")});
    CHECK(lines(self.out).at(1) == "gt,1.000000,1.000000,0,0,0,0");
}

TEST_CASE("eval on the hand-built swap") {
    testing::TempDir dir("swap");
    std::ofstream(dir / "gt.txt") << "1,1,0,0,10,10,1,1,1\n1,2,100,0,10,10,1,1,1\n2,1,0,0,10,10,1,1,1\n"
                                     "2,2,100,0,10,10,1,1,1\n3,1,0,0,10,10,1,1,1\n3,2,100,0,10,10,1,1,1\n";
    std::ofstream(dir / "res.txt") << "1,7,0,0,10,10,1,-1,-1,-1\n1,8,100,0,10,10,1,-1,-1,-1\n"
                                      "2,7,0,0,10,10,1,-1,-1,-1\n2,8,100,0,10,10,1,-1,-1,-1\n"
                                      "3,8,0,0,10,10,1,-1,-1,-1\n3,7,100,0,10,10,1,-1,-1,-1\n";
    const Run r = invoke({"eval", "--gt", p(dir / "gt.txt"), "--res", p(dir / "res.txt"), "--sequence", "swap"});
    REQUIRE(r.code == cli::kOk);
    CHECK(lines(r.out).at(1) == "swap,0.666667,0.666667,0,0,2,0");

    std::ofstream(dir / "empty.txt") << "";
    CHECK(invoke({"eval", "--gt", p(dir / "empty.txt"), "--res", p(dir / "res.txt")}).code == cli::kData);
}

TEST_CASE("data errors exit with 2") {
    testing::TempDir dir("bad");
    std::ofstream(dir / "det.txt") << "1,-1,0,0,5,5,0.9\n";
    std::ofstream(dir / "f.csv") << "frame,det,dim=2\n";
    CHECK(invoke({"track", "--dets", p(dir / "det.txt"), "--features", p(dir / "f.csv"), "--out", p(dir / "r.txt")})
              .code == cli::kData);
    CHECK(invoke({"track", "--dets", p(dir / "nope.txt"), "--features", p(dir / "f.csv"), "--out", p(dir / "r.txt")})
              .code == cli::kData);
    CHECK(invoke({"track", "--config", p(dir / "nope.json")}).code == cli::kData);
}

TEST_CASE("manifests reproduce their runs") {
    testing::TempDir dir("manifest");
    const auto scen = dir / "scen";
    REQUIRE(invoke({"synth", "--out", p(scen), "--objects", "4", "--frames", "40", "--crossings", "1", "--noise", "1",
                 "--feature-noise", "0.1", "--drop-prob", "0.5"})
                .code == cli::kOk);
    const auto m = nlohmann::json::parse(slurp(scen / "manifest.json"));
    CHECK(m.at("command") == "synth");
    CHECK(m.at("params").at("crossings") == 1);
    CHECK(m.at("tool_version") == cli::kToolVersion);

    const auto again = dir / "again";
    REQUIRE(invoke({"synth", "--config", p(scen / "manifest.json"), "--out", p(again)}).code == cli::kOk);
    for (const char* f : {"gt.txt", "det.txt", "features.csv"}) CHECK(slurp(scen / f) == slurp(again / f));

    const auto res = dir / "r.txt";
    REQUIRE(invoke({"track", "--dets", p(scen / "det.txt"), "--features", p(scen / "features.csv"), "--horizon", "4",
                 "--variant", "f3", "--no-crowd", "--out", p(res)})
                .code == cli::kOk);
    const std::string first = slurp(res);
    const auto tm = nlohmann::json::parse(slurp(dir / "r.txt.manifest.json"));
    CHECK(tm.at("params").at("horizon") == 4);
    CHECK(tm.at("params").at("no-crowd") == true);
    std::filesystem::remove(res);
    REQUIRE(invoke({"track", "--config", p(dir / "r.txt.manifest.json")}).code == cli::kOk);
    CHECK(slurp(res) == first);

    // flags on the command line beat the config
    REQUIRE(invoke({"track", "--config", p(dir / "r.txt.manifest.json"), "--mode", "base", "--out", p(dir / "b.txt")})
                .code == cli::kOk);
    CHECK(nlohmann::json::parse(slurp(dir / "b.txt.manifest.json")).at("params").at("mode") == "base");
}

TEST_CASE("synth preset") {
    testing::TempDir dir("preset");
    REQUIRE(invoke({"synth", "--preset", "occlusion-20", "--out", p(dir / "suite")}).code == cli::kOk);
    int scenarios = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir / "suite")) {
        if (e.is_directory()) {
            ++scenarios;
            CHECK(std::filesystem::exists(e.path() / "gt.txt"));
            CHECK(std::filesystem::exists(e.path() / "det.txt"));
            CHECK(std::filesystem::exists(e.path() / "features.csv"));
        }
    }
    CHECK(scenarios == 20);
    CHECK(invoke({"synth", "--preset", "occlusion-20", "--seed", "4", "--out", p(dir / "x")}).code == cli::kUsage);
    CHECK(invoke({"synth", "--objects", "2", "--crossings", "2", "--out", p(dir / "y")}).code == cli::kUsage);
}

TEST_CASE("sweep") {
    testing::TempDir dir("sweep");
    const auto scen = dir / "scen";
    REQUIRE(invoke({"synth", "--out", p(scen), "--objects", "4", "--frames", "80", "--crossings", "2", "--noise", "1",
                 "--feature-noise", "0.15", "--drop-prob", "1"})
                .code == cli::kOk);

    REQUIRE(invoke({"sweep", "--param", "alpha", "--values", "0,0.25", "--data", p(scen), "--out", p(dir / "a.csv")})
                .code == cli::kOk);
    const auto rows = lines(slurp(dir / "a.csv"));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "param,value,IDF1,MOTA,FP,FN,IDSW,Frag,runtime_s");
    CHECK(rows[1].starts_with("alpha,0,"));
    CHECK(rows[2].starts_with("alpha,0.25,"));

    REQUIRE(invoke({"track", "--dets", p(scen / "det.txt"), "--features", p(scen / "features.csv"), "--mode", "base",
                 "--out", p(dir / "base.txt")})
                .code == cli::kOk);
    const Run e = invoke({"eval", "--gt", p(scen / "gt.txt"), "--res", p(dir / "base.txt")});
    const std::string base_metrics = lines(e.out).at(1).substr(lines(e.out).at(1).find(',') + 1);
    const std::string alpha0 = rows[1].substr(std::string("alpha,0,").size());
    CHECK(alpha0.substr(0, alpha0.rfind(',')) == base_metrics);

    REQUIRE(invoke({"sweep", "--param", "horizon", "--values", "1,5,10", "--data", p(scen), "--out", p(dir / "h.csv")})
                .code == cli::kOk);
    const auto h = lines(slurp(dir / "h.csv"));
    REQUIRE(h.size() == 4);
    std::vector<double> runtime;
    for (std::size_t i = 1; i < h.size(); ++i) runtime.push_back(std::stod(h[i].substr(h[i].rfind(',') + 1)));
    CHECK(runtime[0] <= runtime[1]);
    CHECK(runtime[1] <= runtime[2]);

    CHECK(invoke({"sweep", "--param", "horizon", "--values", "2.5", "--data", p(scen), "--out", p(dir / "x.csv")}).code ==
          cli::kUsage);
    CHECK(invoke({"sweep", "--param", "alpha", "--values", "0", "--out", p(dir / "x.csv")}).code == cli::kUsage);
}

TEST_CASE("mda-oracle") {
    const Run a = invoke({"mda-oracle", "--m", "3", "--n-layers", "4", "--instances", "10", "--seed", "5"});
    REQUIRE(a.code == cli::kOk);
    const auto rows = lines(a.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "instance,seed,exact,avs,gap");
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ends_with(",0"));
    CHECK(invoke({"mda-oracle", "--m", "3", "--n-layers", "4", "--instances", "10", "--seed", "5"}).out == a.out);

    const Run b = invoke({"mda-oracle", "--m", "3", "--n-layers", "4", "--instances", "20", "--bonus"});
    REQUIRE(b.code == cli::kOk);
    for (std::size_t i = 1; i < lines(b.out).size(); ++i) {
        const std::string& r = lines(b.out)[i];
        CHECK(std::stod(r.substr(r.rfind(',') + 1)) >= 0.0);
    }
}
