#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "persuade/cli/app.hpp"
#include "persuade/io/serialize.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
using doctest::Approx;

namespace {

struct Run {
    int code;
    json summary;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "persuade");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    const int code = persuade::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out);
    json summary;
    try {
        summary = json::parse(out.str());
    } catch (const json::exception&) {
        summary = out.str();
    }
    return {code, summary};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Scratch {
public:
    Scratch() : root_(fs::temp_directory_path() / ("persuade_cli_" + std::to_string(counter_++))) {
        fs::remove_all(root_);
        fs::create_directories(root_);
    }
    ~Scratch() { fs::remove_all(root_); }
    std::string file(const std::string& name, const std::string& content) const {
        std::ofstream(root_ / name) << content;
        return (root_ / name).string();
    }
    std::string dir(const std::string& name) const { return (root_ / name).string(); }

private:
    static inline int counter_ = 0;
    fs::path root_;
};

const char* kBenchmark = R"({"model":{"p_s":0.5,"joint":{"type":"product",
    "cost":{"family":"beta","a":2,"b":2},"prior":{"family":"point","at":0.5}}}})";

const char* kHeterogeneous = R"({"model":{"p_s":0.4,"joint":{"type":"product",
    "cost":{"family":"beta","a":2,"b":3},"prior":{"family":"beta","a":3,"b":3}}},
    "policy":{"sigma0":0.2,"sigma1":0.9},"n_agents":20000,"seed":5})";

}  // namespace

TEST_SUITE("cli commands") {
    TEST_CASE("solve the benchmark") {
        Scratch s;
        const auto r = run({"solve", "--config", s.file("c.json", kBenchmark), "--out", s.dir("out")});
        REQUIRE(r.code == persuade::cli::kExitOk);
        CHECK(r.summary["command"] == "solve");
        CHECK(r.summary["sigma0"].get<double>() == Approx(1.0 / 3.0).epsilon(1e-4));
        CHECK(r.summary["sigma1"] == 1.0);
        CHECK(r.summary["mu_hat"].get<double>() == Approx(0.75).epsilon(1e-4));
        CHECK(r.summary["value"].get<double>() == Approx(0.5625).epsilon(1e-6));
        CHECK(r.summary["measures"]["compliers"].get<double>() == Approx(0.84375).epsilon(1e-6));
        const auto file = json::parse(slurp(fs::path(s.dir("out")) / "solution.json"));
        CHECK(file == r.summary);
        const auto vt = persuade::io::parse_value_table_csv(slurp(fs::path(s.dir("out")) / "value_table.csv"));
        CHECK(vt.size() == persuade::kDefaultGridNodes);
        const auto part = persuade::io::parse_partition_csv(slurp(fs::path(s.dir("out")) / "partition.csv"),
                                                           persuade::Policy{1.0 / 3.0, 1.0});
        CHECK(part.size() == persuade::kDefaultGridNodes);
    }

    TEST_CASE("reruns are byte-identical") {
        Scratch s;
        const auto cfg = s.file("c.json", kHeterogeneous);
        for (const char* cmd : {"solve", "partition", "simulate"}) {
            CAPTURE(std::string(cmd));
            REQUIRE(run({cmd, "--config", cfg, "--out", s.dir("a")}).code == 0);
            REQUIRE(run({cmd, "--config", cfg, "--out", s.dir("b")}).code == 0);
        }
        REQUIRE(run({"sweep-polarization", "--config", cfg, "--base", R"({"family":"beta","a":2,"b":2})", "--alphas",
                     "0.5,1,2", "--out", s.dir("a")})
                    .code == 0);
        REQUIRE(run({"sweep-polarization", "--config", cfg, "--base", R"({"family":"beta","a":2,"b":2})", "--alphas",
                     "0.5,1,2", "--out", s.dir("b")})
                    .code == 0);
        std::size_t compared = 0;
        for (const auto& entry : fs::directory_iterator(s.dir("a"))) {
            const auto twin = fs::path(s.dir("b")) / entry.path().filename();
            REQUIRE(fs::exists(twin));
            CHECK(slurp(entry.path()) == slurp(twin));
            ++compared;
        }
        CHECK(compared == 7);
    }

    TEST_CASE("flags override the config") {
        Scratch s;
        const auto cfg = s.file("c.json", kBenchmark);
        const auto r = run({"solve", "--config", cfg, "--ps", "0.8", "--prior", R"({"family":"point","at":0.8})"});
        REQUIRE(r.code == 0);
        CHECK(r.summary["sigma0"] == 1.0);
        CHECK(r.summary["sigma1"] == 1.0);
        const auto g = run({"solve", "--config", cfg, "--grid-n", "401"});
        REQUIRE(g.code == 0);
        CHECK(g.summary["mu_hat"].get<double>() == Approx(0.75).epsilon(1e-4));
    }

    TEST_CASE("flags alone describe a model") {
        const auto r = run({"solve", "--ps", "0.5", "--cost", R"({"family":"beta","a":2,"b":2})", "--prior",
                            R"({"family":"point","at":0.5})"});
        REQUIRE(r.code == 0);
        CHECK(r.summary["value"].get<double>() == Approx(0.5625).epsilon(1e-6));
    }

    TEST_CASE("partition payoff") {
        const auto r = run({"partition", "--ps", "0.5", "--cost", R"({"family":"beta","a":2,"b":2})", "--prior",
                            R"({"family":"point","at":0.5})", "--sigma0", "0.3333333333333333", "--sigma1", "1"});
        REQUIRE(r.code == 0);
        CHECK(r.summary["payoff"].get<double>() == Approx(0.5625).epsilon(1e-6));
        CHECK(r.summary["measures"]["always"].get<double>() == Approx(0.0).epsilon(1e-9));
    }

    TEST_CASE("check-shape on a uniform density") {
        Scratch s;
        const auto r = run({"check-shape", "--density", R"({"family":"uniform"})", "--out", s.dir("o")});
        REQUIRE(r.code == 0);
        CHECK(r.summary["shape"] == "Flat");
        CHECK(json::parse(slurp(fs::path(s.dir("o")) / "shape.json"))["shape"] == "Flat");
        CHECK(fs::exists(fs::path(s.dir("o")) / "density.csv"));
    }

    TEST_CASE("check-shape on a model") {
        const auto r = run({"check-shape", "--ps", "0.5", "--cost", R"({"family":"beta","a":2,"b":2})", "--prior",
                            R"({"family":"point","at":0.5})"});
        REQUIRE(r.code == 0);
        CHECK(r.summary["shape"] == "SinglePeaked");
        CHECK(r.summary["location"].get<double>() == Approx(0.5).epsilon(1e-3));
    }

    TEST_CASE("polarization sweep") {
        Scratch s;
        const auto r = run({"sweep-polarization", "--ps", "0.3", "--base", R"({"family":"beta","a":2,"b":2})",
                            "--alphas", "0.5,1,2", "--out", s.dir("o")});
        REQUIRE(r.code == 0);
        CHECK(r.summary["rows"] == 3);
        CHECK(r.summary["monotone"] == true);
        const auto rows = persuade::io::parse_sweep_csv(slurp(fs::path(s.dir("o")) / "sweep.csv"));
        CHECK(rows.size() == 3);
        CHECK(json::parse(slurp(fs::path(s.dir("o")) / "verdict.json"))["monotone"] == true);
    }

    TEST_CASE("order sweeps") {
        Scratch s;
        const auto pop = s.file("pop.json", R"({"model":{"p_s":0.4},"order":"reversed_hazard","chain":[
            {"family":"beta","a":2,"b":4},{"family":"beta","a":2,"b":3},{"family":"beta","a":2,"b":2}]})");
        const auto a = run({"sweep-order", "--config", pop});
        REQUIRE(a.code == 0);
        CHECK(a.summary["rows"] == 3);
        CHECK(a.summary["monotone"] == true);

        const auto shift = s.file("shift.json", R"({"model":{"p_s":0.4},"order":"hazard","c":0.6,"chain":[
            {"family":"beta","a":2,"b":2},{"family":"beta","a":3,"b":2}]})");
        const auto b = run({"sweep-order", "--config", shift});
        REQUIRE(b.code == 0);
        CHECK(b.summary["monotone"] == true);
        CHECK(b.summary["warnings"].empty());

        const auto unordered = s.file("bad.json", R"({"model":{"p_s":0.4},"chain":[
            {"family":"beta","a":2,"b":2},{"family":"beta","a":2,"b":4}]})");
        const auto c = run({"sweep-order", "--config", unordered});
        CHECK(c.code == persuade::cli::kExitConfigError);
        CHECK(c.summary["error"]["kind"] == "PreconditionViolation");
    }

    TEST_CASE("condition checks") {
        const auto r = run({"check-condition", "--ps", "0.4", "--c", "0.6", "--density",
                            R"({"family":"truncnormal","mean":0.5,"var":0.02})"});
        REQUIRE(r.code == 0);
        REQUIRE(r.summary["reports"].size() == 2);
        CHECK(r.summary["reports"][0]["condition"] == "peakedness");
        CHECK(r.summary["reports"][0]["satisfied"] == true);
        CHECK(r.summary["reports"][1]["satisfied"] == false);
        const auto one = run({"check-condition", "--ps", "0.4", "--c", "0.6", "--condition", "dippedness",
                              "--density", R"({"family":"uniform"})"});
        REQUIRE(one.code == 0);
        CHECK(one.summary["reports"].size() == 1);
    }

    TEST_CASE("simulation") {
        Scratch s;
        const auto cfg = s.file("c.json", kHeterogeneous);
        const auto a = run({"simulate", "--config", cfg});
        const auto b = run({"simulate", "--config", cfg, "--seed", "6"});
        REQUIRE(a.code == 0);
        REQUIRE(b.code == 0);
        CHECK(a.summary["n_agents"] == 20000);
        CHECK(a.summary["seed"] == 5);
        CHECK(a.summary["mean_action"] != b.summary["mean_action"]);
        CHECK(std::abs(a.summary["difference"].get<double>()) < 4 * a.summary["standard_error"].get<double>());
    }
}

TEST_SUITE("cli errors") {
    TEST_CASE("configuration problems exit with code 2") {
        Scratch s;
        const std::vector<std::vector<std::string>> cases = {
            {"solve", "--config", s.dir("missing.json")},
            {"solve", "--config", s.file("broken.json", "{not json")},
            {"solve", "--config", s.file("array.json", "[1,2]")},
            {"solve", "--config", s.file("c.json", kBenchmark), "--grid-n", "50"},
            {"solve", "--config", s.file("c2.json", kBenchmark), "--ps", "1.5"},
            {"solve", "--ps", "0.5", "--cost", R"({"family":"gamma"})", "--prior", R"({"family":"point","at":0.5})"},
            {"solve", "--ps", "0.5"},
            {"partition", "--config", s.file("c3.json", kBenchmark)},
            {"partition", "--config", s.file("c4.json", kBenchmark), "--sigma0", "0.9", "--sigma1", "0.1"},
            {"simulate", "--config", s.file("c5.json", kHeterogeneous), "--n-agents", "10"},
            {"sweep-polarization", "--ps", "0.3", "--base", R"({"family":"beta","a":2,"b":2})", "--alphas", "2,1"},
            {"sweep-order", "--ps", "0.3", "--order", "sideways"},
            {"check-condition", "--ps", "0.4", "--c", "0.6", "--condition", "neither", "--density",
             R"({"family":"uniform"})"},
            {"frobnicate"},
            {},
            {"solve", "--no-such-flag"},
        };
        for (const auto& args : cases) {
            std::string joined;
            for (const auto& a : args) joined += a + " ";
            CAPTURE(joined);
            const auto r = run(args);
            CHECK(r.code == persuade::cli::kExitConfigError);
            REQUIRE(r.summary.is_object());
            CHECK(r.summary.contains("error"));
            CHECK(r.summary["exit_code"] == persuade::cli::kExitConfigError);
        }
    }

    TEST_CASE("solver disagreement exits with code 3") {
        Scratch s;
        auto cfg = json::parse(kBenchmark);
        cfg["tolerances"] = {{"policy", 0.0}, {"value", 0.0}};
        const auto r = run({"solve", "--config", s.file("strict.json", cfg.dump())});
        CHECK(r.code == persuade::cli::kExitConsistencyError);
        CHECK(r.summary["error"]["kind"] == "ConsistencyError");
    }

    TEST_CASE("help") {
        const auto r = run({"--help"});
        CHECK(r.code == persuade::cli::kExitOk);
        CHECK(r.summary.get<std::string>().find("sweep-polarization") != std::string::npos);
    }
}
