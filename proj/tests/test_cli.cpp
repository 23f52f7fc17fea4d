// Copyright 2026 The mrb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mrb/cli_commands.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "mrb/analysis.hpp"
#include "mrb/circuit_io.hpp"
#include "mrb/results_io.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("mrb");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.code =
        mrb::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

/// Fresh scratch directory, removed on destruction.
struct TempDir {
    fs::path path;

    TempDir() {
        static std::atomic<uint64_t> counter{0};
        path = fs::temp_directory_path() /
               ("mrb_cli_test_" +
                std::to_string(
                    std::chrono::steady_clock::now().time_since_epoch().count()) +
                "_" + std::to_string(counter.fetch_add(1)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }

    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

}  // namespace

TEST_CASE("parse_seed accepts decimal and hex, rejects junk") {
    CHECK(mrb::cli::parse_seed("1234") == 1234);
    CHECK(mrb::cli::parse_seed("0x4d2") == 0x4d2);
    CHECK(mrb::cli::parse_seed("0XABCDEF0123456789") == 0xABCDEF0123456789ULL);
    CHECK(mrb::cli::parse_seed("0") == 0);
    CHECK_THROWS_AS((void)mrb::cli::parse_seed(""), std::invalid_argument);
    CHECK_THROWS_AS((void)mrb::cli::parse_seed("12ab"), std::invalid_argument);
    CHECK_THROWS_AS((void)mrb::cli::parse_seed("seed"), std::invalid_argument);
    CHECK_THROWS_AS((void)mrb::cli::parse_seed("-5"), std::invalid_argument);
}

TEST_CASE("parse_uint_list") {
    CHECK(mrb::cli::parse_uint_list("0,2,4") == std::vector<uint32_t>{0, 2, 4});
    CHECK(mrb::cli::parse_uint_list("7") == std::vector<uint32_t>{7});
    CHECK_THROWS_AS((void)mrb::cli::parse_uint_list(""), std::invalid_argument);
    CHECK_THROWS_AS((void)mrb::cli::parse_uint_list("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS((void)mrb::cli::parse_uint_list("1,x"), std::invalid_argument);
    CHECK_THROWS_AS((void)mrb::cli::parse_uint_list("4294967296"), std::invalid_argument);
}

TEST_CASE("parse_device spellings") {
    const mrb::ConnectivityGraph lattice = mrb::cli::parse_device("lattice:2x3");
    CHECK(lattice.num_sites() == 6);
    CHECK(lattice.edges().size() == 7);

    const mrb::ConnectivityGraph path = mrb::cli::parse_device("path:4");
    CHECK(path.num_sites() == 4);
    CHECK(path.edges().size() == 3);

    const mrb::ConnectivityGraph edges = mrb::cli::parse_device("edges:0-1,1-2;sites=5");
    CHECK(edges.num_sites() == 5);
    CHECK(edges.edges().size() == 2);
    CHECK(mrb::cli::parse_device("edges:0-1,1-2").num_sites() == 3);

    CHECK_THROWS_AS((void)mrb::cli::parse_device("lattice:4"), std::invalid_argument);
    CHECK_THROWS_AS((void)mrb::cli::parse_device("ring:5"), std::invalid_argument);
    CHECK_THROWS_AS((void)mrb::cli::parse_device("edges:0:1"), std::invalid_argument);
}

TEST_CASE("epsilon estimate JSON round trip") {
    mrb::EpsilonOmegaEstimate estimate;
    estimate.value = 0.0123;
    estimate.std_error = 0.0004;
    estimate.layer_samples = 120;
    estimate.per_layer_samples = 4000;
    const mrb::EpsilonOmegaEstimate back =
        mrb::cli::epsilon_from_json(mrb::cli::epsilon_to_json(estimate));
    CHECK(back.value == estimate.value);
    CHECK(back.std_error == estimate.std_error);
    CHECK(back.layer_samples == 120);
    CHECK(back.per_layer_samples == 4000);
    CHECK_THROWS_AS((void)mrb::cli::epsilon_from_json("{}"), std::invalid_argument);
}

TEST_CASE("cli: help and usage errors") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"--help"}).out.find("design") != std::string::npos);
    CHECK(run_cli({}).code == mrb::cli::kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == mrb::cli::kExitUsage);
    CHECK(run_cli({"design", "--no-such-flag", "1"}).code == mrb::cli::kExitUsage);
}

TEST_CASE("cli: design/simulate/analyze/epsilon round trip") {
    const TempDir tmp;
    const std::string design_dir = tmp.file("bench");

    // --- design ---------------------------------------------------------
    const CliResult designed = run_cli(
        {"design", "--device", "path:3", "--depths", "0,2,4", "--circuits", "3",
         "--shots", "32", "--xi", "0.25", "--seed", "0x5EED", "--out", design_dir});
    REQUIRE(designed.code == 0);
    CHECK(designed.out.find("9 circuits") != std::string::npos);
    CHECK(fs::exists(fs::path(design_dir) / "design.json"));
    const fs::path circuit0 = fs::path(design_dir) / "circuits" / "d0000_k000.mrb";
    const fs::path circuit8 = fs::path(design_dir) / "circuits" / "d0004_k002.mrb";
    REQUIRE(fs::exists(circuit0));
    REQUIRE(fs::exists(circuit8));

    // Same seed regenerates byte-identical artifacts.
    const std::string design_bytes = slurp(fs::path(design_dir) / "design.json");
    const std::string circuit_bytes = slurp(circuit8);
    const std::string design_dir2 = tmp.file("bench_again");
    REQUIRE(run_cli({"design", "--device", "path:3", "--depths", "0,2,4", "--circuits",
                     "3", "--shots", "32", "--xi", "0.25", "--seed", "0x5EED", "--out",
                     design_dir2})
                .code == 0);
    CHECK(slurp(fs::path(design_dir2) / "design.json") == design_bytes);
    CHECK(slurp(fs::path(design_dir2) / "circuits" / "d0004_k002.mrb") == circuit_bytes);

    // --- simulate (noiseless hits the target every shot) -----------------
    const std::string results_path = tmp.file("results.json");
    const CliResult simulated = run_cli(
        {"simulate", "--design", design_dir + "/design.json", "--model", "noiseless",
         "--out", results_path});
    REQUIRE(simulated.code == 0);
    const mrb::ResultsFile results = mrb::read_results_file(results_path);
    REQUIRE(results.records.size() == 9);
    for (const mrb::ShotRecord& record : results.records) {
        REQUIRE(record.counts.size() == 1);
        CHECK(record.counts.begin()->first == record.target);
        CHECK(record.counts.begin()->second == 32);
    }

    // --- analyze ----------------------------------------------------------
    const std::string report_path = tmp.file("report.json");
    const std::string csv_path = tmp.file("decay.csv");
    const CliResult analyzed = run_cli(
        {"analyze", "--results", results_path, "--seed", "11", "--epsilon", "0.01",
         "--out", report_path, "--csv", csv_path});
    REQUIRE(analyzed.code == 0);
    CHECK(analyzed.out.find("r = ") != std::string::npos);
    const mrb::AnalysisReport report = mrb::read_report_file(report_path);
    CHECK(report.n == 3);
    CHECK(report.fit.decay == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.has_epsilon);
    CHECK(report.epsilon == 0.01);
    CHECK(slurp(csv_path).rfind("d,s_mean,s_stderr,k\n", 0) == 0);

    // --- epsilon (noiseless model: exactly zero) --------------------------
    const std::string eps_path = tmp.file("eps.json");
    const CliResult eps = run_cli(
        {"epsilon", "--design", design_dir + "/design.json", "--model", "noiseless",
         "--layers", "10", "--samples", "200", "--seed", "3", "--out", eps_path});
    REQUIRE(eps.code == 0);
    const mrb::EpsilonOmegaEstimate estimate =
        mrb::cli::epsilon_from_json(slurp(eps_path));
    CHECK(estimate.value == 0.0);
    CHECK(estimate.layer_samples == 10);
}

TEST_CASE("cli: random model simulation is seeded and reproducible") {
    const TempDir tmp;
    const std::string design_dir = tmp.file("bench");
    REQUIRE(run_cli({"design", "--device", "path:2", "--depths", "0,2", "--circuits",
                     "2", "--shots", "50", "--xi", "0.5", "--seed", "1", "--out",
                     design_dir})
                .code == 0);

    // --model random without --model-seed is a usage error.
    CHECK(run_cli({"simulate", "--design", design_dir + "/design.json", "--model",
                   "random", "--out", tmp.file("r.json")})
              .code == mrb::cli::kExitUsage);

    const std::string model_path = tmp.file("model.json");
    const CliResult first = run_cli(
        {"simulate", "--design", design_dir + "/design.json", "--model", "random",
         "--model-seed", "42", "--model-out", model_path, "--out", tmp.file("a.json")});
    REQUIRE(first.code == 0);
    REQUIRE(run_cli({"simulate", "--design", design_dir + "/design.json", "--model",
                     "random", "--model-seed", "42", "--out", tmp.file("b.json")})
                .code == 0);
    CHECK(slurp(tmp.file("a.json")) == slurp(tmp.file("b.json")));

    // The written model can be fed back via file:.
    REQUIRE(run_cli({"simulate", "--design", design_dir + "/design.json", "--model",
                     "file:" + model_path, "--out", tmp.file("c.json")})
                .code == 0);
    CHECK(slurp(tmp.file("c.json")) == slurp(tmp.file("a.json")));
}

TEST_CASE("cli: usage and runtime failures map to exit codes") {
    const TempDir tmp;

    // Odd depth: usage error naming the even-depth requirement.
    const CliResult odd = run_cli(
        {"design", "--device", "path:2", "--depths", "0,3", "--seed", "1", "--out",
         tmp.file("x")});
    CHECK(odd.code == mrb::cli::kExitUsage);
    CHECK(odd.err.find("even") != std::string::npos);

    // Missing required flags.
    CHECK(run_cli({"design", "--out", tmp.file("y")}).code == mrb::cli::kExitUsage);
    CHECK(run_cli({"design", "--seed", "1"}).code == mrb::cli::kExitUsage);
    CHECK(run_cli({"analyze", "--results", "nope.json", "--out", tmp.file("r.json")})
              .code == mrb::cli::kExitUsage);  // missing --seed

    // Missing circuit file: runtime error that names the file.
    const std::string design_dir = tmp.file("bench");
    REQUIRE(run_cli({"design", "--device", "path:2", "--depths", "0,2", "--circuits",
                     "2", "--shots", "10", "--xi", "0.5", "--seed", "9", "--out",
                     design_dir})
                .code == 0);
    fs::remove(fs::path(design_dir) / "circuits" / "d0002_k001.mrb");
    const CliResult missing = run_cli(
        {"simulate", "--design", design_dir + "/design.json", "--model", "noiseless",
         "--out", tmp.file("res.json")});
    CHECK(missing.code == mrb::cli::kExitRuntime);
    CHECK(missing.err.find("d0002_k001.mrb") != std::string::npos);

    // Unknown sweep preset.
    CHECK(run_cli({"sweep", "--preset", "everything", "--seed", "1", "--out",
                   tmp.file("s")})
              .code == mrb::cli::kExitUsage);

    // Malformed results file: usage-class input error.
    spit(tmp.file("bad.json"), "{\"schema_version\": 1}");
    CHECK(run_cli({"analyze", "--results", tmp.file("bad.json"), "--seed", "1", "--out",
                   tmp.file("rep.json")})
              .code == mrb::cli::kExitUsage);
}

TEST_CASE("cli: config file values override flags") {
    const TempDir tmp;
    const std::string config_path = tmp.file("design.config.json");
    spit(config_path,
         "{\n"
         "  \"depths\": [0, 2],\n"
         "  \"circuits\": 2,\n"
         "  \"seed\": \"0x77\"\n"
         "}\n");
    const std::string design_dir = tmp.file("bench");
    const CliResult designed = run_cli(
        {"design", "--device", "path:2", "--depths", "0,2,4,6", "--circuits", "5",
         "--xi", "0.5", "--seed", "1", "--out", design_dir, "--config", config_path});
    REQUIRE(designed.code == 0);
    const mrb::MrbDesign design =
        mrb::read_design_file(fs::path(design_dir) / "design.json");
    CHECK(design.depths == std::vector<uint32_t>{0, 2});
    CHECK(design.circuits_per_depth == 2);
    CHECK(design.master_seed == 0x77);
    CHECK(fs::exists(fs::path(design_dir) / "circuits" / "d0002_k001.mrb"));
    CHECK_FALSE(fs::exists(fs::path(design_dir) / "circuits" / "d0004_k000.mrb"));

    // Unknown config keys are usage errors.
    spit(tmp.file("bad.config.json"), "{\"depth\": [0, 2]}");
    CHECK(run_cli({"design", "--seed", "1", "--out", tmp.file("z"), "--config",
                   tmp.file("bad.config.json")})
              .code == mrb::cli::kExitUsage);
}

TEST_CASE("cli: validate runs the oracle suite") {
    const CliResult validated = run_cli({"validate", "--seed", "0x5EED"});
    CHECK(validated.code == 0);
    CHECK(validated.out.find("checks passed") != std::string::npos);
    CHECK(validated.out.find("FAIL") == std::string::npos);
    CHECK(run_cli({"validate"}).code == mrb::cli::kExitUsage);
}
