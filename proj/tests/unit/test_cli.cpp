// SPDX-License-Identifier: Apache-2.0
//
// ristwin - ray-traced digital twin for 1-bit RIS phase configuration
// Copyright (C) 2026 The ristwin authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cli_support.hpp"
#include "fixtures.hpp"
#include "internal.hpp"

#include "ristwin/serialization.hpp"

#include <doctest.h>

#include <fstream>

using namespace ristwin;
using namespace ristwin::testing;
namespace fs = std::filesystem;

namespace
{

const std::string office = scene_path("office.json");

json load(const fs::path &p) { return json::parse(slurp(p)); }

// Every line of a coverage CSV has a leading column plus one per x cell.
bool rows_have_columns(const std::string &csv, std::size_t nx)
{
    std::size_t commas = 0;
    for (char c : csv)
    {
        if (c == '\n')
        {
            if (commas != nx)
                return false;
            commas = 0;
        }
        commas += c == ',';
    }
    return commas == 0;
}

} // namespace

TEST_CASE("validate")
{
    const auto ok = run_cli({"validate", "--scene", office});
    CHECK(ok.code == 0);
    CHECK(ok.out.empty());
    CHECK(ok.err.empty());

    const auto dir = scratch_dir("validate");
    auto scene = office_scene();
    scene.materials[1].reflection_coefficient = 1.2;
    {
        std::ofstream f(dir / "bad.json");
        f << serialize_scene(scene);
    }
    const auto bad = run_cli({"validate", "--scene", (dir / "bad.json").string()});
    CHECK(bad.code == 1);
    CHECK(std::count(bad.out.begin(), bad.out.end(), '\n') == 1);
    CHECK(bad.out.find("material-range") != std::string::npos);

    const std::string missing = (dir / "missing.json").string();
    const auto gone = run_cli({"validate", "--scene", missing});
    CHECK(gone.code == 2);
    CHECK(gone.err.find(missing) != std::string::npos);

    {
        std::ofstream f(dir / "broken.json");
        f << "{\"materials\": [";
    }
    CHECK(run_cli({"validate", "--scene", (dir / "broken.json").string()}).code == 1);
}

TEST_CASE("optimize: DT-CIR writes one configuration")
{
    const auto dir = scratch_dir("cir");
    const auto r = run_cli({"optimize", "--scene", office, "--method", "dt-cir", "--out", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir / "config-0.json"));
    CHECK_FALSE(fs::exists(dir / "config-1.json"));
    const auto report = load(dir / "report.json");
    CHECK(report["operations"] == 1);
    CHECK(report["candidates"]["method"] == "dt_cir");
    const auto grid = slurp(dir / "config-0.txt");
    CHECK(std::count(grid.begin(), grid.end(), '\n') == 8);
    CHECK(grid.find('\n') == 16);
    const auto manifest = load(dir / "manifest.json");
    CHECK(manifest["command"] == "optimize");
    CHECK(manifest["scene_path"] == office);
    CHECK(manifest["parameters"]["method"] == "dt-cir");
    CHECK(manifest["parameters"]["max-passes"] == 10);
    CHECK(manifest["parameters"]["max-bounces"] == 2);
    CHECK(manifest["parameters"]["pattern-q"] == 1.0);
    CHECK(manifest["tool_version"] == cli::tool_version());
    CHECK(manifest["timestamp"].get<std::string>().size() == 20);
}

TEST_CASE("optimize: DT-DPO writes a configuration and its inverse")
{
    const auto dir = scratch_dir("dpo");
    REQUIRE(run_cli({"optimize", "--scene", office, "--method", "dt-dpo", "--out", dir.string()}).code == 0);
    const auto a = config_from_json(load(dir / "config-0.json"));
    const auto b = config_from_json(load(dir / "config-1.json"));
    CHECK(b == invert(a));
    CHECK(load(dir / "report.json")["operations"] == 2);

    const auto inv = scratch_dir("dpo-inv");
    REQUIRE(run_cli({"optimize", "--scene", office, "--method", "dt-dpo", "--invert-polarity", "--out",
                     inv.string()})
                .code == 0);
    CHECK(config_from_json(load(inv / "config-0.json")) == b);
    CHECK(load(inv / "report.json")["polarity"] == "inverted");
}

TEST_CASE("optimize: exhaustive refuses the 128-element panel")
{
    const auto dir = scratch_dir("guard") / "run";
    const auto r = run_cli({"optimize", "--scene", office, "--method", "exhaustive", "--out", dir.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("2^128") != std::string::npos);
    CHECK_FALSE(fs::exists(dir));
}

TEST_CASE("optimize: search methods and saved snapshots")
{
    const auto small = scene_path("free_space_small.json");
    const auto a = scratch_dir("snap-a");
    REQUIRE(run_cli({"optimize", "--scene", small, "--method", "exhaustive", "--snapshot-out", "--out", a.string()})
                .code == 0);
    CHECK(load(a / "report.json")["search"]["evaluations"] == 256);

    const auto b = scratch_dir("snap-b");
    REQUIRE(run_cli({"optimize", "--snapshot-in", (a / "snapshot.json").string(), "--method", "exhaustive", "--out",
                     b.string()})
                .code == 0);
    CHECK(slurp(a / "config-0.json") == slurp(b / "config-0.json"));
    CHECK(slurp(b / "config-0.txt").find('\n') == 8); // 1 x N without a scene

    for (const char *method : {"random", "iterative"})
    {
        const auto d = scratch_dir(method);
        CHECK(run_cli({"optimize", "--scene", small, "--method", method, "--out", d.string()}).code == 0);
        CHECK(load(d / "report.json")["search"]["method"] == method);
    }
    CHECK(run_cli({"optimize", "--scene", small, "--method", "annealing"}).code == 1);
    CHECK(run_cli({"optimize", "--method", "dt-cir"}).code == 1);
}

TEST_CASE("coverage")
{
    const auto opt = scratch_dir("cov-opt");
    REQUIRE(run_cli({"optimize", "--scene", office, "--method", "dt-dpo", "--out", opt.string()}).code == 0);
    const std::size_t best = load(opt / "report.json")["best_index"];
    const auto best_config = (opt / ("config-" + std::to_string(best) + ".json")).string();

    const auto a = scratch_dir("cov-a");
    REQUIRE(run_cli({"coverage", "--scene", office, "--all-zero", "--compare", best_config, "--grid", "7,5",
                     "--ppm", "--out", a.string()})
                .code == 0);
    const auto csv = slurp(a / "map.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    CHECK(rows_have_columns(csv, 7));
    const auto summary = load(a / "summary.json");
    CHECK(summary["rx_cell"] == json::array({3, 2}));
    CHECK(summary["rx_difference_db"].get<double>() >= 0.0);
    CHECK(fs::exists(a / "map.ppm"));
    CHECK(fs::exists(a / "difference.csv"));

    const auto b = scratch_dir("cov-b");
    REQUIRE(run_cli({"coverage", "--scene", office, "--all-zero", "--compare", best_config, "--grid", "7,5",
                     "--ppm", "--threads", "3", "--out", b.string()})
                .code == 0);
    CHECK(output_files(a) == output_files(b));

    // A configuration for a different panel size is rejected.
    const auto small = scratch_dir("cov-small");
    REQUIRE(run_cli({"optimize", "--scene", scene_path("free_space_small.json"), "--method", "dt-cir", "--out",
                     small.string()})
                .code == 0);
    CHECK(run_cli({"coverage", "--scene", office, "--config", (small / "config-0.json").string(), "--grid", "2,2"})
              .code == 1);
    CHECK(run_cli({"coverage", "--scene", office, "--grid", "2,2"}).code == 1);
    CHECK(run_cli({"coverage", "--scene", office, "--all-zero", "--grid", "2,x"}).code == 1);
    CHECK(run_cli({"coverage", "--scene", office, "--config", "/nonexistent/config.json"}).code == 2);
}

TEST_CASE("benchmark")
{
    const auto rx = scene_path("office_receivers.json");
    const auto zero = scratch_dir("bench-zero");
    REQUIRE(run_cli({"benchmark", "--scene", office, "--rx-file", rx, "--sigma", "0", "--seeds", "1", "--out",
                     zero.string()})
                .code == 0);
    const auto records = load(zero / "twin_gap.json")["records"];
    REQUIRE(records.size() == 4);
    for (const auto &r : records)
    {
        CHECK(r["gain_db_dt_dpo"] == r["gain_db_benchmark"]);
        CHECK(r["ops_benchmark"] == 128);
        CHECK(r["ops_dt_dpo"] == 2);
        CHECK(r["ops_dt_cir"] == 1);
    }
    const auto csv = slurp(zero / "twin_gap.csv");
    CHECK(csv.rfind("seed,rx_id,method,gain_db,ops\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 12);

    const auto noisy = scratch_dir("bench-noisy");
    const auto r = run_cli({"benchmark", "--scene", office, "--rx-file", rx, "--sigma", "lambda/20", "--seeds", "3",
                            "--seed", "10", "--out", noisy.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("Rx3") != std::string::npos);
    const auto noisy_records = load(noisy / "twin_gap.json")["records"];
    CHECK(noisy_records.size() == 12);
    CHECK(noisy_records[0]["seed"] == 10);
    CHECK(noisy_records[11]["seed"] == 12);
    const auto manifest = load(noisy / "manifest.json");
    CHECK(manifest["parameters"]["rx"].size() == 4);
    CHECK(std::stod(manifest["parameters"]["sigma"].get<std::string>()) ==
          doctest::Approx(wavelength(3.62e9) / 20).epsilon(1e-15));

    CHECK(run_cli({"benchmark", "--scene", office, "--sigma", "lambda*2x"}).code == 1);
    CHECK(run_cli({"benchmark", "--scene", office, "--seeds", "0"}).code == 1);
}

TEST_CASE("replay reproduces outputs for any thread count")
{
    const auto first = scratch_dir("replay-first");
    REQUIRE(run_cli({"benchmark", "--scene", office, "--rx", "4.9185,2.7909,1.5", "--rx", "5.6082,2.1285,1.5",
                     "--sigma", "lambda/20", "--seeds", "4", "--threads", "1", "--out", first.string()})
                .code == 0);
    for (const char *threads : {"1", "4"})
    {
        const auto again = scratch_dir("replay-again");
        REQUIRE(run_cli({"replay", "--manifest", (first / "manifest.json").string(), "--threads", threads, "--out",
                         again.string()})
                    .code == 0);
        CHECK(output_files(first) == output_files(again));
        auto m1 = load(first / "manifest.json"), m2 = load(again / "manifest.json");
        m1.erase("timestamp");
        m2.erase("timestamp");
        m1["parameters"].erase("threads");
        m2["parameters"].erase("threads");
        CHECK(m1 == m2);
    }
    CHECK(run_cli({"replay", "--manifest", "/nonexistent/manifest.json"}).code == 2);
}

TEST_CASE("default output directory")
{
    const auto cwd = fs::current_path();
    const auto dir = scratch_dir("default-out");
    fs::current_path(dir);
    const auto r = run_cli({"optimize", "--scene", office, "--method", "dt-cir"});
    fs::current_path(cwd);
    REQUIRE(r.code == 0);
    std::vector<fs::path> runs;
    for (const auto &e : fs::directory_iterator(dir / "runs"))
        runs.push_back(e.path());
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].filename().string().rfind("optimize-", 0) == 0);
    CHECK(fs::exists(runs[0] / "manifest.json"));
}

TEST_CASE("argument parsing helpers")
{
    const double lambda = wavelength(3.62e9);
    CHECK(cli::parse_length("lambda/20", lambda) == lambda / 20);
    CHECK(cli::parse_length("\xce\xbb/20", lambda) == lambda / 20);
    CHECK(cli::parse_length("0.5*lambda", lambda) == 0.5 * lambda);
    CHECK(cli::parse_length("0.004", lambda) == 0.004);
    CHECK_THROWS_AS(cli::parse_length("lambda20", lambda), ArgumentError);
    CHECK(cli::parse_point("1, 2.5,-3") == Vec3{1.0, 2.5, -3.0});
    CHECK_THROWS_AS(cli::parse_point("1,2"), ArgumentError);
    CHECK(cli::round_trip(0.1) == "0.1");

    CHECK(run_cli({"--version"}).code == 0);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"optimize", "--bogus"}).code == 1);
}
