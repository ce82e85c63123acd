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

#include "ristwin_cli/cli.hpp"
#include "internal.hpp"

#include <CLI11.hpp>

#include <ios>
#include <ostream>

namespace ristwin::cli
{
namespace
{

void add_model_flags(CLI::App *cmd, ModelFlags &flags, bool scene_required = true)
{
    auto *scene = cmd->add_option("--scene", flags.scene, "Scene document (JSON)");
    if (scene_required)
        scene->required();
    cmd->add_option("--max-bounces", flags.max_bounces, "Reflection order of the direct link")->capture_default_str();
    cmd->add_option("--pattern-q", flags.pattern_q, "Override the element pattern exponent q of the scene");
    cmd->add_flag("--invert-polarity", flags.invert_polarity, "Exchange bit 0 and 1 in config files (hardware polarity)");
    cmd->add_option("--threads", flags.threads, "Worker threads, 0 = all cores")->capture_default_str();
    cmd->add_option("--out", flags.out, "Output directory (default runs/<command>-<timestamp>)");
}

// Rebuilds the argument list of a recorded run.
std::vector<std::string> replay_arguments(const json &manifest, const std::optional<std::string> &out,
                                          const std::optional<int> &threads)
{
    if (!manifest.is_object() || !manifest.contains("command") || !manifest["command"].is_string() ||
        !manifest.contains("parameters") || !manifest["parameters"].is_object())
        throw ParseError("manifest needs 'command' and 'parameters'");
    std::vector<std::string> args{manifest["command"].get<std::string>()};
    if (args[0] == "replay")
        throw ParseError("a manifest cannot replay another replay");
    const std::string scene = manifest.value("scene_path", std::string());
    if (!scene.empty())
        args.insert(args.end(), {"--scene", scene});

    auto text = [](const json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto &[key, value] : manifest["parameters"].items())
    {
        if (key == "threads" && threads)
            continue;
        if (value.is_null() || (value.is_boolean() && !value.get<bool>()))
            continue;
        if (value.is_boolean())
            args.push_back("--" + key);
        else if (value.is_array())
            for (const auto &v : value)
                args.insert(args.end(), {"--" + key, text(v)});
        else
            args.insert(args.end(), {"--" + key, text(value)});
    }
    // Commands without a thread count (validate) ignore the override.
    if (threads && manifest["parameters"].contains("threads"))
        args.insert(args.end(), {"--threads", std::to_string(*threads)});
    if (out)
        args.insert(args.end(), {"--out", *out});
    return args;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"ristwin: ray-traced digital twin for 1-bit RIS phase configuration", "ristwin"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    std::string validate_scene_path;
    std::optional<std::string> validate_out;
    auto *validate = app.add_subcommand("validate", "Check a scene document; prints one line per violation");
    validate->add_option("--scene", validate_scene_path, "Scene document (JSON)")->required();
    validate->add_option("--out", validate_out, "Also write the listing and a manifest to this directory");

    OptimizeFlags opt;
    auto *optimize = app.add_subcommand("optimize", "Compute RIS configurations from the twin's channel");
    add_model_flags(optimize, opt.model, false);
    optimize->add_option("--method", opt.method, "dt-dpo | dt-cir | exhaustive | random | iterative")
        ->capture_default_str();
    optimize->add_option("--max-passes", opt.max_passes, "Sweep limit of the iterative search")->capture_default_str();
    optimize->add_option("--snapshot-in", opt.snapshot_in, "Use a saved channel snapshot instead of ray tracing");
    optimize->add_flag("--snapshot-out", opt.snapshot_out, "Also write the channel snapshot (snapshot.json)");
    optimize->add_option("--trials", opt.trials, "Random search trials")->capture_default_str();
    optimize->add_option("--seed", opt.seed, "Random search seed")->capture_default_str();

    CoverageFlags cov;
    auto *coverage = app.add_subcommand("coverage", "RSRP map over a grid of virtual receivers");
    add_model_flags(coverage, cov.model);
    coverage->add_option("--config", cov.config, "Configuration file (from optimize)");
    coverage->add_flag("--all-zero", cov.all_zero, "Use the all-zero baseline configuration");
    coverage->add_option("--compare", cov.compare, "Second configuration; also writes the per-cell difference");
    coverage->add_option("--grid", cov.grid, "nx,ny[,cell] (cell defaults to half a wavelength)")
        ->capture_default_str();
    coverage->add_option("--grid-center", cov.grid_center, "x,y,z of the grid center (default: the receiver)");
    coverage->add_flag("--ppm", cov.ppm, "Also write PPM heatmaps");
    coverage->add_option("--ppm-floor", cov.ppm_floor, "Heatmap floor [dBm]")->capture_default_str();
    coverage->add_option("--ppm-ceil", cov.ppm_ceil, "Heatmap ceiling [dBm]")->capture_default_str();

    BenchmarkFlags bench;
    auto *benchmark = app.add_subcommand("benchmark", "Twin-gap experiment against perturbed physical twins");
    add_model_flags(benchmark, bench.model);
    benchmark->add_option("--rx", bench.rx, "Receiver position x,y,z (repeatable)")->allow_extra_args(false);
    benchmark->add_option("--rx-file", bench.rx_file, "JSON file {\"receivers\": [[x, y, z], ...]}");
    benchmark->add_option("--sigma", bench.sigma, "Geometry jitter: metres or e.g. lambda/20")->capture_default_str();
    benchmark->add_option("--pattern-delta", bench.pattern_delta, "Added to the physical q")->capture_default_str();
    benchmark->add_option("--reflection-delta", bench.reflection_delta, "Added to every reflection coefficient")
        ->capture_default_str();
    benchmark->add_option("--seeds", bench.seeds, "Number of physical twins")->capture_default_str();
    benchmark->add_option("--seed", bench.seed, "First perturbation seed")->capture_default_str();
    benchmark->add_option("--max-passes", bench.max_passes, "Sweep limit of the iterative search")
        ->capture_default_str();

    std::string manifest_path;
    std::optional<std::string> replay_out;
    std::optional<int> replay_threads;
    auto *replay = app.add_subcommand("replay", "Rerun a command from its manifest.json");
    replay->add_option("--manifest", manifest_path, "manifest.json of an earlier run")->required();
    replay->add_option("--out", replay_out, "Output directory of the rerun");
    replay->add_option("--threads", replay_threads, "Override the recorded thread count");

    std::vector<const char *> argv{"ristwin"};
    for (const auto &a : args)
        argv.push_back(a.c_str());

    try
    {
        try
        {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::Success &e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError &e)
        {
            app.exit(e, out, err);
            return exit_failure;
        }

        if (*validate)
            return cmd_validate(validate_scene_path, validate_out, out);
        if (*optimize)
            return cmd_optimize(opt, out);
        if (*coverage)
            return cmd_coverage(cov, out);
        if (*benchmark)
            return cmd_benchmark(bench, out);
        return run(replay_arguments(read_json(manifest_path), replay_out, replay_threads), out, err);
    }
    catch (const IoError &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_io;
    }
    catch (const std::ios_base::failure &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_io;
    }
    catch (const ValidationError &e)
    {
        for (const auto &v : e.violations())
            err << v.rule << ": " << v.message << "\n";
        return exit_failure;
    }
    catch (const Error &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

} // namespace ristwin::cli
