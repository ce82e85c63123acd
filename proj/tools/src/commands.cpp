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

#include "internal.hpp"

#include "ristwin/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ristwin::cli
{
namespace
{

Scene load_model(const ModelFlags &flags)
{
    Scene scene = load_scene_file(flags.scene);
    if (flags.pattern_q)
    {
        if (!(*flags.pattern_q >= 0.0) || !std::isfinite(*flags.pattern_q))
            throw ArgumentError("--pattern-q must be a finite non-negative number");
        scene.deployment.ris.pattern_exponent = *flags.pattern_q;
    }
    if (flags.max_bounces < 0)
        throw ArgumentError("--max-bounces must be >= 0");
    return scene;
}

// Flags common to every scene command, with resolved values.
json model_parameters(const ModelFlags &flags, const Scene *scene)
{
    json p;
    p["max-bounces"] = flags.max_bounces;
    if (scene)
        p["pattern-q"] = scene->deployment.ris.pattern_exponent;
    else if (flags.pattern_q)
        p["pattern-q"] = *flags.pattern_q;
    p["invert-polarity"] = flags.invert_polarity;
    p["threads"] = resolve_threads(flags.threads);
    return p;
}

// Hardware polarity is applied only where bits leave or enter the tool.
PhaseConfig to_hardware(const PhaseConfig &c, bool invert_polarity)
{
    return invert_polarity && c.is_one_bit() ? invert(c) : c;
}

PhaseConfig load_config(const std::string &path, bool invert_polarity)
{
    return to_hardware(config_from_json(read_json(path)), invert_polarity);
}

std::string fixed(double v, int decimals) { return format_fixed(v, decimals); }

double median(std::vector<double> v)
{
    if (v.empty())
        return std::nan("");
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<double> split_numbers(const std::string &text, const char *what)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        std::size_t used = 0;
        double v = 0.0;
        try
        {
            v = std::stod(item, &used);
        }
        catch (const std::exception &)
        {
            used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
            throw ArgumentError(std::string(what) + ": cannot parse '" + item + "' as a number");
        out.push_back(v);
    }
    return out;
}

std::string point_text(const Vec3 &p)
{
    return round_trip(p.x) + "," + round_trip(p.y) + "," + round_trip(p.z);
}

json vec_json(const Vec3 &p) { return json::array({p.x, p.y, p.z}); }

} // namespace

double parse_length(const std::string &text, double wavelength_m)
{
    auto strip = [](std::string s) {
        s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
        return s;
    };
    std::string s = strip(text);
    for (const std::string name : {"\xce\xbb", "lambda"})
    {
        const auto at = s.find(name);
        if (at == std::string::npos)
            continue;
        const std::string before = s.substr(0, at), after = s.substr(at + name.size());
        double factor = 1.0;
        if (!before.empty())
        {
            if (before.back() != '*')
                throw ArgumentError("cannot parse length '" + text + "'");
            factor *= split_numbers(before.substr(0, before.size() - 1), "length").at(0);
        }
        if (!after.empty())
        {
            if (after.front() != '/')
                throw ArgumentError("cannot parse length '" + text + "'");
            factor /= split_numbers(after.substr(1), "length").at(0);
        }
        return factor * wavelength_m;
    }
    const auto v = split_numbers(s, "length");
    if (v.size() != 1)
        throw ArgumentError("cannot parse length '" + text + "'");
    return v[0];
}

Vec3 parse_point(const std::string &text)
{
    const auto v = split_numbers(text, "point");
    if (v.size() != 3)
        throw ArgumentError("expected a point 'x,y,z', got '" + text + "'");
    return {v[0], v[1], v[2]};
}

int cmd_validate(const std::string &scene_path, const std::optional<std::string> &out, std::ostream &os)
{
    std::vector<Violation> violations;
    try
    {
        const std::string text = read_text(scene_path);
        load_scene(text);
    }
    catch (const ValidationError &e)
    {
        violations = e.violations();
    }
    std::string listing;
    for (const auto &v : violations)
        listing += v.rule + ": " + v.message + "\n";
    os << listing;
    if (out)
    {
        const RunDirectory dir("validate", out);
        dir.write("violations.txt", listing);
        dir.write_manifest("validate", scene_path, json::object());
    }
    return violations.empty() ? exit_ok : exit_failure;
}

int cmd_optimize(const OptimizeFlags &flags, std::ostream &os)
{
    static const std::vector<std::string> methods{"dt-dpo", "dt-cir", "exhaustive", "random", "iterative"};
    if (std::find(methods.begin(), methods.end(), flags.method) == methods.end())
        throw ArgumentError("unknown --method '" + flags.method + "'");
    if (flags.max_passes < 1)
        throw ArgumentError("--max-passes must be >= 1");
    if (flags.model.scene.empty() && !flags.snapshot_in)
        throw ArgumentError("optimize needs --scene or --snapshot-in");

    std::optional<Scene> scene;
    if (!flags.model.scene.empty())
        scene = load_model(flags.model);

    ChannelSnapshot snapshot;
    if (flags.snapshot_in)
        snapshot = snapshot_from_json(read_json(*flags.snapshot_in));
    else
        snapshot = channel_snapshot(*scene, {flags.model.max_bounces});

    const std::size_t n = snapshot.element_count();
    if (n == 0)
        throw ArgumentError("the snapshot has no RIS elements");
    int rows = 1, cols = static_cast<int>(n);
    if (scene)
    {
        if (scene->deployment.ris.element_count() != n)
            throw DimensionError("snapshot has " + std::to_string(n) + " elements, the scene's panel has " +
                                 std::to_string(scene->deployment.ris.element_count()));
        rows = scene->deployment.ris.rows;
        cols = scene->deployment.ris.cols;
    }

    json params;
    params["method"] = flags.method;
    params["max-passes"] = flags.max_passes;
    params.update(model_parameters(flags.model, scene ? &*scene : nullptr));
    params["snapshot-in"] = flags.snapshot_in ? json(*flags.snapshot_in) : json(nullptr);
    params["snapshot-out"] = flags.snapshot_out;
    params["trials"] = flags.trials;
    params["seed"] = flags.seed;

    // Search first: a guard refusal must not leave an output directory behind.
    std::vector<PhaseConfig> configs;
    json result;
    std::size_t best_index = 0;
    if (flags.method == "dt-dpo" || flags.method == "dt-cir")
    {
        const auto set = flags.method == "dt-dpo" ? dt_dpo(snapshot, flags.max_passes) : dt_cir(snapshot);
        configs = set.configs;
        best_index = best_candidate(snapshot, set);
        result["candidates"] = candidate_set_to_json({[&] {
                                                          std::vector<PhaseConfig> hw;
                                                          for (const auto &c : set.configs)
                                                              hw.push_back(to_hardware(c, flags.model.invert_polarity));
                                                          return hw;
                                                      }(),
                                                      set.method, set.source_note});
        result["operations"] = candidate_operation_count(set);
    }
    else
    {
        SearchReport report;
        if (flags.method == "exhaustive")
            report = exhaustive_search(snapshot, flags.model.threads);
        else if (flags.method == "random")
            report = random_search(snapshot, flags.trials, flags.seed);
        else
            report = iterative_search(snapshot, all_zero(n), flags.max_passes);
        configs = {report.best_config};
        result["search"] = search_report_to_json(report);
    }

    const double p0 = received_power(snapshot, all_zero(n));
    const double best = received_power(snapshot, configs[best_index]);
    const double gain = gain_db(best, p0);

    const RunDirectory dir("optimize", flags.model.out);
    json report;
    report["method"] = flags.method;
    report["n"] = n;
    report["rows"] = rows;
    report["cols"] = cols;
    report["polarity"] = flags.model.invert_polarity ? "inverted" : "model";
    report["config_files"] = json::array();
    for (std::size_t k = 0; k < configs.size(); ++k)
    {
        const auto hw = to_hardware(configs[k], flags.model.invert_polarity);
        const std::string stem = "config-" + std::to_string(k);
        dir.write_json(stem + ".json", config_to_json(hw));
        dir.write(stem + ".txt", bit_grid(hw, rows, cols));
        report["config_files"].push_back(stem + ".json");
    }
    report["best_index"] = best_index;
    report["all_zero_power_db"] = number_or_marker(power_db(p0));
    report["best_power_db"] = number_or_marker(power_db(best));
    report["best_gain_db"] = number_or_marker(gain);
    report.update(result);
    dir.write_json("report.json", report);
    if (flags.snapshot_out)
        dir.write_json("snapshot.json", snapshot_to_json(snapshot));
    dir.write_manifest("optimize", flags.model.scene, params);

    os << flags.method << ": best gain " << fixed(gain, 2) << " dB over all-zero";
    if (result.contains("operations"))
        os << " (" << result["operations"].get<std::size_t>() << " operation"
           << (result["operations"].get<std::size_t>() == 1 ? "" : "s") << ")";
    os << "\n" << bit_grid(to_hardware(configs[best_index], flags.model.invert_polarity), rows, cols);
    os << "wrote " << dir.path().string() << "\n";
    return exit_ok;
}

int cmd_coverage(const CoverageFlags &flags, std::ostream &os)
{
    if (flags.config && flags.all_zero)
        throw ArgumentError("use either --config or --all-zero");
    if (!flags.config && !flags.all_zero)
        throw ArgumentError("coverage needs --config or --all-zero");
    if (!(flags.ppm_ceil > flags.ppm_floor))
        throw ArgumentError("--ppm-ceil must exceed --ppm-floor");

    const Scene scene = load_model(flags.model);
    const std::size_t n = scene.deployment.ris.element_count();
    const auto g = split_numbers(flags.grid, "--grid");
    if (g.size() != 2 && g.size() != 3)
        throw ArgumentError("--grid expects nx,ny or nx,ny,cell");
    if (g[0] != std::floor(g[0]) || g[1] != std::floor(g[1]) || g[0] < 1 || g[1] < 1 || g[0] > 1e5 || g[1] > 1e5)
        throw ArgumentError("--grid cell counts must be positive integers");
    const int nx = static_cast<int>(g[0]), ny = static_cast<int>(g[1]);
    GridSpec grid = default_grid(scene, nx, ny, g.size() == 3 ? std::optional<double>(g[2]) : std::nullopt);
    Vec3 center = scene.deployment.rx.position;
    if (flags.grid_center)
    {
        center = parse_point(*flags.grid_center);
        grid = default_grid(with_receiver(scene, center), nx, ny, grid.cell_size);
    }

    const PhaseConfig config_a = flags.all_zero ? all_zero(n) : load_config(*flags.config, flags.model.invert_polarity);
    std::optional<PhaseConfig> config_b;
    if (flags.compare)
        config_b = load_config(*flags.compare, flags.model.invert_polarity);

    json params;
    params["config"] = flags.config ? json(*flags.config) : json(nullptr);
    params["all-zero"] = flags.all_zero;
    params["compare"] = flags.compare ? json(*flags.compare) : json(nullptr);
    params["grid"] = std::to_string(nx) + "," + std::to_string(ny) + "," + round_trip(grid.cell_size);
    params["grid-center"] = point_text(center);
    params["ppm"] = flags.ppm;
    params["ppm-floor"] = flags.ppm_floor;
    params["ppm-ceil"] = flags.ppm_ceil;
    params.update(model_parameters(flags.model, &scene));

    const ChannelOptions options{flags.model.max_bounces};
    const auto map_a = coverage_map(scene, config_a, grid, options, flags.model.threads);
    std::optional<CoverageMap> map_b;
    if (config_b)
        map_b = coverage_map(scene, *config_b, grid, options, flags.model.threads);

    const RunDirectory dir("coverage", flags.model.out);
    const auto [ix, iy] = map_a.nearest_cell(scene.deployment.rx.position);
    json summary;
    summary["grid"] = {{"origin", vec_json(grid.origin)},
                       {"x_axis", vec_json(grid.x_axis)},
                       {"y_axis", vec_json(grid.y_axis)},
                       {"nx", nx},
                       {"ny", ny},
                       {"cell_size", grid.cell_size}};
    summary["rx_cell"] = json::array({ix, iy});
    summary["rx_rsrp_dbm"] = number_or_marker(map_a.at(ix, iy));
    dir.write("map.csv", coverage_csv(map_a));
    if (flags.ppm)
        dir.write("map.ppm", coverage_ppm(map_a, flags.ppm_floor, flags.ppm_ceil));
    os << "rx cell (" << ix << ", " << iy << "): " << fixed(map_a.at(ix, iy), 2) << " dBm";
    if (map_b)
    {
        const auto diff = coverage_difference(map_a, *map_b);
        dir.write("compare.csv", coverage_csv(*map_b));
        dir.write("difference.csv", coverage_csv(diff));
        if (flags.ppm)
            dir.write("compare.ppm", coverage_ppm(*map_b, flags.ppm_floor, flags.ppm_ceil));
        summary["rx_rsrp_compare_dbm"] = number_or_marker(map_b->at(ix, iy));
        summary["rx_difference_db"] = number_or_marker(diff.at(ix, iy));
        os << ", compare " << fixed(map_b->at(ix, iy), 2) << " dBm, difference " << fixed(diff.at(ix, iy), 2)
           << " dB";
    }
    os << "\n";
    dir.write_json("summary.json", summary);
    dir.write_manifest("coverage", flags.model.scene, params);
    os << "wrote " << dir.path().string() << "\n";
    return exit_ok;
}

int cmd_benchmark(const BenchmarkFlags &flags, std::ostream &os)
{
    const Scene scene = load_model(flags.model);
    if (flags.seeds < 1)
        throw ArgumentError("--seeds must be >= 1");
    if (flags.max_passes < 1)
        throw ArgumentError("--max-passes must be >= 1");
    const double sigma = parse_length(flags.sigma, scene.deployment.wavelength());
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw ArgumentError("--sigma must be a finite non-negative length");

    std::vector<Vec3> receivers;
    for (const auto &r : flags.rx)
        receivers.push_back(parse_point(r));
    if (flags.rx_file)
    {
        const auto doc = read_json(*flags.rx_file);
        if (!doc.is_object() || !doc.contains("receivers") || !doc["receivers"].is_array())
            throw ParseError("'" + *flags.rx_file + "' must hold {\"receivers\": [[x, y, z], ...]}");
        for (const auto &p : doc["receivers"])
        {
            if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() || !p[2].is_number())
                throw ParseError("receiver entries must be [x, y, z]");
            receivers.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
        }
    }
    if (receivers.empty())
        receivers.push_back(scene.deployment.rx.position);

    json params;
    params["rx"] = json::array();
    for (const auto &r : receivers)
        params["rx"].push_back(point_text(r));
    params["rx-file"] = nullptr;
    params["sigma"] = round_trip(sigma);
    params["pattern-delta"] = flags.pattern_delta;
    params["reflection-delta"] = flags.reflection_delta;
    params["seeds"] = flags.seeds;
    params["seed"] = flags.seed;
    params["max-passes"] = flags.max_passes;
    params.update(model_parameters(flags.model, &scene));

    // Seeds are independent; each worker fills its own slot.
    const ChannelOptions options{flags.model.max_bounces};
    std::vector<TwinGapReport> per_seed(static_cast<std::size_t>(flags.seeds));
    parallel_for(per_seed.size(), flags.model.threads, [&](std::size_t k) {
        const std::uint64_t seed = flags.seed + k;
        const Scene phys = perturb_scene(scene, {sigma, flags.pattern_delta, flags.reflection_delta, seed});
        const auto phys_rx = perturb_points(receivers, sigma, seed ^ 0x9e3779b97f4a7c15ull);
        per_seed[k] = twin_gap_experiment(scene, phys, receivers, flags.max_passes, options, &phys_rx);
        for (auto &r : per_seed[k].records)
            r.seed = seed;
    });
    TwinGapReport report;
    for (const auto &r : per_seed)
        report.records.insert(report.records.end(), r.records.begin(), r.records.end());

    // Summary per receiver and over all records.
    json summary = json::array();
    std::ostringstream table;
    table << std::left << std::setw(8) << "rx" << std::right << std::setw(12) << "benchmark" << std::setw(12)
          << "dt_dpo" << std::setw(12) << "dt_cir" << "   ops\n";
    auto add_row = [&](const std::string &label, const std::vector<const TwinGapRecord *> &rows) {
        std::vector<double> b, d, c;
        for (const auto *r : rows)
        {
            b.push_back(r->gain_db_benchmark);
            d.push_back(r->gain_db_dt_dpo);
            c.push_back(r->gain_db_dt_cir);
        }
        const auto &first = *rows.front();
        summary.push_back({{"rx", label},
                           {"records", rows.size()},
                           {"median_gain_db_benchmark", number_or_marker(median(b))},
                           {"median_gain_db_dt_dpo", number_or_marker(median(d))},
                           {"median_gain_db_dt_cir", number_or_marker(median(c))},
                           {"ops", json::array({first.ops_benchmark, first.ops_dt_dpo, first.ops_dt_cir})}});
        table << std::left << std::setw(8) << label << std::right << std::setw(12) << fixed(median(b), 2)
              << std::setw(12) << fixed(median(d), 2) << std::setw(12) << fixed(median(c), 2) << "   "
              << first.ops_benchmark << "/" << first.ops_dt_dpo << "/" << first.ops_dt_cir << "\n";
    };
    for (std::size_t k = 0; k < receivers.size(); ++k)
    {
        std::vector<const TwinGapRecord *> rows;
        for (const auto &r : report.records)
            if (r.rx_id == k)
                rows.push_back(&r);
        add_row("Rx" + std::to_string(k), rows);
    }
    {
        std::vector<const TwinGapRecord *> rows;
        for (const auto &r : report.records)
            rows.push_back(&r);
        add_row("all", rows);
    }

    const RunDirectory dir("benchmark", flags.model.out);
    dir.write_json("twin_gap.json", twin_gap_to_json(report));
    dir.write("twin_gap.csv", twin_gap_csv(report));
    dir.write_json("summary.json", {{"sigma_m", sigma}, {"medians", summary}});
    dir.write_manifest("benchmark", flags.model.scene, params);

    os << "median RSRP gain over all-zero [dB], " << flags.seeds << " seed" << (flags.seeds == 1 ? "" : "s")
       << ", sigma " << fixed(sigma * 1e3, 3) << " mm\n"
       << table.str() << "wrote " << dir.path().string() << "\n";
    return exit_ok;
}

} // namespace ristwin::cli
