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

#include "ristwin/evaluate.hpp"
#include "ristwin/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace ristwin
{
namespace
{

constexpr double infinity = std::numeric_limits<double>::infinity();

class Jitter
{
  public:
    Jitter(double sigma, std::uint64_t seed) : engine_(seed), normal_(0.0, 1.0), sigma_(sigma) {}

    double scalar(double scale) { return normal_(engine_) * scale; }
    Vec3 offset() { return {scalar(sigma_), scalar(sigma_), scalar(sigma_)}; }

    // Random unit axis and a N(0, (sigma / radius)^2) angle, so points at
    // `radius` from the pivot move by about sigma.
    std::pair<Vec3, double> rotation(double radius)
    {
        Vec3 axis{scalar(1.0), scalar(1.0), scalar(1.0)};
        const double angle = scalar(radius > 0.0 ? sigma_ / radius : 0.0);
        axis = normalized(axis);
        if (norm(axis) == 0.0)
            return {{0.0, 0.0, 1.0}, 0.0};
        return {axis, angle};
    }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
    double sigma_;
};

} // namespace

double received_power(const ChannelSnapshot &snapshot, const PhaseConfig &config)
{
    return std::norm(apply_config(snapshot, config));
}

double power_db(double power_linear) { return power_linear > 0.0 ? 10.0 * std::log10(power_linear) : -infinity; }

double rsrp_db(const ChannelSnapshot &snapshot, const PhaseConfig &config, double tx_power_dbm)
{
    return tx_power_dbm + power_db(received_power(snapshot, config));
}

double gain_db(double power, double baseline_power)
{
    if (baseline_power > 0.0 && power > 0.0)
        return 10.0 * std::log10(power / baseline_power);
    if (power > 0.0)
        return infinity;
    if (baseline_power > 0.0)
        return -infinity;
    return 0.0;
}

double rsrp_gain_db(const ChannelSnapshot &snapshot, const PhaseConfig &config)
{
    return gain_db(received_power(snapshot, config), received_power(snapshot, all_zero(snapshot.element_count())));
}

Vec3 GridSpec::cell_center(int ix, int iy) const
{
    return origin + x_axis * (ix * cell_size) + y_axis * (iy * cell_size);
}

GridSpec default_grid(const Scene &scene, int nx, int ny, std::optional<double> cell_size)
{
    if (nx < 1 || ny < 1)
        throw ArgumentError("grid needs at least one cell per axis");
    GridSpec g;
    g.nx = nx;
    g.ny = ny;
    g.cell_size = cell_size.value_or(0.5 * scene.deployment.wavelength());
    if (!(g.cell_size > 0.0))
        throw ArgumentError("grid cell size must be positive");
    g.origin = scene.deployment.rx.position - g.x_axis * (0.5 * (nx - 1) * g.cell_size) -
               g.y_axis * (0.5 * (ny - 1) * g.cell_size);
    return g;
}

std::pair<int, int> CoverageMap::nearest_cell(const Vec3 &p) const
{
    const Vec3 rel = p - grid.origin;
    const auto ix = static_cast<int>(std::lround(dot(rel, grid.x_axis) / grid.cell_size));
    const auto iy = static_cast<int>(std::lround(dot(rel, grid.y_axis) / grid.cell_size));
    return {std::clamp(ix, 0, grid.nx - 1), std::clamp(iy, 0, grid.ny - 1)};
}

CoverageMap coverage_map(const Scene &scene, const PhaseConfig &config, const GridSpec &grid,
                         const ChannelOptions &options, int threads)
{
    if (grid.nx < 1 || grid.ny < 1 || !(grid.cell_size > 0.0))
        throw ArgumentError("invalid coverage grid");
    if (config.size() != scene.deployment.ris.element_count())
        throw DimensionError("configuration has " + std::to_string(config.size()) + " elements, the RIS panel has " +
                             std::to_string(scene.deployment.ris.element_count()));

    CoverageMap map;
    map.grid = grid;
    const auto cells = static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny);
    map.rsrp_db.assign(cells, -infinity);
    parallel_for(cells, threads, [&](std::size_t k) {
        const int ix = static_cast<int>(k % grid.nx);
        const int iy = static_cast<int>(k / grid.nx);
        const auto snapshot = channel_snapshot(with_receiver(scene, grid.cell_center(ix, iy)), options);
        map.rsrp_db[k] = rsrp_db(snapshot, config, scene.deployment.tx_power_dbm);
    });
    return map;
}

CoverageMap coverage_difference(const CoverageMap &a, const CoverageMap &b)
{
    if (a.grid.nx != b.grid.nx || a.grid.ny != b.grid.ny)
        throw DimensionError("coverage maps have different grid shapes");
    CoverageMap out;
    out.grid = a.grid;
    out.rsrp_db.resize(a.rsrp_db.size());
    for (std::size_t k = 0; k < a.rsrp_db.size(); ++k)
        out.rsrp_db[k] = b.rsrp_db[k] - a.rsrp_db[k];
    return out;
}

Scene perturb_scene(const Scene &scene, const PerturbationSpec &spec)
{
    if (!(spec.geometry_sigma >= 0.0) || !std::isfinite(spec.geometry_sigma))
        throw ArgumentError("perturbation sigma must be a finite non-negative length");

    Scene out = scene;
    for (auto &m : out.materials)
        m.reflection_coefficient = std::clamp(m.reflection_coefficient + spec.reflection_delta, 0.0, 1.0);
    auto &panel = out.deployment.ris;
    panel.pattern_exponent = std::max(0.0, panel.pattern_exponent + spec.pattern_exponent_delta);

    if (spec.geometry_sigma == 0.0)
        return out;

    Jitter jitter(spec.geometry_sigma, spec.seed);
    for (auto &f : out.facets)
    {
        const Vec3 pivot = centroid(f.vertices);
        double radius = 0.0;
        for (const auto &v : f.vertices)
            radius = std::max(radius, distance(v, pivot));
        const Vec3 shift = jitter.offset();
        const auto [axis, angle] = jitter.rotation(radius);
        for (auto &v : f.vertices)
            v = pivot + shift + rotate(v - pivot, axis, angle);
    }

    auto &d = out.deployment;
    d.tx.position += jitter.offset();
    d.rx.position += jitter.offset();
    panel.center += jitter.offset();
    const double panel_radius = 0.5 * panel.element_spacing * std::hypot(panel.rows, panel.cols);
    const auto [axis, angle] = jitter.rotation(panel_radius);
    const Vec3 normal = normalized(rotate(panel.normal, axis, angle));
    const Vec3 up = rotate(panel.up, axis, angle);
    panel.normal = normal;
    panel.up = normalized(up - normal * dot(up, normal));
    return out;
}

std::vector<Vec3> perturb_points(const std::vector<Vec3> &points, double sigma, std::uint64_t seed)
{
    if (!(sigma >= 0.0))
        throw ArgumentError("perturbation sigma must be non-negative");
    if (sigma == 0.0)
        return points;
    Jitter jitter(sigma, seed);
    std::vector<Vec3> out;
    out.reserve(points.size());
    for (const auto &p : points)
        out.push_back(p + jitter.offset());
    return out;
}

TwinGapReport twin_gap_experiment(const Scene &dt_scene, const Scene &phys_scene, const std::vector<Vec3> &rx_list,
                                  int max_passes, const ChannelOptions &options, const std::vector<Vec3> *phys_rx)
{
    const std::size_t n = dt_scene.deployment.ris.element_count();
    if (phys_scene.deployment.ris.element_count() != n)
        throw DimensionError("twin and physical scenes have RIS panels of different size");
    if (rx_list.empty())
        throw ArgumentError("twin_gap_experiment needs at least one receiver");
    if (phys_rx && phys_rx->size() != rx_list.size())
        throw DimensionError("physical receiver list does not match the receiver list");

    TwinGapReport report;
    const auto baseline = all_zero(n);
    for (std::size_t k = 0; k < rx_list.size(); ++k)
    {
        const auto dt_snapshot = channel_snapshot(with_receiver(dt_scene, rx_list[k]), options);
        const auto phys_snapshot =
            channel_snapshot(with_receiver(phys_scene, phys_rx ? (*phys_rx)[k] : rx_list[k]), options);

        const auto dpo = dt_dpo(dt_snapshot, max_passes);
        const auto cir = dt_cir(dt_snapshot);
        const auto benchmark = iterative_search(phys_snapshot, baseline, max_passes);

        const double p0 = received_power(phys_snapshot, baseline);
        const double p_dpo = received_power(phys_snapshot, dpo.configs[best_candidate(phys_snapshot, dpo)]);
        const double p_cir = received_power(phys_snapshot, cir.configs[best_candidate(phys_snapshot, cir)]);

        TwinGapRecord r;
        r.rx_id = k;
        r.gain_db_benchmark = gain_db(benchmark.best_power, p0);
        r.gain_db_dt_dpo = gain_db(p_dpo, p0);
        r.gain_db_dt_cir = gain_db(p_cir, p0);
        r.ops_benchmark = benchmark_operation_count(n);
        r.ops_dt_dpo = candidate_operation_count(dpo);
        r.ops_dt_cir = candidate_operation_count(cir);
        r.benchmark_evaluations = benchmark.evaluations;
        report.records.push_back(r);
    }
    return report;
}

} // namespace ristwin
