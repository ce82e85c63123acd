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

#pragma once

#include "ristwin/channel.hpp"
#include "ristwin/optimize.hpp"
#include "ristwin/ris.hpp"
#include "ristwin/scene.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ristwin
{

/// |apply_config(snapshot, config)|^2.
double received_power(const ChannelSnapshot &snapshot, const PhaseConfig &config);

/// Linear power to dB; -inf for zero power.
double power_db(double power_linear);

/// tx_power_dbm + 10 log10(received power); -inf for zero power.
double rsrp_db(const ChannelSnapshot &snapshot, const PhaseConfig &config, double tx_power_dbm);

/// Power of `config` relative to the all-zero baseline [dB].
/// +inf when only the baseline is zero, -inf when only `config` is zero and
/// 0 when both are.
double rsrp_gain_db(const ChannelSnapshot &snapshot, const PhaseConfig &config);

/// Gain between two linear powers with the same sentinel rules.
double gain_db(double power, double baseline_power);

/// Regular grid of virtual receivers. Cell (ix, iy) is centered at
/// origin + ix * cell_size * x_axis + iy * cell_size * y_axis.
struct GridSpec
{
    Vec3 origin;
    Vec3 x_axis{1.0, 0.0, 0.0};
    Vec3 y_axis{0.0, 1.0, 0.0};
    int nx = 1;
    int ny = 1;
    double cell_size = 0.0;

    Vec3 cell_center(int ix, int iy) const;
};

/// Horizontal grid at the receiver's height centered on the receiver, with a
/// half-wavelength pitch unless `cell_size` is given.
GridSpec default_grid(const Scene &scene, int nx, int ny, std::optional<double> cell_size = std::nullopt);

struct CoverageMap
{
    GridSpec grid;
    std::vector<double> rsrp_db; ///< row-major over iy, then ix; -inf for dead cells

    double at(int ix, int iy) const { return rsrp_db[static_cast<std::size_t>(iy) * grid.nx + ix]; }

    /// Cell whose center is nearest to `p`.
    std::pair<int, int> nearest_cell(const Vec3 &p) const;
};

/// RSRP of `config` at every cell center. Cells are independent and may be
/// evaluated on `threads` workers (<= 0: hardware concurrency); the result
/// is identical for every thread count.
CoverageMap coverage_map(const Scene &scene, const PhaseConfig &config, const GridSpec &grid,
                         const ChannelOptions &options = {}, int threads = 1);

/// Per-cell difference `b - a` in dB (NaN where both cells are dead).
CoverageMap coverage_difference(const CoverageMap &a, const CoverageMap &b);

/// Emulated physical twin: how the real room differs from the model.
struct PerturbationSpec
{
    double geometry_sigma = 0.0;       ///< [m] std. dev. of rigid offsets
    double pattern_exponent_delta = 0.0; ///< added to the RIS q (clamped at 0)
    double reflection_delta = 0.0;     ///< added to every reflection coefficient (clamped to [0, 1])
    std::uint64_t seed = 0;
};

/// Seeded perturbation of a scene. Facets move rigidly (translation plus a
/// small rotation about the centroid) so they stay planar and convex; Tx, Rx
/// and the RIS panel are jittered as rigid entities.
Scene perturb_scene(const Scene &scene, const PerturbationSpec &spec);

/// Jitters each point by i.i.d. N(0, sigma^2) per axis.
std::vector<Vec3> perturb_points(const std::vector<Vec3> &points, double sigma, std::uint64_t seed);

struct TwinGapRecord
{
    std::uint64_t seed = 0; ///< perturbation seed of the physical twin (set by the caller)
    std::size_t rx_id = 0;
    double gain_db_benchmark = 0.0;
    double gain_db_dt_dpo = 0.0;
    double gain_db_dt_cir = 0.0;
    std::size_t ops_benchmark = 0;
    std::size_t ops_dt_dpo = 0;
    std::size_t ops_dt_cir = 0;
    std::uint64_t benchmark_evaluations = 0; ///< evaluations the iterative search actually ran
};

struct TwinGapReport
{
    std::vector<TwinGapRecord> records;
};

/// Runs the twin-to-physical comparison for each receiver.
///
/// The twin computes DT-DPO and DT-CIR candidate sets from `dt_scene`; the
/// "physical" snapshot comes from `phys_scene`. The benchmark is the
/// iterative search run directly on the physical snapshot. Gains are relative
/// to the physical all-zero baseline. `phys_rx`, when given, holds the true
/// receiver positions (same length as `rx_list`).
TwinGapReport twin_gap_experiment(const Scene &dt_scene, const Scene &phys_scene, const std::vector<Vec3> &rx_list,
                                  int max_passes, const ChannelOptions &options = {},
                                  const std::vector<Vec3> *phys_rx = nullptr);

/// Physical operations charged to the benchmark for an N-element RIS: one
/// load-and-measure per element.
inline std::size_t benchmark_operation_count(std::size_t n) { return n; }

/// Operations needed to try a candidate set on hardware.
inline std::size_t candidate_operation_count(const CandidateSet &set) { return set.configs.size(); }

} // namespace ristwin
