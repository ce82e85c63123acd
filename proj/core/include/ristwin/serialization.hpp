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

// JSON, CSV and PPM exchange formats.
//
// Non-finite values never appear as numbers: JSON uses the strings "+inf",
// "-inf" and "nan", CSV the same tokens unquoted.

#include "ristwin/channel.hpp"
#include "ristwin/evaluate.hpp"
#include "ristwin/optimize.hpp"
#include "ristwin/ris.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace ristwin
{

using json = nlohmann::ordered_json;

/// Finite numbers pass through; infinities and NaN become marker strings.
json number_or_marker(double value);
/// Inverse of number_or_marker. Throws ParseError for anything else.
double number_from_marker(const json &j);

/// {h_d: [re, im], h: [[re, im]...], g: [[re, im]...], frequency_hz, n}
json snapshot_to_json(const ChannelSnapshot &snapshot);
ChannelSnapshot snapshot_from_json(const json &j);

/// {n, quantization, bits} for one-bit configs, {n, quantization, phases}
/// for continuous ones.
json config_to_json(const PhaseConfig &config);
PhaseConfig config_from_json(const json &j);

json candidate_set_to_json(const CandidateSet &set);

/// {method, n, best_bits, best_power_linear, best_power_db, evaluations,
///  passes?, trace?}
json search_report_to_json(const SearchReport &report);

json twin_gap_to_json(const TwinGapReport &report);

/// CSV with one row per (record, method): seed,rx_id,method,gain_db,ops
std::string twin_gap_csv(const TwinGapReport &report);

/// Header row of x coordinates, leading column of y coordinates, values in
/// dB with 4 decimals. Coordinates are projections of the cell centers onto
/// the grid axes.
std::string coverage_csv(const CoverageMap &map);

/// Binary PPM (P6) heatmap, linear blue->red ramp between floor and ceil dB.
/// Row 0 of the image is the largest iy. Dead cells are black.
std::string coverage_ppm(const CoverageMap &map, double floor_db, double ceil_db);

/// Fixed-point text with `decimals` digits or the marker token.
std::string format_fixed(double value, int decimals);

} // namespace ristwin
