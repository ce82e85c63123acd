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

// Shared plumbing of the command implementations.

#include "ristwin/serialization.hpp"
#include "ristwin_cli/cli.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ristwin::cli
{

/// Unreadable input or unwritable output; maps to exit code 2.
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string &path);
json read_json(const std::string &path);

/// Shortest text that parses back to the same double.
std::string round_trip(double value);

/// Output directory of one invocation: `out` verbatim when given, otherwise
/// runs/<command>-<UTC timestamp>/ (with a numeric suffix if that exists).
class RunDirectory
{
  public:
    RunDirectory(const std::string &command, const std::optional<std::string> &out);

    const std::filesystem::path &path() const { return path_; }
    void write(const std::string &name, const std::string &content) const;
    void write_json(const std::string &name, const json &doc) const;

    /// Writes manifest.json. `parameters` holds every flag with its resolved
    /// value, keyed by flag name, so the run can be replayed.
    void write_manifest(const std::string &command, const std::string &scene_path, const json &parameters) const;

  private:
    std::filesystem::path path_;
};

/// Flags shared by every command that evaluates a scene.
struct ModelFlags
{
    std::string scene;
    int max_bounces = 2;
    std::optional<double> pattern_q;
    bool invert_polarity = false;
    int threads = 0;
    std::optional<std::string> out;
};

struct OptimizeFlags
{
    ModelFlags model;
    std::string method = "dt-dpo";
    int max_passes = 10;
    std::optional<std::string> snapshot_in;
    bool snapshot_out = false;
    std::uint64_t trials = 1024;
    std::uint64_t seed = 0;
};

struct CoverageFlags
{
    ModelFlags model;
    std::optional<std::string> config;
    bool all_zero = false;
    std::optional<std::string> compare;
    std::string grid = "100,100";
    std::optional<std::string> grid_center;
    bool ppm = false;
    double ppm_floor = -100.0;
    double ppm_ceil = -40.0;
};

struct BenchmarkFlags
{
    ModelFlags model;
    std::vector<std::string> rx;
    std::optional<std::string> rx_file;
    std::string sigma = "0";
    double pattern_delta = 0.0;
    double reflection_delta = 0.0;
    int seeds = 1;
    std::uint64_t seed = 0;
    int max_passes = 10;
};

int cmd_validate(const std::string &scene_path, const std::optional<std::string> &out, std::ostream &os);
int cmd_optimize(const OptimizeFlags &flags, std::ostream &os);
int cmd_coverage(const CoverageFlags &flags, std::ostream &os);
int cmd_benchmark(const BenchmarkFlags &flags, std::ostream &os);

/// Parses "lambda/20", "λ/20", "0.25*lambda" or a plain length in metres.
double parse_length(const std::string &text, double wavelength_m);

/// Parses "x,y,z".
Vec3 parse_point(const std::string &text);

} // namespace ristwin::cli
