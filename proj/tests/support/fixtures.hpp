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

// Shared fixtures for the test programs: random channel snapshots, small
// hand-built scenes and the fixture loader.

#include "ristwin/channel.hpp"
#include "ristwin/scene.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ristwin::testing
{

/// Complex Gaussian entries with random magnitudes spread over ~3 decades.
class SnapshotGenerator
{
  public:
    explicit SnapshotGenerator(std::uint64_t seed) : engine_(seed) {}

    Complex complex_gaussian();
    ChannelSnapshot snapshot(std::size_t n, bool zero_direct = false);
    std::size_t uniform_size(std::size_t lo, std::size_t hi);
    std::vector<std::uint8_t> random_bits(std::size_t n);
    std::vector<double> random_phases(std::size_t n);
    double uniform(double lo, double hi);

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

/// Scene document path inside the source tree.
std::string scene_path(const std::string &name);

Scene office_scene();
std::vector<Vec3> office_receivers();

/// Axis-aligned rectangle facet. `axis` is the constant coordinate (0, 1, 2).
Facet rect(int axis, double at, double u0, double u1, double v0, double v1, const std::string &material = "wall");

/// Empty scene with one material "wall" (reflection 0.5), a 2x2 panel far
/// away and Tx/Rx at the given positions.
Scene bare_scene(const Vec3 &tx, const Vec3 &rx);

} // namespace ristwin::testing
