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

#include "fixtures.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

#ifndef RISTWIN_SCENE_DIR
#error "RISTWIN_SCENE_DIR must point at the scenes/ directory"
#endif

namespace ristwin::testing
{

Complex SnapshotGenerator::complex_gaussian()
{
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(engine_);
    const double im = normal(engine_);
    return {re, im};
}

ChannelSnapshot SnapshotGenerator::snapshot(std::size_t n, bool zero_direct)
{
    ChannelSnapshot s;
    s.frequency_hz = 3.62e9;
    s.h_d = zero_direct ? Complex{} : complex_gaussian() * std::pow(10.0, uniform(-1.5, 1.5));
    for (std::size_t i = 0; i < n; ++i)
    {
        s.h.push_back(complex_gaussian() * std::pow(10.0, uniform(-1.0, 0.0)));
        s.g.push_back(complex_gaussian() * std::pow(10.0, uniform(-1.0, 0.0)));
    }
    return s;
}

std::size_t SnapshotGenerator::uniform_size(std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

std::vector<std::uint8_t> SnapshotGenerator::random_bits(std::size_t n)
{
    std::vector<std::uint8_t> bits(n);
    for (auto &b : bits)
        b = static_cast<std::uint8_t>(engine_() & 1u);
    return bits;
}

std::vector<double> SnapshotGenerator::random_phases(std::size_t n)
{
    std::vector<double> phases(n);
    for (auto &p : phases)
        p = uniform(0.0, two_pi);
    return phases;
}

double SnapshotGenerator::uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::string scene_path(const std::string &name) { return std::string(RISTWIN_SCENE_DIR) + "/" + name; }

Scene office_scene() { return load_scene_file(scene_path("office.json")); }

std::vector<Vec3> office_receivers()
{
    std::ifstream in(scene_path("office_receivers.json"));
    if (!in)
        throw std::runtime_error("cannot open office_receivers.json");
    const auto doc = nlohmann::json::parse(in);
    std::vector<Vec3> out;
    for (const auto &p : doc.at("receivers"))
        out.push_back({p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()});
    return out;
}

Facet rect(int axis, double at, double u0, double u1, double v0, double v1, const std::string &material)
{
    auto point = [&](double u, double v) {
        double c[3];
        c[axis] = at;
        c[(axis + 1) % 3] = u;
        c[(axis + 2) % 3] = v;
        return Vec3{c[0], c[1], c[2]};
    };
    return {{point(u0, v0), point(u1, v0), point(u1, v1), point(u0, v1)}, material};
}

Scene bare_scene(const Vec3 &tx, const Vec3 &rx)
{
    Scene s;
    s.materials = {{"wall", 0.5}};
    auto &d = s.deployment;
    d.tx = {tx, 0.0};
    d.rx = {rx, 0.0};
    d.carrier_frequency_hz = 3.62e9;
    d.ris.center = {50.0, 50.0, 50.0};
    d.ris.normal = {1.0, 0.0, 0.0};
    d.ris.up = {0.0, 0.0, 1.0};
    d.ris.rows = 2;
    d.ris.cols = 2;
    d.ris.element_spacing = default_element_spacing(d.carrier_frequency_hz);
    return s;
}

} // namespace ristwin::testing
