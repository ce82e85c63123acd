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

#include "ristwin/channel.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace ristwin
{
namespace
{

// Contacts closer than this to a segment end are not occlusions; this is
// what lets a reflected segment start on its own facet.
constexpr double endpoint_tolerance = 1e-9; // [m]

// Reflection points this close to the facet outline still count as inside.
constexpr double containment_margin = -1e-12; // [m]

// Occluders must be hit at least this far inside their outline.
constexpr double interior_margin = 1e-12; // [m]

constexpr double dedup_tolerance = 1e-9; // [m]

struct PreparedFacet
{
    const Quad *quad;
    Plane plane;
    double reflection;
};

std::vector<PreparedFacet> prepare(const Scene &scene)
{
    std::vector<PreparedFacet> out;
    out.reserve(scene.facets.size());
    for (const auto &f : scene.facets)
    {
        const Material *m = scene.find_material(f.material);
        out.push_back({&f.vertices, quad_plane(f.vertices), m ? m->reflection_coefficient : 0.0});
    }
    return out;
}

bool occluded(const std::vector<PreparedFacet> &facets, const Vec3 &a, const Vec3 &b)
{
    const double length = distance(a, b);
    if (length <= 2.0 * endpoint_tolerance)
        return false;
    for (const auto &f : facets)
    {
        const auto t = segment_plane_parameter(a, b, f.plane);
        if (!t || *t * length <= endpoint_tolerance || (1.0 - *t) * length <= endpoint_tolerance)
            continue;
        if (*t >= 1.0 || *t <= 0.0)
            continue;
        const Vec3 hit = a + (b - a) * *t;
        if (quad_contains(*f.quad, f.plane.normal, hit, interior_margin))
            return true;
    }
    return false;
}

PropagationPath make_path(std::vector<Vec3> waypoints, std::vector<std::size_t> bounces,
                          const std::vector<PreparedFacet> &facets)
{
    PropagationPath p;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
        p.total_length += distance(waypoints[i], waypoints[i + 1]);
    for (std::size_t f : bounces)
        p.cumulative_reflection *= facets[f].reflection;
    p.waypoints = std::move(waypoints);
    p.bounce_facets = std::move(bounces);
    return p;
}

// Image-source construction for one ordered facet sequence.
std::optional<PropagationPath> trace_sequence(const std::vector<PreparedFacet> &facets,
                                              const std::vector<std::size_t> &sequence, const Vec3 &a, const Vec3 &b)
{
    const std::size_t k = sequence.size();
    std::vector<Vec3> images(k + 1);
    images[0] = a;
    for (std::size_t j = 0; j < k; ++j)
        images[j + 1] = reflect_across(images[j], facets[sequence[j]].plane);

    // Walk back from the destination, intersecting image->target lines with
    // each facet in reverse order.
    std::vector<Vec3> waypoints(k + 2);
    waypoints[0] = a;
    waypoints[k + 1] = b;
    Vec3 target = b;
    for (std::size_t j = k; j-- > 0;)
    {
        const auto &f = facets[sequence[j]];
        const Vec3 &image = images[j + 1];
        const auto t = segment_plane_parameter(image, target, f.plane);
        if (!t || !(*t > 0.0 && *t < 1.0))
            return std::nullopt;
        const Vec3 hit = image + (target - image) * *t;
        if (!quad_contains(*f.quad, f.plane.normal, hit, containment_margin))
            return std::nullopt;
        waypoints[j + 1] = hit;
        target = hit;
    }

    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
    {
        if (distance(waypoints[i], waypoints[i + 1]) <= endpoint_tolerance)
            return std::nullopt;
        if (occluded(facets, waypoints[i], waypoints[i + 1]))
            return std::nullopt;
    }
    return make_path(std::move(waypoints), sequence, facets);
}

bool same_route(const PropagationPath &p, const PropagationPath &q)
{
    if (p.waypoints.size() != q.waypoints.size())
        return false;
    for (std::size_t i = 0; i < p.waypoints.size(); ++i)
        if (distance(p.waypoints[i], q.waypoints[i]) > dedup_tolerance)
            return false;
    return true;
}

void enumerate_sequences(std::size_t facet_count, std::size_t length, std::vector<std::size_t> &prefix,
                         const std::function<void(const std::vector<std::size_t> &)> &visit)
{
    if (prefix.size() == length)
    {
        visit(prefix);
        return;
    }
    for (std::size_t f = 0; f < facet_count; ++f)
    {
        if (!prefix.empty() && prefix.back() == f)
            continue;
        prefix.push_back(f);
        enumerate_sequences(facet_count, length, prefix, visit);
        prefix.pop_back();
    }
}

Complex friis_segment(const std::vector<PreparedFacet> &facets, const Vec3 &from, const Vec3 &to,
                      double frequency_hz, double gain_dbi)
{
    if (distance(from, to) <= endpoint_tolerance || occluded(facets, from, to))
        return {0.0, 0.0};
    return path_coefficient(make_path({from, to}, {}, facets), frequency_hz, gain_dbi);
}

} // namespace

bool segment_occluded(const Scene &scene, const Vec3 &a, const Vec3 &b) { return occluded(prepare(scene), a, b); }

Vec3 mirror_point(const Vec3 &p, const Facet &facet) { return reflect_across(p, quad_plane(facet.vertices)); }

std::vector<PropagationPath> trace_paths(const Scene &scene, const Vec3 &a, const Vec3 &b, int max_bounces)
{
    std::vector<PropagationPath> paths;
    if (distance(a, b) <= endpoint_tolerance)
        return paths;

    const auto facets = prepare(scene);
    if (!occluded(facets, a, b))
        paths.push_back(make_path({a, b}, {}, facets));

    std::vector<std::size_t> prefix;
    for (int k = 1; k <= max_bounces; ++k)
    {
        enumerate_sequences(facets.size(), static_cast<std::size_t>(k), prefix, [&](const auto &sequence) {
            auto path = trace_sequence(facets, sequence, a, b);
            if (!path)
                return;
            if (std::any_of(paths.begin(), paths.end(), [&](const auto &q) { return same_route(q, *path); }))
                return;
            paths.push_back(std::move(*path));
        });
    }

    std::stable_sort(paths.begin(), paths.end(),
                     [](const auto &p, const auto &q) { return p.total_length < q.total_length; });
    return paths;
}

double path_amplitude(const PropagationPath &path, double frequency_hz, double gain_product_dbi)
{
    const double lambda = wavelength(frequency_hz);
    const double gain = gain_product_dbi == 0.0 ? 1.0 : std::pow(10.0, gain_product_dbi / 20.0);
    return gain * path.cumulative_reflection * lambda / (4.0 * pi * path.total_length);
}

Complex path_coefficient(const PropagationPath &path, double frequency_hz, double gain_product_dbi)
{
    const double cycles = path.total_length / wavelength(frequency_hz);
    const double phase = -two_pi * (cycles - std::floor(cycles));
    return std::polar(path_amplitude(path, frequency_hz, gain_product_dbi), phase);
}

Complex direct_channel(const Scene &scene, const ChannelOptions &options)
{
    const auto &d = scene.deployment;
    const double gain = d.tx.gain_dbi + d.rx.gain_dbi;
    Complex sum{0.0, 0.0};
    for (const auto &path : trace_paths(scene, d.tx.position, d.rx.position, options.max_bounces))
        sum += path_coefficient(path, d.carrier_frequency_hz, gain);
    return sum;
}

double element_pattern(const RisPanel &panel, const Vec3 &element, const Vec3 &towards)
{
    const Vec3 dir = towards - element;
    const double len = norm(dir);
    if (len == 0.0)
        return 0.0;
    const double cos_angle = dot(dir, panel.normal) / len;
    if (cos_angle <= 0.0)
        return 0.0;
    return std::pow(cos_angle, panel.pattern_exponent);
}

RisLinks ris_link_channels(const Scene &scene)
{
    const auto &d = scene.deployment;
    const auto facets = prepare(scene);
    const auto elements = ris_element_positions(d.ris);

    RisLinks links;
    links.h.reserve(elements.size());
    links.g.reserve(elements.size());
    for (const auto &p : elements)
    {
        const double in = element_pattern(d.ris, p, d.tx.position);
        const double out = element_pattern(d.ris, p, d.rx.position);
        links.h.push_back(in == 0.0 ? Complex{}
                                    : in * friis_segment(facets, d.tx.position, p, d.carrier_frequency_hz, d.tx.gain_dbi));
        links.g.push_back(out == 0.0 ? Complex{}
                                     : out * friis_segment(facets, p, d.rx.position, d.carrier_frequency_hz, d.rx.gain_dbi));
    }
    return links;
}

ChannelSnapshot channel_snapshot(const Scene &scene, const ChannelOptions &options)
{
    auto links = ris_link_channels(scene);
    ChannelSnapshot s;
    s.h_d = direct_channel(scene, options);
    s.h = std::move(links.h);
    s.g = std::move(links.g);
    s.frequency_hz = scene.deployment.carrier_frequency_hz;
    return s;
}

} // namespace ristwin
