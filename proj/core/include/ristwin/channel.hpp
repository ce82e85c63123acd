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

#include "ristwin/geometry.hpp"
#include "ristwin/scene.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace ristwin
{

/// Dimensionless complex baseband amplitude gain of a narrowband link.
using Complex = std::complex<double>;

/// Specular path from source to destination.
struct PropagationPath
{
    std::vector<Vec3> waypoints;            ///< source, reflection points..., destination
    std::vector<std::size_t> bounce_facets; ///< facet index per reflection point
    double total_length = 0.0;              ///< [m]
    double cumulative_reflection = 1.0;     ///< product of reflection coefficients

    std::size_t bounces() const { return bounce_facets.size(); }
};

/// Solver settings shared by all channel computations.
struct ChannelOptions
{
    int max_bounces = 2; ///< reflection order of the direct Tx-Rx link
};

/// Narrowband channel of Tx -> Rx with an N-element RIS in between:
/// composite = h_d + sum_i g_i e^{j theta_i} h_i.
struct ChannelSnapshot
{
    Complex h_d{0.0, 0.0};
    std::vector<Complex> h; ///< Tx -> element i
    std::vector<Complex> g; ///< element i -> Rx
    double frequency_hz = 0.0;

    std::size_t element_count() const { return h.size(); }
    bool consistent() const { return h.size() == g.size(); }

    friend bool operator==(const ChannelSnapshot &, const ChannelSnapshot &) = default;
};

/// True iff the open segment (a, b) crosses the interior of any facet.
/// Contacts within `endpoint_tolerance` of either end are ignored.
bool segment_occluded(const Scene &scene, const Vec3 &a, const Vec3 &b);

/// Reflection of `p` across the plane of `facet`.
Vec3 mirror_point(const Vec3 &p, const Facet &facet);

/// LOS plus every specular path with 1..max_bounces reflections between a
/// and b, found with the image-source method over ordered facet sequences.
/// Sorted by total length; an empty result means total blockage.
std::vector<PropagationPath> trace_paths(const Scene &scene, const Vec3 &a, const Vec3 &b, int max_bounces);

/// Complex gain of one path: Friis amplitude times the reflection product,
/// phase lag -2 pi L / lambda.
Complex path_coefficient(const PropagationPath &path, double frequency_hz, double gain_product_dbi);

/// Real amplitude part of path_coefficient.
double path_amplitude(const PropagationPath &path, double frequency_hz, double gain_product_dbi);

/// Coherent sum over all Tx -> Rx paths; exactly zero if there is none.
Complex direct_channel(const Scene &scene, const ChannelOptions &options = {});

/// Element pattern factor cos^q of the angle between the panel normal and
/// the direction towards `towards`; zero behind the panel.
double element_pattern(const RisPanel &panel, const Vec3 &element, const Vec3 &towards);

struct RisLinks
{
    std::vector<Complex> h;
    std::vector<Complex> g;
};

/// Per-element LOS coefficients Tx -> element (h) and element -> Rx (g),
/// weighted by the element pattern on each segment. Occluded segments are 0.
RisLinks ris_link_channels(const Scene &scene);

/// Ray-traced snapshot of the scene's deployment.
ChannelSnapshot channel_snapshot(const Scene &scene, const ChannelOptions &options = {});

} // namespace ristwin
