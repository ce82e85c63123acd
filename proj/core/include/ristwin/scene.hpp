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

#include "ristwin/errors.hpp"
#include "ristwin/geometry.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ristwin
{

/// Specular reflector with one real amplitude coefficient per bounce.
struct Material
{
    std::string name;
    double reflection_coefficient = 1.0;

    friend bool operator==(const Material &, const Material &) = default;
};

/// Planar convex quad wall, partition, desk top, ...
struct Facet
{
    Quad vertices{};
    std::string material; ///< Name of an entry in Scene::materials.

    friend bool operator==(const Facet &, const Facet &) = default;
};

/// Rectangular RIS panel.
///
/// Elements sit on a rows x cols lattice in the plane through `center` with
/// normal `normal`. Rows run along `up` (row 0 is the topmost row), columns
/// along `normal x up`. Element index i = row * cols + col is the canonical
/// ordering used by every per-element vector in the library.
struct RisPanel
{
    Vec3 center;
    Vec3 normal{1.0, 0.0, 0.0};
    Vec3 up{0.0, 0.0, 1.0};
    int rows = 1;
    int cols = 1;
    double element_spacing = 0.0; ///< [m]
    double pattern_exponent = 1.0; ///< q in the cos^q element pattern.

    std::size_t element_count() const
    {
        return rows > 0 && cols > 0 ? static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) : 0;
    }
    Vec3 cross_axis() const { return cross(normal, up); }

    friend bool operator==(const RisPanel &, const RisPanel &) = default;
};

struct Antenna
{
    Vec3 position;
    double gain_dbi = 0.0;

    friend bool operator==(const Antenna &, const Antenna &) = default;
};

struct Deployment
{
    Antenna tx;
    Antenna rx;
    RisPanel ris;
    double carrier_frequency_hz = 3.62e9;
    double tx_power_dbm = 0.0;

    double wavelength() const { return ristwin::wavelength(carrier_frequency_hz); }

    friend bool operator==(const Deployment &, const Deployment &) = default;
};

/// The digital replica: facet geometry, materials and entity placement.
/// Immutable by convention once validated; share freely across threads.
struct Scene
{
    std::vector<Facet> facets;
    std::vector<Material> materials;
    Deployment deployment;

    /// Material of `facet`, or nullptr if the name does not resolve.
    const Material *find_material(std::string_view name) const;

    friend bool operator==(const Scene &, const Scene &) = default;
};

/// One invariant violation. `rule` is a stable machine-readable id.
struct Violation
{
    std::string rule;
    std::string message;
    std::optional<std::size_t> facet_index;
};

/// Invariant violations of a document that parsed correctly.
class ValidationError : public Error
{
  public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation> &violations() const noexcept { return violations_; }

  private:
    std::vector<Violation> violations_;
};

/// Geometric tolerances checked by validate_scene.
inline constexpr double coplanarity_tolerance = 1e-9; ///< [m]
inline constexpr double min_facet_area = 1e-12;       ///< [m^2]
inline constexpr double unit_vector_tolerance = 1e-12;

/// Returns every invariant violation; empty iff the scene is valid.
///
/// Rule ids: facet-coplanarity, facet-convexity, facet-material,
/// material-range, material-duplicate, panel-shape, panel-axes,
/// panel-spacing, panel-pattern, deployment-frequency, deployment-distinct,
/// non-finite.
std::vector<Violation> validate_scene(const Scene &scene);

/// Parses a scene document. Throws ParseError for malformed text or schema
/// mismatches (including unknown keys) and ValidationError when the parsed
/// scene violates an invariant. A missing `element_spacing` defaults to half
/// a wavelength at the carrier; a missing `pattern_exponent` to 1.
Scene load_scene(std::string_view text);

/// Reads and parses a scene file. Throws std::ios_base::failure on I/O errors.
Scene load_scene_file(const std::string &path);

/// Inverse of load_scene; numbers are written in shortest round-trip form.
std::string serialize_scene(const Scene &scene);

/// Element centers in canonical row-major order.
std::vector<Vec3> ris_element_positions(const RisPanel &panel);

/// Copy of `scene` with the receiver moved to `rx`.
Scene with_receiver(const Scene &scene, const Vec3 &rx);

/// Half-wavelength element pitch used when a scene omits `element_spacing`.
inline double default_element_spacing(double frequency_hz) { return 0.5 * wavelength(frequency_hz); }

} // namespace ristwin
