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

#include <array>
#include <cmath>
#include <numbers>
#include <optional>

namespace ristwin
{

/// Speed of light in vacuum [m/s].
inline constexpr double speed_of_light = 299792458.0;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Free-space wavelength [m] at `frequency_hz`.
inline double wavelength(double frequency_hz) { return speed_of_light / frequency_hz; }

/// Cartesian point or direction in meters.
struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 &operator+=(const Vec3 &o)
    {
        x += o.x, y += o.y, z += o.z;
        return *this;
    }
    constexpr Vec3 &operator-=(const Vec3 &o)
    {
        x -= o.x, y -= o.y, z -= o.z;
        return *this;
    }
    constexpr Vec3 &operator*=(double s)
    {
        x *= s, y *= s, z *= s;
        return *this;
    }

    friend constexpr bool operator==(const Vec3 &, const Vec3 &) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
constexpr Vec3 operator-(const Vec3 &a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }

constexpr double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3 &a, const Vec3 &b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }
inline double distance(const Vec3 &a, const Vec3 &b) { return norm(a - b); }

/// Unit vector along `a`; the zero vector is returned unchanged.
inline Vec3 normalized(const Vec3 &a)
{
    const double n = norm(a);
    return n > 0.0 ? a * (1.0 / n) : a;
}

inline bool is_finite(const Vec3 &a)
{
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Rotates `v` about the unit `axis` by `angle` radians (Rodrigues).
Vec3 rotate(const Vec3 &v, const Vec3 &axis, double angle);

/// Infinite plane through `origin` with unit `normal`.
struct Plane
{
    Vec3 origin;
    Vec3 normal;

    double signed_distance(const Vec3 &p) const { return dot(p - origin, normal); }
};

/// Reflection of `p` across `plane`.
Vec3 reflect_across(const Vec3 &p, const Plane &plane);

/// Planar convex quadrilateral given by four ordered vertices.
using Quad = std::array<Vec3, 4>;

/// Newell normal of the quad (not normalized; its length is twice the area).
Vec3 newell_normal(const Quad &q);

Vec3 centroid(const Quad &q);

/// Best-fit plane through the vertex centroid with the Newell normal.
Plane quad_plane(const Quad &q);

/// True if `p` (assumed to lie in the quad plane) is inside the quad.
/// `margin` > 0 shrinks the accepted region, < 0 grows it.
bool quad_contains(const Quad &q, const Vec3 &normal, const Vec3 &p, double margin);

/// Intersection parameter t of the line a + t(b-a) with `plane`; empty when
/// the line is parallel to the plane.
std::optional<double> segment_plane_parameter(const Vec3 &a, const Vec3 &b, const Plane &plane);

} // namespace ristwin
