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

#include "ristwin/geometry.hpp"
#include "ristwin/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ristwin
{

Vec3 rotate(const Vec3 &v, const Vec3 &axis, double angle)
{
    const double c = std::cos(angle), s = std::sin(angle);
    return v * c + cross(axis, v) * s + axis * (dot(axis, v) * (1.0 - c));
}

Vec3 reflect_across(const Vec3 &p, const Plane &plane)
{
    return p - plane.normal * (2.0 * plane.signed_distance(p));
}

Vec3 newell_normal(const Quad &q)
{
    Vec3 n;
    for (std::size_t i = 0; i < 4; ++i)
    {
        const Vec3 &a = q[i];
        const Vec3 &b = q[(i + 1) % 4];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    return n;
}

Vec3 centroid(const Quad &q) { return (q[0] + q[1] + q[2] + q[3]) * 0.25; }

Plane quad_plane(const Quad &q) { return {centroid(q), normalized(newell_normal(q))}; }

bool quad_contains(const Quad &q, const Vec3 &normal, const Vec3 &p, double margin)
{
    for (std::size_t i = 0; i < 4; ++i)
    {
        const Vec3 edge = q[(i + 1) % 4] - q[i];
        const double len = norm(edge);
        if (len == 0.0)
            return false;
        // Signed distance from the edge line, positive on the inner side.
        const double d = dot(cross(edge, p - q[i]), normal) / len;
        if (d < margin)
            return false;
    }
    return true;
}

std::optional<double> segment_plane_parameter(const Vec3 &a, const Vec3 &b, const Plane &plane)
{
    const double da = plane.signed_distance(a);
    const double db = plane.signed_distance(b);
    const double denom = da - db;
    if (denom == 0.0)
        return std::nullopt;
    return da / denom;
}

int resolve_threads(int threads)
{
    if (threads > 0)
        return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> &fn)
{
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), count);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
    {
        const std::size_t begin = w * block;
        const std::size_t end = std::min(count, begin + block);
        if (begin >= end)
            break;
        pool.emplace_back([&, begin, end] {
            try
            {
                for (std::size_t i = begin; i < end; ++i)
                    fn(i);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    }
    for (auto &t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace ristwin
