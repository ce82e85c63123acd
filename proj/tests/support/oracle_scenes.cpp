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

#include "oracle_scenes.hpp"
#include "fixtures.hpp"

namespace ristwin::testing
{
namespace
{

OracleCase make(std::string name, std::vector<Facet> facets, Vec3 a, Vec3 b)
{
    OracleCase c{std::move(name), bare_scene(a, b), a, b, 2};
    c.scene.facets = std::move(facets);
    return c;
}

} // namespace

std::vector<OracleCase> oracle_cases()
{
    std::vector<OracleCase> cases;

    cases.push_back(make("single wall", {rect(1, 0.0, -1.0, 4.0, -5.0, 8.0)}, {0.0, 2.0, 1.0}, {3.0, 1.0, 1.5}));

    cases.push_back(make("corridor",
                         {rect(1, 0.0, -1.0, 4.0, -5.0, 10.0), rect(1, 3.0, -1.0, 4.0, -5.0, 10.0)},
                         {0.0, 1.0, 1.0}, {6.0, 2.0, 1.2}));

    cases.push_back(make("corner", {rect(1, 0.0, -1.0, 4.0, 0.0, 10.0), rect(0, 0.0, 0.0, 10.0, -1.0, 4.0)},
                         {2.0, 3.0, 1.0}, {5.0, 1.0, 1.5}));

    cases.push_back(make("floor and two walls",
                         {rect(2, 0.0, 0.0, 8.0, 0.0, 8.0), rect(1, 0.0, 0.0, 3.0, 0.0, 8.0),
                          rect(0, 0.0, 0.0, 8.0, 0.0, 3.0)},
                         {2.0, 3.0, 1.5}, {6.0, 2.0, 1.0}));

    cases.push_back(make("partition blocks the direct ray",
                         {rect(1, 0.0, -1.0, 4.0, -5.0, 10.0), rect(0, 2.0, 0.5, 3.0, 0.0, 2.0)},
                         {0.0, 2.0, 1.0}, {4.5, 2.0, 1.0}));

    cases.push_back(make("wall misses the specular point", {rect(1, 0.0, -1.0, 4.0, 5.0, 6.0)}, {0.0, 2.0, 1.0},
                         {3.0, 1.0, 1.0}));

    {
        const Vec3 c{1.0, 1.0, 1.5}, t{0.8, -0.6, 0.0}, z{0.0, 0.0, 1.0};
        Facet tilted{{c - t * 3.0 - z * 2.0, c + t * 3.0 - z * 2.0, c + t * 3.0 + z * 2.0, c - t * 3.0 + z * 2.0},
                     "wall"};
        cases.push_back(make("tilted reflector", {tilted}, {2.0, 4.0, 1.0}, {5.0, 2.0, 2.0}));
    }

    cases.push_back(make("corridor with floor, different heights",
                         {rect(1, 0.0, 0.0, 3.0, -2.0, 10.0), rect(1, 4.0, 0.0, 3.0, -2.0, 10.0),
                          rect(2, 0.0, -2.0, 10.0, 0.0, 4.0)},
                         {0.0, 1.0, 2.5}, {7.0, 3.0, 0.5}));

    cases.push_back(make("obstacle between the endpoints",
                         {rect(0, 3.0, -1.0, 1.0, 0.0, 3.0), rect(1, 3.0, -1.0, 4.0, -2.0, 8.0)},
                         {1.0, 0.0, 1.5}, {5.0, 0.2, 1.5}));

    cases.push_back(make("u-shaped room",
                         {rect(0, 0.0, 0.0, 8.0, 0.0, 3.0), rect(0, 6.0, 0.0, 8.0, 0.0, 3.0),
                          rect(1, 8.0, 0.0, 3.0, 0.0, 6.0)},
                         {1.5, 2.0, 1.0}, {4.0, 5.0, 2.0}));

    return cases;
}

} // namespace ristwin::testing
