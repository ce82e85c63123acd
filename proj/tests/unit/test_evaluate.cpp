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

#include "ristwin/evaluate.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

using namespace ristwin;
using ristwin::testing::SnapshotGenerator;

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double lambda_n78 = 0.0828155961325966850828729;

ChannelSnapshot make_snapshot(Complex h_d, std::vector<Complex> h, std::vector<Complex> g)
{
    ChannelSnapshot s;
    s.h_d = h_d;
    s.h = std::move(h);
    s.g = std::move(g);
    s.frequency_hz = 3.62e9;
    return s;
}

Scene small_office()
{
    // The office fixture with a 2 x 4 panel keeps the grid tests quick.
    auto s = ristwin::testing::office_scene();
    s.deployment.ris.rows = 2;
    s.deployment.ris.cols = 4;
    return s;
}

} // namespace

TEST_CASE("received power")
{
    CHECK(received_power(make_snapshot(0.0, {0.0, 0.0}, {0.0, 0.0}), all_zero(2)) == 0.0);
    CHECK(received_power(make_snapshot(1.0, {0.0, 3.0}, {2.0, 0.0}), PhaseConfig::from_bits({1, 0})) == 1.0);
    CHECK_THROWS_AS(received_power(make_snapshot(1.0, {1.0}, {1.0}), all_zero(2)), DimensionError);
}

TEST_CASE("rsrp in dBm")
{
    CHECK(rsrp_db(make_snapshot(1.0, {0.0}, {0.0}), all_zero(1), 0.0) == 0.0);
    CHECK(rsrp_db(make_snapshot(0.1, {0.0}, {0.0}), all_zero(1), 10.0) == doctest::Approx(-10.0).epsilon(1e-14));
    CHECK(rsrp_db(make_snapshot(0.0, {0.0}, {0.0}), all_zero(1), 10.0) == -inf);

    // LOS at 4.2 m, 3.62 GHz, 0 dBm; value from 40-digit arithmetic.
    auto s = ristwin::testing::bare_scene({0, 0, 1}, {4.2, 0, 1});
    const auto snap = channel_snapshot(s);
    CHECK(std::norm(snap.h_d) > 0.0);
    ChannelSnapshot direct_only = snap;
    std::fill(direct_only.h.begin(), direct_only.h.end(), Complex{});
    CHECK(rsrp_db(direct_only, all_zero(4), 0.0) == doctest::Approx(-56.08694044050469718).epsilon(1e-12));
}

TEST_CASE("gain and its sentinels")
{
    SnapshotGenerator gen(89);
    for (int k = 0; k < 100; ++k)
    {
        const auto s = gen.snapshot(gen.uniform_size(1, 16));
        CHECK(rsrp_gain_db(s, all_zero(s.element_count())) == 0.0);
    }
    CHECK(gain_db(4.0, 1.0) == doctest::Approx(6.0205999132796239).epsilon(1e-14));
    CHECK(gain_db(1.0, 0.0) == inf);
    CHECK(gain_db(0.0, 1.0) == -inf);
    CHECK(gain_db(0.0, 0.0) == 0.0);
    CHECK(power_db(0.0) == -inf);
    CHECK(power_db(100.0) == 20.0);

    const auto s = make_snapshot(1.0, {1.0}, {1.0});
    CHECK(rsrp_gain_db(s, PhaseConfig::from_bits({1})) == -inf);
    const auto t = make_snapshot(1.0, {-1.0}, {1.0});
    CHECK(rsrp_gain_db(t, PhaseConfig::from_bits({1})) == inf);
}

TEST_CASE("grid geometry")
{
    const auto s = small_office();
    const auto g = default_grid(s, 5, 3);
    CHECK(g.cell_size == doctest::Approx(lambda_n78 / 2).epsilon(1e-15));
    CHECK(distance(g.cell_center(2, 1), s.deployment.rx.position) < 1e-15);
    CHECK(g.cell_center(0, 0).z == s.deployment.rx.position.z);

    CoverageMap map;
    map.grid = g;
    CHECK(map.nearest_cell(s.deployment.rx.position) == std::pair<int, int>{2, 1});
    CHECK(map.nearest_cell({-100, -100, 0}) == std::pair<int, int>{0, 0});

    CHECK_THROWS_AS(default_grid(s, 0, 3), ArgumentError);
    CHECK_THROWS_AS(default_grid(s, 3, 3, -1.0), ArgumentError);
}

TEST_CASE("coverage map: single cell at the receiver")
{
    const auto s = small_office();
    GridSpec g;
    g.origin = s.deployment.rx.position;
    g.cell_size = 0.1;
    SnapshotGenerator gen(97);
    const auto c = PhaseConfig::from_bits(gen.random_bits(8));
    const auto map = coverage_map(s, c, g);
    REQUIRE(map.rsrp_db.size() == 1);
    CHECK(map.rsrp_db[0] == rsrp_db(channel_snapshot(s), c, s.deployment.tx_power_dbm));
    CHECK_THROWS_AS(coverage_map(s, all_zero(9), g), DimensionError);
}

TEST_CASE("coverage map: identical for every thread count")
{
    const auto s = small_office();
    const auto g = default_grid(s, 9, 7, 0.25);
    const auto c = PhaseConfig::from_bits({1, 0, 0, 1, 1, 1, 0, 1});
    const auto ref = coverage_map(s, c, g, {}, 1);
    REQUIRE(ref.rsrp_db.size() == 63);
    for (int threads : {2, 5, 0})
        CHECK(coverage_map(s, c, g, {}, threads).rsrp_db == ref.rsrp_db);
    // Cells are independent: a single-cell map reproduces each entry.
    for (int iy = 0; iy < g.ny; iy += 3)
        for (int ix = 0; ix < g.nx; ix += 4)
        {
            GridSpec one = g;
            one.origin = g.cell_center(ix, iy);
            one.nx = one.ny = 1;
            CHECK(coverage_map(s, c, one).rsrp_db[0] == ref.at(ix, iy));
        }
}

TEST_CASE("coverage map: optimized config lights up the target cell")
{
    const auto s = ristwin::testing::office_scene();
    const auto g = default_grid(s, 11, 11);
    const auto dpo = dt_dpo(channel_snapshot(s), default_max_passes);
    const auto best = dpo.configs[best_candidate(channel_snapshot(s), dpo)];
    const auto base = coverage_map(s, all_zero(128), g, {}, 0);
    const auto opt = coverage_map(s, best, g, {}, 0);
    const auto [ix, iy] = base.nearest_cell(s.deployment.rx.position);
    CHECK(opt.at(ix, iy) >= base.at(ix, iy));
    const auto diff = coverage_difference(base, opt);
    CHECK(diff.at(ix, iy) == opt.at(ix, iy) - base.at(ix, iy));
    CHECK(diff.at(ix, iy) >= 0.0);
}

TEST_CASE("coverage map: without RIS contribution the map falls off with distance")
{
    auto s = ristwin::testing::bare_scene({0, 0, 1}, {3, 0, 1});
    s.deployment.ris.center = {0, -5, 1};
    s.deployment.ris.normal = {0, -1, 0}; // faces away from everything
    GridSpec g;
    g.origin = {1.0, -1.0, 1.0};
    g.nx = 20;
    g.ny = 20;
    g.cell_size = 0.1;
    const auto map = coverage_map(s, all_zero(4), g);
    std::vector<std::pair<double, double>> by_distance;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix)
            by_distance.emplace_back(distance(g.cell_center(ix, iy), s.deployment.tx.position), map.at(ix, iy));
    std::sort(by_distance.begin(), by_distance.end());
    for (std::size_t k = 1; k < by_distance.size(); ++k)
        if (by_distance[k].first > by_distance[k - 1].first + 1e-12)
            CHECK(by_distance[k].second < by_distance[k - 1].second);
}

TEST_CASE("perturbation: identity, determinism and validity")
{
    const auto s = ristwin::testing::office_scene();
    CHECK(perturb_scene(s, {}) == s);
    CHECK(perturb_scene(s, {0.0, 0.0, 0.0, 99}) == s);

    const PerturbationSpec spec{0.01, 0.5, -0.1, 1234};
    const auto a = perturb_scene(s, spec);
    const auto b = perturb_scene(s, spec);
    CHECK(a == b);
    CHECK(a != s);
    CHECK(perturb_scene(s, {0.01, 0.5, -0.1, 1235}) != a);
    CHECK(a.deployment.ris.pattern_exponent == 1.5);
    CHECK(a.materials[0].reflection_coefficient == doctest::Approx(0.28));

    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        const auto p = perturb_scene(s, {0.05, -3.0, 0.9, seed});
        CHECK(validate_scene(p).empty());
        CHECK(p.deployment.ris.pattern_exponent == 0.0);
        for (const auto &m : p.materials)
            CHECK(m.reflection_coefficient == 1.0);
    }
    CHECK_THROWS_AS(perturb_scene(s, {-1.0, 0.0, 0.0, 0}), ArgumentError);
}

TEST_CASE("perturbation: facets move rigidly")
{
    const auto s = ristwin::testing::office_scene();
    const auto p = perturb_scene(s, {0.02, 0.0, 0.0, 5});
    for (std::size_t f = 0; f < s.facets.size(); ++f)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                CHECK(distance(p.facets[f].vertices[i], p.facets[f].vertices[j]) ==
                      doctest::Approx(distance(s.facets[f].vertices[i], s.facets[f].vertices[j])).epsilon(1e-12));
}

TEST_CASE("perturbation: millimetre jitter bounds the element phase shifts")
{
    const auto s = ristwin::testing::office_scene();
    const auto ref = ris_link_channels(s);
    const double sigma = 1e-3;
    const double bound = two_pi * (3.0 * sigma * 3.0) / lambda_n78;
    std::size_t total = 0, within = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
    {
        const auto links = ris_link_channels(perturb_scene(s, {sigma, 0.0, 0.0, seed}));
        for (std::size_t i = 0; i < ref.h.size(); ++i)
        {
            const Complex c0 = ref.h[i] * ref.g[i], c1 = links.h[i] * links.g[i];
            if (c0 == Complex{} || c1 == Complex{})
                continue;
            ++total;
            if (std::abs(std::arg(c1 / c0)) <= bound)
                ++within;
        }
    }
    REQUIRE(total > 0);
    CHECK(static_cast<double>(within) / total >= 0.997);
}

TEST_CASE("perturb_points")
{
    const std::vector<Vec3> pts{{0, 0, 0}, {1, 2, 3}};
    CHECK(perturb_points(pts, 0.0, 1) == pts);
    CHECK(perturb_points(pts, 0.1, 1) == perturb_points(pts, 0.1, 1));
    CHECK(perturb_points(pts, 0.1, 1) != perturb_points(pts, 0.1, 2));
    CHECK_THROWS_AS(perturb_points(pts, -0.1, 1), ArgumentError);
}

TEST_CASE("twin gap: identical scenes")
{
    const auto s = ristwin::testing::office_scene();
    const auto rx = ristwin::testing::office_receivers();
    const auto report = twin_gap_experiment(s, s, rx, default_max_passes);
    REQUIRE(report.records.size() == rx.size());
    for (std::size_t k = 0; k < rx.size(); ++k)
    {
        const auto &r = report.records[k];
        CHECK(r.rx_id == k);
        CHECK(r.gain_db_dt_dpo == r.gain_db_benchmark);
        CHECK(r.gain_db_benchmark >= r.gain_db_dt_cir);
        CHECK(r.gain_db_benchmark > 0.0);
        CHECK(r.ops_benchmark == 128);
        CHECK(r.ops_dt_dpo == 2);
        CHECK(r.ops_dt_cir == 1);
        CHECK(r.benchmark_evaluations >= 129);
    }
}

TEST_CASE("twin gap: argument checks and physical receiver offsets")
{
    const auto s = ristwin::testing::office_scene();
    const auto rx = ristwin::testing::office_receivers();
    CHECK_THROWS_AS(twin_gap_experiment(s, s, {}, 10), ArgumentError);
    auto other = s;
    other.deployment.ris.rows = 4;
    CHECK_THROWS_AS(twin_gap_experiment(s, other, rx, 10), DimensionError);
    const std::vector<Vec3> short_list{rx[0]};
    CHECK_THROWS_AS(twin_gap_experiment(s, s, rx, 10, {}, &short_list), DimensionError);

    const auto moved = perturb_points(rx, 0.05, 3);
    const auto a = twin_gap_experiment(s, s, rx, 10, {}, &moved);
    const auto b = twin_gap_experiment(s, s, moved, 10);
    for (std::size_t k = 0; k < rx.size(); ++k)
        CHECK(a.records[k].gain_db_benchmark == b.records[k].gain_db_benchmark);
}
