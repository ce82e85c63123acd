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

#include "ristwin/serialization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace ristwin
{
namespace
{

json complex_json(const Complex &c) { return json::array({c.real(), c.imag()}); }

Complex complex_from(const json &j, const char *where)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(std::string(where) + ": expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

const json &require(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key '") + key + "'");
    return j[key];
}

std::size_t require_size(const json &j, const char *key)
{
    const auto &v = require(j, key);
    if (!v.is_number_unsigned())
        throw ParseError(std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

} // namespace

json number_or_marker(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "+inf" : "-inf";
    return value;
}

double number_from_marker(const json &j)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_string())
    {
        const auto s = j.get<std::string>();
        if (s == "+inf")
            return std::numeric_limits<double>::infinity();
        if (s == "-inf")
            return -std::numeric_limits<double>::infinity();
        if (s == "nan")
            return std::numeric_limits<double>::quiet_NaN();
    }
    throw ParseError("expected a number or one of \"+inf\", \"-inf\", \"nan\"");
}

json snapshot_to_json(const ChannelSnapshot &snapshot)
{
    json h = json::array(), g = json::array();
    for (const auto &c : snapshot.h)
        h.push_back(complex_json(c));
    for (const auto &c : snapshot.g)
        g.push_back(complex_json(c));
    return {{"h_d", complex_json(snapshot.h_d)},
            {"h", h},
            {"g", g},
            {"frequency_hz", snapshot.frequency_hz},
            {"n", snapshot.element_count()}};
}

ChannelSnapshot snapshot_from_json(const json &j)
{
    ChannelSnapshot s;
    s.h_d = complex_from(require(j, "h_d"), "h_d");
    const auto &h = require(j, "h");
    const auto &g = require(j, "g");
    if (!h.is_array() || !g.is_array())
        throw ParseError("snapshot h and g must be arrays");
    for (const auto &c : h)
        s.h.push_back(complex_from(c, "h[i]"));
    for (const auto &c : g)
        s.g.push_back(complex_from(c, "g[i]"));
    const auto &f = require(j, "frequency_hz");
    if (!f.is_number())
        throw ParseError("frequency_hz must be a number");
    s.frequency_hz = f.get<double>();
    const std::size_t n = require_size(j, "n");
    if (s.h.size() != n || s.g.size() != n)
        throw ParseError("snapshot: n = " + std::to_string(n) + " but h has " + std::to_string(s.h.size()) +
                         " and g has " + std::to_string(s.g.size()) + " entries");
    return s;
}

json config_to_json(const PhaseConfig &config)
{
    json j = {{"n", config.size()}, {"quantization", to_string(config.quantization())}};
    if (config.is_one_bit())
    {
        json bits = json::array();
        for (auto b : config.bits())
            bits.push_back(static_cast<int>(b));
        j["bits"] = bits;
    }
    else
    {
        j["phases"] = config.phases();
    }
    return j;
}

PhaseConfig config_from_json(const json &j)
{
    const std::size_t n = require_size(j, "n");
    const auto &q = require(j, "quantization");
    if (!q.is_string())
        throw ParseError("quantization must be a string");
    PhaseConfig config;
    if (q == "one_bit")
    {
        const auto &bits = require(j, "bits");
        if (!bits.is_array())
            throw ParseError("bits must be an array");
        std::vector<std::uint8_t> v;
        for (const auto &b : bits)
        {
            if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
                throw ParseError("bits must contain only 0 and 1");
            v.push_back(static_cast<std::uint8_t>(b.get<int>()));
        }
        config = PhaseConfig::from_bits(v);
    }
    else if (q == "continuous")
    {
        const auto &phases = require(j, "phases");
        if (!phases.is_array())
            throw ParseError("phases must be an array");
        std::vector<double> v;
        for (const auto &p : phases)
        {
            if (!p.is_number())
                throw ParseError("phases must be numbers");
            v.push_back(p.get<double>());
        }
        config = PhaseConfig::continuous(std::move(v));
    }
    else
    {
        throw ParseError("unknown quantization '" + q.get<std::string>() + "'");
    }
    if (config.size() != n)
        throw ParseError("configuration declares n = " + std::to_string(n) + " but lists " +
                         std::to_string(config.size()) + " elements");
    return config;
}

json candidate_set_to_json(const CandidateSet &set)
{
    json configs = json::array();
    for (const auto &c : set.configs)
        configs.push_back(config_to_json(c));
    return {{"method", to_string(set.method)},
            {"source_note", set.source_note},
            {"n", set.configs.empty() ? 0 : set.configs.front().size()},
            {"operations", set.configs.size()},
            {"configs", configs}};
}

json search_report_to_json(const SearchReport &report)
{
    json j = {{"method", report.method},
              {"n", report.best_config.size()},
              {"best_bits", report.best_config.bit_string()},
              {"best_power_linear", number_or_marker(report.best_power)},
              {"best_power_db", number_or_marker(power_db(report.best_power))},
              {"evaluations", report.evaluations}};
    if (report.passes > 0)
        j["passes"] = report.passes;
    if (!report.trace.empty())
    {
        json trace = json::array();
        for (const auto &[index, power] : report.trace)
            trace.push_back(json::array({index, number_or_marker(power)}));
        j["trace"] = trace;
    }
    return j;
}

json twin_gap_to_json(const TwinGapReport &report)
{
    json records = json::array();
    for (const auto &r : report.records)
        records.push_back({{"seed", r.seed},
                           {"rx_id", r.rx_id},
                           {"gain_db_benchmark", number_or_marker(r.gain_db_benchmark)},
                           {"gain_db_dt_dpo", number_or_marker(r.gain_db_dt_dpo)},
                           {"gain_db_dt_cir", number_or_marker(r.gain_db_dt_cir)},
                           {"ops_benchmark", r.ops_benchmark},
                           {"ops_dt_dpo", r.ops_dt_dpo},
                           {"ops_dt_cir", r.ops_dt_cir},
                           {"benchmark_evaluations", r.benchmark_evaluations}});
    return {{"records", records}};
}

std::string format_fixed(double value, int decimals)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "+inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string twin_gap_csv(const TwinGapReport &report)
{
    std::string out = "seed,rx_id,method,gain_db,ops\n";
    auto row = [&](const TwinGapRecord &r, const char *method, double gain, std::size_t ops) {
        out += std::to_string(r.seed) + "," + std::to_string(r.rx_id) + "," + method + "," + format_fixed(gain, 6) +
               "," + std::to_string(ops) + "\n";
    };
    for (const auto &r : report.records)
    {
        row(r, "benchmark", r.gain_db_benchmark, r.ops_benchmark);
        row(r, "dt_dpo", r.gain_db_dt_dpo, r.ops_dt_dpo);
        row(r, "dt_cir", r.gain_db_dt_cir, r.ops_dt_cir);
    }
    return out;
}

std::string coverage_csv(const CoverageMap &map)
{
    const auto &g = map.grid;
    std::string out = "y\\x";
    for (int ix = 0; ix < g.nx; ++ix)
        out += "," + format_fixed(dot(g.cell_center(ix, 0), g.x_axis), 4);
    out += "\n";
    for (int iy = 0; iy < g.ny; ++iy)
    {
        out += format_fixed(dot(g.cell_center(0, iy), g.y_axis), 4);
        for (int ix = 0; ix < g.nx; ++ix)
            out += "," + format_fixed(map.at(ix, iy), 4);
        out += "\n";
    }
    return out;
}

std::string coverage_ppm(const CoverageMap &map, double floor_db, double ceil_db)
{
    if (!(ceil_db > floor_db))
        throw ArgumentError("heatmap ceiling must exceed the floor");
    const auto &g = map.grid;
    std::string out = "P6\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n255\n";
    for (int iy = g.ny - 1; iy >= 0; --iy)
    {
        for (int ix = 0; ix < g.nx; ++ix)
        {
            const double v = map.at(ix, iy);
            unsigned char rgb[3] = {0, 0, 0};
            if (std::isfinite(v) || v == std::numeric_limits<double>::infinity())
            {
                const double t = std::clamp((v - floor_db) / (ceil_db - floor_db), 0.0, 1.0);
                rgb[0] = static_cast<unsigned char>(std::lround(255.0 * t));
                rgb[1] = static_cast<unsigned char>(std::lround(255.0 * (1.0 - std::abs(2.0 * t - 1.0)) * 0.5));
                rgb[2] = static_cast<unsigned char>(std::lround(255.0 * (1.0 - t)));
            }
            out.append(reinterpret_cast<const char *>(rgb), 3);
        }
    }
    return out;
}

} // namespace ristwin
