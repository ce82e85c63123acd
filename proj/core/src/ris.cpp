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

#include "ristwin/ris.hpp"

#include <cmath>

namespace ristwin
{

double wrap_phase(double angle)
{
    double r = std::fmod(angle, two_pi);
    if (r < 0.0)
        r += two_pi;
    // fmod of a tiny negative number plus 2 pi can round up to 2 pi itself.
    if (r >= two_pi)
        r = 0.0;
    return r;
}

PhaseConfig PhaseConfig::continuous(std::vector<double> phases)
{
    PhaseConfig c;
    for (double &p : phases)
    {
        if (!std::isfinite(p))
            throw ArgumentError("phase configuration contains a non-finite phase");
        p = wrap_phase(p);
    }
    c.phases_ = std::move(phases);
    c.quantization_ = Quantization::continuous;
    return c;
}

PhaseConfig PhaseConfig::from_bits(const std::vector<std::uint8_t> &bits)
{
    PhaseConfig c;
    c.phases_.reserve(bits.size());
    for (auto b : bits)
    {
        if (b > 1)
            throw ArgumentError("bit values must be 0 or 1");
        c.phases_.push_back(b ? pi : 0.0);
    }
    c.quantization_ = Quantization::one_bit;
    return c;
}

std::vector<std::uint8_t> PhaseConfig::bits() const
{
    if (!is_one_bit())
        throw ArgumentError("bit view requested for a continuous phase configuration");
    std::vector<std::uint8_t> out;
    out.reserve(phases_.size());
    for (double p : phases_)
        out.push_back(p == 0.0 ? 0 : 1);
    return out;
}

std::string PhaseConfig::bit_string() const
{
    std::string s;
    for (auto b : bits())
        s.push_back(b ? '1' : '0');
    return s;
}

void check_candidate_set(const CandidateSet &set)
{
    if (set.configs.empty())
        throw ArgumentError("candidate set is empty");
    for (const auto &c : set.configs)
        if (c.size() != set.configs.front().size())
            throw ArgumentError("candidate set mixes configurations of different size");
}

std::string to_string(Quantization q) { return q == Quantization::one_bit ? "one_bit" : "continuous"; }

std::string to_string(CandidateMethod m)
{
    switch (m)
    {
    case CandidateMethod::dt_dpo:
        return "dt_dpo";
    case CandidateMethod::dt_cir:
        return "dt_cir";
    case CandidateMethod::manual:
        break;
    }
    return "manual";
}

PhaseConfig all_zero(std::size_t n)
{
    if (n == 0)
        throw ArgumentError("all_zero: n must be >= 1");
    return PhaseConfig::from_bits(std::vector<std::uint8_t>(n, 0));
}

PhaseConfig quantize_phases(const PhaseConfig &continuous)
{
    if (continuous.is_one_bit())
        throw ArgumentError("quantize_phases expects a continuous configuration");
    constexpr double quarter = 0.5 * pi;
    constexpr double three_quarter = 1.5 * pi;
    std::vector<std::uint8_t> bits;
    bits.reserve(continuous.size());
    for (double theta : continuous.phases())
        bits.push_back(theta <= quarter || theta >= three_quarter ? 0 : 1);
    return PhaseConfig::from_bits(bits);
}

PhaseConfig invert(const PhaseConfig &config)
{
    auto bits = config.bits();
    for (auto &b : bits)
        b ^= 1;
    return PhaseConfig::from_bits(bits);
}

Complex apply_config(const ChannelSnapshot &snapshot, const PhaseConfig &config)
{
    const std::size_t n = snapshot.element_count();
    if (!snapshot.consistent())
        throw DimensionError("snapshot h and g have different lengths");
    if (config.size() != n)
        throw DimensionError("configuration has " + std::to_string(config.size()) + " elements, snapshot has " +
                             std::to_string(n));

    const auto &phases = config.phases();
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
    {
        const Complex cascade = snapshot.g[i] * snapshot.h[i];
        const double theta = phases[i];
        if (theta == 0.0)
            acc += cascade;
        else if (theta == pi)
            acc -= cascade;
        else
            acc += cascade * std::polar(1.0, theta);
    }
    return snapshot.h_d + acc;
}

std::string bit_grid(const PhaseConfig &config, int rows, int cols)
{
    if (rows < 1 || cols < 1 || static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) != config.size())
        throw DimensionError("bit grid " + std::to_string(rows) + "x" + std::to_string(cols) + " does not match " +
                             std::to_string(config.size()) + " elements");
    const std::string flat = config.bit_string();
    std::string out;
    for (int r = 0; r < rows; ++r)
    {
        out.append(flat, static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols));
        out.push_back('\n');
    }
    return out;
}

} // namespace ristwin
