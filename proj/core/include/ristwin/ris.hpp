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

#include "ristwin/channel.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ristwin
{

enum class Quantization
{
    continuous,
    one_bit,
};

/// Per-element phase shifts theta_i in [0, 2 pi), i.e. the diagonal of Phi.
///
/// One-bit configurations hold exactly 0 or pi; bit 0 is phase 0 (OFF) and
/// bit 1 is phase pi.
class PhaseConfig
{
  public:
    PhaseConfig() = default;

    /// Continuous configuration; phases are wrapped into [0, 2 pi).
    static PhaseConfig continuous(std::vector<double> phases);

    /// One-bit configuration from a 0/1 vector.
    static PhaseConfig from_bits(const std::vector<std::uint8_t> &bits);

    std::size_t size() const { return phases_.size(); }
    Quantization quantization() const { return quantization_; }
    bool is_one_bit() const { return quantization_ == Quantization::one_bit; }
    const std::vector<double> &phases() const { return phases_; }

    /// 0/1 view of a one-bit configuration. Throws ArgumentError otherwise.
    std::vector<std::uint8_t> bits() const;

    /// Bits as a '0'/'1' string in index order.
    std::string bit_string() const;

    friend bool operator==(const PhaseConfig &, const PhaseConfig &) = default;

  private:
    std::vector<double> phases_;
    Quantization quantization_ = Quantization::continuous;
};

enum class CandidateMethod
{
    dt_dpo,
    dt_cir,
    manual,
};

/// Reduced configuration set shipped from the twin to the physical RIS.
struct CandidateSet
{
    std::vector<PhaseConfig> configs;
    CandidateMethod method = CandidateMethod::manual;
    std::string source_note;
};

/// Throws ArgumentError unless the set is non-empty with a common N.
void check_candidate_set(const CandidateSet &set);

std::string to_string(Quantization q);
std::string to_string(CandidateMethod m);

/// Wraps any angle into [0, 2 pi).
double wrap_phase(double angle);

/// Baseline configuration with every element OFF (phase 0).
PhaseConfig all_zero(std::size_t n);

/// Nearest-level projection onto {0, pi}: 0 iff theta is in
/// [0, pi/2] u [3 pi/2, 2 pi); the boundaries resolve to 0.
PhaseConfig quantize_phases(const PhaseConfig &continuous);

/// Binary inverse (0 <-> pi). Throws ArgumentError for continuous configs.
PhaseConfig invert(const PhaseConfig &config);

/// Composite coefficient h_d + sum_i g_i e^{j theta_i} h_i, summed over the
/// elements in index order before h_d is added. One-bit phases are applied
/// as exact signs. Throws DimensionError on an N mismatch.
Complex apply_config(const ChannelSnapshot &snapshot, const PhaseConfig &config);

/// rows x cols '0'/'1' grid, one row per line, row 0 first.
std::string bit_grid(const PhaseConfig &config, int rows, int cols);

} // namespace ristwin
