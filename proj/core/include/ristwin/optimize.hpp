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
#include "ristwin/ris.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ristwin
{

/// Outcome of a search over one-bit configurations.
struct SearchReport
{
    std::string method;
    PhaseConfig best_config;
    double best_power = 0.0;     ///< |composite|^2, linear
    std::uint64_t evaluations = 0; ///< objective evaluations performed
    int passes = 0;              ///< full sweeps (iterative search only)
    /// (evaluation index, best power so far); filled by iterative search.
    std::vector<std::pair<std::uint64_t, double>> trace;
};

/// Largest N accepted by exhaustive_search.
inline constexpr std::size_t exhaustive_limit = 20;

inline constexpr int default_max_passes = 10;

/// Continuous optimum theta_i = arg(h_d) - arg(h_i) - arg(g_i) (mod 2 pi).
/// arg(h_d) is taken as 0 when h_d = 0; elements with h_i g_i = 0 get 0.
PhaseConfig analytic_phases(const ChannelSnapshot &snapshot);

/// Single candidate: the quantized analytic optimum.
CandidateSet dt_cir(const ChannelSnapshot &snapshot);

/// Greedy bit-flip coordinate ascent.
///
/// Sweeps the elements in index order and keeps a flip iff the received
/// power strictly increases. Stops after a sweep without a kept flip or after
/// `max_passes` sweeps. evaluations = 1 + number of flips tested.
SearchReport iterative_search(const ChannelSnapshot &snapshot, const PhaseConfig &init, int max_passes);

/// [best, invert(best)] with best = iterative_search from all_zero.
CandidateSet dt_dpo(const ChannelSnapshot &snapshot, int max_passes);

/// Evaluates all 2^N one-bit configurations. Ties go to the smallest bit
/// vector read as a binary number with element 0 most significant.
/// Throws SearchGuardError for N > exhaustive_limit. `threads` <= 0 selects
/// the hardware concurrency; the result does not depend on it.
SearchReport exhaustive_search(const ChannelSnapshot &snapshot, int threads = 1);

/// Best of `trials` uniformly random one-bit configurations drawn from a
/// std::mt19937_64 seeded with `seed`. First occurrence wins ties.
SearchReport random_search(const ChannelSnapshot &snapshot, std::uint64_t trials, std::uint64_t seed);

/// Index of the highest-power config of `set` on `snapshot` (first on ties).
std::size_t best_candidate(const ChannelSnapshot &snapshot, const CandidateSet &set);

} // namespace ristwin
