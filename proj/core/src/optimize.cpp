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

#include "ristwin/optimize.hpp"
#include "ristwin/parallel.hpp"

#include <random>

namespace ristwin
{
namespace
{

// Received power of a bit vector. Performs exactly the arithmetic of
// apply_config for one-bit configurations, so the powers agree bit for bit.
class BitObjective
{
  public:
    explicit BitObjective(const ChannelSnapshot &snapshot) : h_d_(snapshot.h_d)
    {
        if (!snapshot.consistent())
            throw DimensionError("snapshot h and g have different lengths");
        cascade_.reserve(snapshot.element_count());
        for (std::size_t i = 0; i < snapshot.element_count(); ++i)
            cascade_.push_back(snapshot.g[i] * snapshot.h[i]);
    }

    std::size_t size() const { return cascade_.size(); }

    double operator()(const std::vector<std::uint8_t> &bits) const
    {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < cascade_.size(); ++i)
        {
            if (bits[i])
                acc -= cascade_[i];
            else
                acc += cascade_[i];
        }
        return std::norm(h_d_ + acc);
    }

  private:
    Complex h_d_;
    std::vector<Complex> cascade_;
};

// Element 0 is the most significant bit of `mask`.
void mask_to_bits(std::uint64_t mask, std::vector<std::uint8_t> &bits)
{
    const std::size_t n = bits.size();
    for (std::size_t i = 0; i < n; ++i)
        bits[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1u);
}

} // namespace

PhaseConfig analytic_phases(const ChannelSnapshot &snapshot)
{
    if (!snapshot.consistent())
        throw DimensionError("snapshot h and g have different lengths");
    const double alpha_d = snapshot.h_d == Complex{} ? 0.0 : std::arg(snapshot.h_d);
    std::vector<double> phases(snapshot.element_count(), 0.0);
    for (std::size_t i = 0; i < phases.size(); ++i)
    {
        if (snapshot.h[i] == Complex{} || snapshot.g[i] == Complex{})
            continue;
        phases[i] = alpha_d - (std::arg(snapshot.h[i]) + std::arg(snapshot.g[i]));
    }
    return PhaseConfig::continuous(std::move(phases));
}

CandidateSet dt_cir(const ChannelSnapshot &snapshot)
{
    CandidateSet set;
    set.configs.push_back(quantize_phases(analytic_phases(snapshot)));
    set.method = CandidateMethod::dt_cir;
    set.source_note = "analytic phases from the twin's channel, quantized to {0, pi}";
    return set;
}

SearchReport iterative_search(const ChannelSnapshot &snapshot, const PhaseConfig &init, int max_passes)
{
    if (!init.is_one_bit())
        throw ArgumentError("iterative_search needs a one-bit initial configuration");
    if (max_passes < 1)
        throw ArgumentError("iterative_search: max_passes must be >= 1");
    const BitObjective power(snapshot);
    if (init.size() != power.size())
        throw DimensionError("initial configuration size does not match the snapshot");

    SearchReport report;
    report.method = "iterative";
    auto bits = init.bits();
    double current = power(bits);
    report.evaluations = 1;
    report.trace.emplace_back(0, current);

    for (int pass = 1; pass <= max_passes; ++pass)
    {
        report.passes = pass;
        bool flipped = false;
        for (std::size_t i = 0; i < bits.size(); ++i)
        {
            bits[i] ^= 1;
            const double candidate = power(bits);
            ++report.evaluations;
            if (candidate > current)
            {
                current = candidate;
                flipped = true;
            }
            else
            {
                bits[i] ^= 1;
            }
            report.trace.emplace_back(report.evaluations - 1, current);
        }
        if (!flipped)
            break;
    }

    report.best_config = PhaseConfig::from_bits(bits);
    report.best_power = current;
    return report;
}

CandidateSet dt_dpo(const ChannelSnapshot &snapshot, int max_passes)
{
    const auto search = iterative_search(snapshot, all_zero(snapshot.element_count()), max_passes);
    CandidateSet set;
    set.configs = {search.best_config, invert(search.best_config)};
    set.method = CandidateMethod::dt_dpo;
    set.source_note = "iterative search in the twin (" + std::to_string(search.passes) + " passes, " +
                      std::to_string(search.evaluations) + " evaluations) and its binary inverse";
    return set;
}

SearchReport exhaustive_search(const ChannelSnapshot &snapshot, int threads)
{
    const std::size_t n = snapshot.element_count();
    if (n > exhaustive_limit)
        throw SearchGuardError("exhaustive search over N = " + std::to_string(n) + " elements needs 2^" +
                               std::to_string(n) + " evaluations; refusing above N = " +
                               std::to_string(exhaustive_limit) + " (2^" + std::to_string(exhaustive_limit) + ")");
    if (n == 0)
        throw ArgumentError("exhaustive_search: snapshot has no elements");

    const BitObjective power(snapshot);
    const std::uint64_t total = std::uint64_t{1} << n;

    // Contiguous mask blocks; each keeps its first (smallest) maximum, and the
    // blocks are reduced in order, so ties resolve to the smallest mask.
    const std::size_t blocks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(resolve_threads(threads)) * 4);
    const std::uint64_t block_size = (total + blocks - 1) / blocks;
    std::vector<std::pair<double, std::uint64_t>> local(blocks, {-1.0, 0});
    parallel_for(blocks, threads, [&](std::size_t b) {
        const std::uint64_t begin = b * block_size;
        const std::uint64_t end = std::min(total, begin + block_size);
        std::vector<std::uint8_t> bits(n);
        for (std::uint64_t mask = begin; mask < end; ++mask)
        {
            mask_to_bits(mask, bits);
            const double p = power(bits);
            if (p > local[b].first)
                local[b] = {p, mask};
        }
    });

    std::pair<double, std::uint64_t> best{-1.0, 0};
    for (const auto &candidate : local)
        if (candidate.first > best.first)
            best = candidate;

    SearchReport report;
    report.method = "exhaustive";
    std::vector<std::uint8_t> bits(n);
    mask_to_bits(best.second, bits);
    report.best_config = PhaseConfig::from_bits(bits);
    report.best_power = best.first;
    report.evaluations = total;
    return report;
}

SearchReport random_search(const ChannelSnapshot &snapshot, std::uint64_t trials, std::uint64_t seed)
{
    if (trials < 1)
        throw ArgumentError("random_search: trials must be >= 1");
    const BitObjective power(snapshot);
    if (power.size() == 0)
        throw ArgumentError("random_search: snapshot has no elements");

    std::mt19937_64 engine(seed);
    std::vector<std::uint8_t> bits(power.size());
    std::vector<std::uint8_t> best_bits;
    double best = -1.0;
    for (std::uint64_t t = 0; t < trials; ++t)
    {
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
        {
            if (i % 64 == 0)
                word = engine();
            bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
        }
        const double p = power(bits);
        if (p > best)
        {
            best = p;
            best_bits = bits;
        }
    }

    SearchReport report;
    report.method = "random";
    report.best_config = PhaseConfig::from_bits(best_bits);
    report.best_power = best;
    report.evaluations = trials;
    return report;
}

std::size_t best_candidate(const ChannelSnapshot &snapshot, const CandidateSet &set)
{
    check_candidate_set(set);
    std::size_t best = 0;
    double best_power = -1.0;
    for (std::size_t i = 0; i < set.configs.size(); ++i)
    {
        const double p = std::norm(apply_config(snapshot, set.configs[i]));
        if (p > best_power)
        {
            best_power = p;
            best = i;
        }
    }
    return best;
}

} // namespace ristwin
