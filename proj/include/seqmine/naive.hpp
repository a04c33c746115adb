#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "seqmine/mining.hpp"
#include "seqmine/sequence.hpp"
#include "seqmine/sequence_db.hpp"

namespace seqmine {

/// Longest raw sequence the brute-force miner accepts.
inline constexpr std::size_t kNaiveLengthCap = 20;

/// Brute-force reference miner. Enumerates every position subset of every
/// sequence (no item pruning), then counts each distinct pattern by testing
/// containment object by object. Only for small inputs.
inline MiningResult mine_naive(const SequenceDatabase& seqs, const MiningConfig& config,
                               std::size_t length_cap = kNaiveLengthCap) {
    Stopwatch total;
    MiningResult result = make_result(seqs, config, "naive");
    const std::size_t max_len = config.max_pattern_length.value_or(length_cap);

    for (const auto& entry : seqs.entries())
        if (entry.items.size() > length_cap)
            throw CapExceeded("naive miner: object " + entry.object_id + " has " +
                              std::to_string(entry.items.size()) + " items, cap is " + std::to_string(length_cap));

    std::set<Pattern> universe;
    for (const auto& entry : seqs.entries()) {
        const std::size_t n = entry.items.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) > max_len) continue;
            Pattern p;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) p.push_back(entry.items[i]);
            universe.insert(std::move(p));
        }
    }
    result.scan_count = 1;
    result.counter_count = universe.size();

    for (const auto& p : universe) {
        std::uint32_t support = 0;
        for (const auto& entry : seqs.entries())
            if (is_subsequence(p, entry.items)) ++support;
        if (support >= result.threshold) result.patterns.emplace(p, support);
    }
    result.timings.count_ms = result.timings.total_ms = total.elapsed_ms();
    return result;
}

}  // namespace seqmine
