#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "seqmine/mining.hpp"
#include "seqmine/sequence.hpp"
#include "seqmine/sequence_db.hpp"

namespace seqmine {

struct PatternHash {
    std::size_t operator()(const Pattern& p) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (Item item : p) {
            h ^= item.code;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Candidates of a single length, kept sorted in canonical order.
struct CandidateSet {
    std::size_t level = 0;
    std::vector<Pattern> candidates;

    bool empty() const noexcept { return candidates.empty(); }
    std::size_t size() const noexcept { return candidates.size(); }
};

/// Level k -> k+1 join. For k = 1 every ordered pair of frequent items
/// (including a:a). For k >= 2, s1 joins s2 when s1 without its first item
/// equals s2 without its last item; the candidate is s1 extended by s2's
/// last item.
inline CandidateSet join_level(const std::vector<Pattern>& frequent_k) {
    CandidateSet out;
    if (frequent_k.empty()) return out;
    const std::size_t k = frequent_k.front().size();
    out.level = k + 1;

    if (k == 1) {
        for (const auto& a : frequent_k)
            for (const auto& b : frequent_k) out.candidates.push_back({a[0], b[0]});
    } else {
        std::unordered_map<Pattern, std::vector<Item>, PatternHash> by_head;
        for (const auto& s2 : frequent_k) by_head[Pattern(s2.begin(), s2.end() - 1)].push_back(s2.back());
        for (const auto& s1 : frequent_k) {
            auto it = by_head.find(Pattern(s1.begin() + 1, s1.end()));
            if (it == by_head.end()) continue;
            for (Item last : it->second) {
                Pattern c = s1;
                c.push_back(last);
                out.candidates.push_back(std::move(c));
            }
        }
    }
    std::sort(out.candidates.begin(), out.candidates.end(), CanonicalLess{});
    out.candidates.erase(std::unique(out.candidates.begin(), out.candidates.end()), out.candidates.end());
    return out;
}

/// Drops candidates with any length-k subsequence outside frequent_k.
/// Without gap constraints every such subsequence must be frequent.
inline CandidateSet prune_level(const CandidateSet& candidates, const std::vector<Pattern>& frequent_k) {
    std::unordered_set<Pattern, PatternHash> known(frequent_k.begin(), frequent_k.end());
    CandidateSet out;
    out.level = candidates.level;
    Pattern sub;
    for (const auto& c : candidates.candidates) {
        bool keep = true;
        for (std::size_t drop = 0; keep && drop < c.size(); ++drop) {
            sub.clear();
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) sub.push_back(c[i]);
            keep = known.contains(sub);
        }
        if (keep) out.candidates.push_back(c);
    }
    return out;
}

/// Level-wise generate-and-test baseline. Every level costs one full pass
/// over the database; containment is tested per candidate with
/// is_subsequence.
inline MiningResult mine_gsp(const SequenceDatabase& seqs, const MiningConfig& config) {
    Stopwatch total;
    MiningResult result = make_result(seqs, config, "gsp");
    const std::size_t max_len = config.max_pattern_length.value_or(std::numeric_limits<std::size_t>::max());

    Stopwatch first_scan;
    std::vector<std::uint32_t> item_counts(seqs.dictionary().size(), 0);
    {
        std::vector<std::uint32_t> last_seen(item_counts.size(), 0);
        std::uint32_t ordinal = 0;
        for (const auto& entry : seqs.entries()) {
            ++ordinal;
            for (Item item : entry.items)
                if (last_seen[item.code] != ordinal) {
                    last_seen[item.code] = ordinal;
                    ++item_counts[item.code];
                }
        }
    }
    result.scan_count = 1;
    result.counter_count = item_counts.size();

    std::vector<Pattern> frequent;
    for (std::uint32_t code = 0; code < item_counts.size(); ++code)
        if (item_counts[code] > 0 && item_counts[code] >= result.threshold) {
            frequent.push_back({Item{code}});
            result.patterns.emplace(frequent.back(), item_counts[code]);
        }
    result.timings.scan_ms = first_scan.elapsed_ms();

    Stopwatch counting;
    while (!frequent.empty() && frequent.front().size() < max_len) {
        CandidateSet candidates = prune_level(join_level(frequent), frequent);
        result.counter_count = std::max(result.counter_count, candidates.size());

        std::vector<std::uint32_t> counts(candidates.size(), 0);
        for (const auto& entry : seqs.entries())
            for (std::size_t c = 0; c < candidates.size(); ++c)
                if (is_subsequence(candidates.candidates[c], entry.items)) ++counts[c];
        ++result.scan_count;

        std::vector<Pattern> next;
        for (std::size_t c = 0; c < candidates.size(); ++c)
            if (counts[c] >= result.threshold) {
                result.patterns.emplace(candidates.candidates[c], counts[c]);
                next.push_back(std::move(candidates.candidates[c]));
            }
        frequent = std::move(next);
    }
    result.timings.count_ms = counting.elapsed_ms();
    result.timings.total_ms = total.elapsed_ms();
    return result;
}

}  // namespace seqmine
