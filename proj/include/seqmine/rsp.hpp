#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "seqmine/mining.hpp"
#include "seqmine/sequence.hpp"
#include "seqmine/sequence_db.hpp"

namespace seqmine {

/// Counts, for each item, the number of objects whose sequence contains it,
/// and keeps the items meeting the resolved threshold.
inline FrequentItemTable frequent_items(const SequenceDatabase& seqs, const MiningConfig& config) {
    FrequentItemTable table;
    table.threshold = config.min_support.resolve(seqs.object_count());
    std::vector<std::uint32_t> counts(seqs.dictionary().size(), 0);
    std::vector<std::uint32_t> last_seen(seqs.dictionary().size(), 0);
    std::uint32_t ordinal = 0;
    for (const auto& entry : seqs.entries()) {
        ++ordinal;
        for (Item item : entry.items) {
            if (last_seen[item.code] == ordinal) continue;
            last_seen[item.code] = ordinal;
            ++counts[item.code];
        }
    }
    for (std::uint32_t code = 0; code < counts.size(); ++code)
        if (counts[code] >= table.threshold && counts[code] > 0) table.entries.emplace(Item{code}, counts[code]);
    return table;
}

/// Equivalence class of patterns sharing their first item. Counters live in a
/// trie rooted at the prefix; the node for pattern p holds p's support and
/// the ordinal of the last object that incremented it.
class PrefixPartition {
public:
    explicit PrefixPartition(Item prefix) { nodes_.push_back(Node{prefix, 0, 0, {}}); }

    Item prefix() const noexcept { return nodes_.front().item; }

    /// Number of counters (patterns of length >= 2) held.
    std::size_t counter_count() const noexcept { return nodes_.size() - 1; }

    /// Support counted for `pattern`, 0 if it was never seen or has another prefix.
    std::uint32_t count(std::span<const Item> pattern) const {
        if (pattern.size() < 2 || pattern.front() != prefix()) return 0;
        std::uint32_t node = 0;
        for (std::size_t i = 1; i < pattern.size(); ++i) {
            const auto& kids = nodes_[node].children;
            auto it = std::lower_bound(kids.begin(), kids.end(), pattern[i],
                                       [](const Child& c, Item item) { return c.item < item; });
            if (it == kids.end() || it->item != pattern[i]) return 0;
            node = it->node;
        }
        return nodes_[node].count;
    }

    /// Visits every counted pattern with its count.
    template <typename F>
    void for_each(F&& visit) const {
        Pattern current{prefix()};
        walk(0, current, visit);
    }

    /// Adds one object's distinct subsequences that start with the prefix.
    /// `start` is the leftmost position of the prefix in the sequence; each
    /// counter is bumped at most once per object ordinal.
    void accumulate(const NextOccurrence& index, std::size_t start, std::uint32_t object, std::size_t max_len) {
        if (max_len >= 2) grow(0, index, start + 1, 2, object, max_len);
    }

private:
    struct Child {
        Item item;
        std::uint32_t node;
    };
    struct Node {
        Item item;
        std::uint32_t count;
        std::uint32_t last_object;
        std::vector<Child> children;
    };

    std::uint32_t child(std::uint32_t parent, Item item) {
        auto& kids = nodes_[parent].children;
        auto it = std::lower_bound(kids.begin(), kids.end(), item,
                                   [](const Child& c, Item i) { return c.item < i; });
        if (it != kids.end() && it->item == item) return it->node;
        const auto id = static_cast<std::uint32_t>(nodes_.size());
        kids.insert(it, Child{item, id});
        nodes_.push_back(Node{item, 0, 0, {}});
        return id;
    }

    void grow(std::uint32_t parent, const NextOccurrence& index, std::size_t pos, std::size_t depth,
              std::uint32_t object, std::size_t max_len) {
        const auto alphabet = index.alphabet();
        for (std::size_t slot = 0; slot < alphabet.size(); ++slot) {
            const std::size_t at = index.next(pos, slot);
            if (at >= index.size()) continue;
            const std::uint32_t node = child(parent, alphabet[slot]);
            if (nodes_[node].last_object != object) {
                nodes_[node].last_object = object;
                ++nodes_[node].count;
            }
            if (depth < max_len) grow(node, index, at + 1, depth + 1, object, max_len);
        }
    }

    template <typename F>
    void walk(std::uint32_t node, Pattern& current, F& visit) const {
        for (const auto& c : nodes_[node].children) {
            current.push_back(c.item);
            visit(static_cast<const Pattern&>(current), nodes_[c.node].count);
            walk(c.node, current, visit);
            current.pop_back();
        }
    }

    std::vector<Node> nodes_;
};

/// One pass over the database: each sequence is reduced to its frequent items
/// and its distinct subsequences of length 2..max are counted in the
/// partition of their first item. With config.threads > 1, partitions are
/// split across workers and each partition is mutated by one worker only.
inline std::vector<PrefixPartition> mine_partitioned(const SequenceDatabase& seqs, const FrequentItemTable& frequent,
                                                     const MiningConfig& config) {
    std::vector<PrefixPartition> partitions;
    std::vector<std::uint32_t> slot_of(seqs.dictionary().size(), std::numeric_limits<std::uint32_t>::max());
    for (const auto& [item, count] : frequent.entries) {
        slot_of[item.code] = static_cast<std::uint32_t>(partitions.size());
        partitions.emplace_back(item);
    }

    std::vector<Sequence> reduced;
    reduced.reserve(seqs.object_count());
    for (const auto& entry : seqs.entries()) {
        reduced.push_back(reduce_sequence(entry.items, frequent));
        check_enumeration_cap(reduced.back().size(), config.max_pattern_length, config.enumeration_cap);
    }

    const std::size_t max_len = config.max_pattern_length.value_or(std::numeric_limits<std::size_t>::max());
    if (max_len < 2 || partitions.empty()) return partitions;

    const std::size_t workers = std::clamp<std::size_t>(config.threads, 1, partitions.size());
    auto run = [&](std::size_t worker) {
        for (std::size_t o = 0; o < reduced.size(); ++o) {
            if (reduced[o].empty()) continue;
            NextOccurrence index(reduced[o]);
            const auto alphabet = index.alphabet();
            for (std::size_t slot = 0; slot < alphabet.size(); ++slot) {
                const std::uint32_t p = slot_of[alphabet[slot].code];
                if (p % workers != worker) continue;
                partitions[p].accumulate(index, index.next(0, slot), static_cast<std::uint32_t>(o + 1), max_len);
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    return partitions;
}

/// Frequent-item pruning, prefix partitioning and per-partition support
/// accumulation. Two logical scans: one for item counts, one for patterns.
inline MiningResult mine_rsp(const SequenceDatabase& seqs, const MiningConfig& config) {
    Stopwatch total;
    MiningResult result = make_result(seqs, config, "rsp");

    Stopwatch scan;
    const FrequentItemTable frequent = frequent_items(seqs, config);
    result.timings.scan_ms = scan.elapsed_ms();
    result.scan_count = seqs.empty() ? 0 : 1;

    for (const auto& [item, count] : frequent.entries) result.patterns.emplace(Pattern{item}, count);
    result.counter_count = frequent.size();

    if (!frequent.entries.empty() && config.max_pattern_length.value_or(2) >= 2) {
        Stopwatch count;
        auto partitions = mine_partitioned(seqs, frequent, config);
        ++result.scan_count;
        for (const auto& partition : partitions) {
            result.counter_count += partition.counter_count();
            partition.for_each([&](const Pattern& p, std::uint32_t support) {
                if (support >= result.threshold) result.patterns.emplace(p, support);
            });
        }
        result.timings.count_ms = count.elapsed_ms();
    }
    result.timings.total_ms = total.elapsed_ms();
    return result;
}

}  // namespace seqmine
