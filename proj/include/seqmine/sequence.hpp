#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqmine/errors.hpp"
#include "seqmine/item.hpp"

namespace seqmine {

/// Maximum pattern length; nullopt means unbounded.
using MaxLength = std::optional<std::size_t>;

/// Longest sequence whose subsequences may be enumerated without a length bound.
inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// Output order for patterns: shorter first, then lexicographic by item.
struct CanonicalLess {
    bool operator()(std::span<const Item> a, std::span<const Item> b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
    bool operator()(const Pattern& a, const Pattern& b) const {
        return (*this)(std::span<const Item>(a), std::span<const Item>(b));
    }
};

/// Items that met the support threshold, with their object counts.
struct FrequentItemTable {
    std::map<Item, std::uint32_t> entries;
    std::uint32_t threshold = 1;

    bool contains(Item item) const { return entries.contains(item); }
    std::size_t size() const noexcept { return entries.size(); }
};

/// True iff `candidate` embeds into `target` at strictly increasing positions.
inline bool is_subsequence(std::span<const Item> candidate, std::span<const Item> target) {
    auto it = target.begin();
    for (Item wanted : candidate) {
        it = std::find(it, target.end(), wanted);
        if (it == target.end()) return false;
        ++it;
    }
    return true;
}

/// Drops every item not in `frequent`, keeping order. Empty result means
/// nothing survived.
inline Sequence reduce_sequence(std::span<const Item> seq, const FrequentItemTable& frequent) {
    Sequence out;
    out.reserve(seq.size());
    for (Item item : seq)
        if (frequent.contains(item)) out.push_back(item);
    return out;
}

inline Item prefix_key(std::span<const Item> pattern) { return pattern.front(); }

/// Next-occurrence index over one sequence: for any position and any item of
/// the sequence's alphabet, where that item next appears.
class NextOccurrence {
public:
    explicit NextOccurrence(std::span<const Item> seq) : size_(seq.size()) {
        alphabet_.assign(seq.begin(), seq.end());
        std::sort(alphabet_.begin(), alphabet_.end());
        alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());

        const std::size_t width = alphabet_.size();
        table_.assign((size_ + 1) * width, static_cast<std::uint32_t>(size_));
        for (std::size_t pos = size_; pos-- > 0;) {
            std::copy_n(table_.begin() + (pos + 1) * width, width, table_.begin() + pos * width);
            auto slot = std::lower_bound(alphabet_.begin(), alphabet_.end(), seq[pos]) - alphabet_.begin();
            table_[pos * width + slot] = static_cast<std::uint32_t>(pos);
        }
    }

    std::span<const Item> alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return size_; }

    /// First index >= pos holding alphabet()[slot], or size() if none.
    std::size_t next(std::size_t pos, std::size_t slot) const {
        return table_[pos * alphabet_.size() + slot];
    }

private:
    std::size_t size_;
    std::vector<Item> alphabet_;
    std::vector<std::uint32_t> table_;
};

namespace detail {

template <typename Visitor>
void walk_distinct(const NextOccurrence& index, std::size_t pos, std::size_t max_len,
                   Pattern& current, Visitor& visit) {
    const auto alphabet = index.alphabet();
    for (std::size_t slot = 0; slot < alphabet.size(); ++slot) {
        const std::size_t at = index.next(pos, slot);
        if (at >= index.size()) continue;
        current.push_back(alphabet[slot]);
        visit(static_cast<const Pattern&>(current));
        if (current.size() < max_len) walk_distinct(index, at + 1, max_len, current, visit);
        current.pop_back();
    }
}

}  // namespace detail

inline void check_enumeration_cap(std::size_t length, MaxLength max_len, std::size_t cap) {
    if (!max_len && length > cap)
        throw CapExceeded("sequence of length " + std::to_string(length) +
                          " exceeds enumeration cap " + std::to_string(cap) +
                          " with unbounded pattern length");
}

/// Calls `visit(pattern)` once for every distinct non-empty subsequence of
/// `seq` of length <= max_len. Each pattern is reached through its leftmost
/// embedding only, so repeats in `seq` never produce duplicates.
template <typename Visitor>
void for_each_distinct_subsequence(std::span<const Item> seq, MaxLength max_len, Visitor visit,
                                   std::size_t cap = kDefaultEnumerationCap) {
    check_enumeration_cap(seq.size(), max_len, cap);
    const std::size_t limit = max_len.value_or(seq.size());
    if (seq.empty() || limit == 0) return;
    NextOccurrence index(seq);
    Pattern current;
    current.reserve(limit);
    detail::walk_distinct(index, 0, limit, current, visit);
}

/// All distinct subsequences of length <= max_len, in canonical order.
inline std::vector<Pattern> enumerate_distinct_subsequences(std::span<const Item> seq, MaxLength max_len,
                                                            std::size_t cap = kDefaultEnumerationCap) {
    std::vector<Pattern> out;
    for_each_distinct_subsequence(seq, max_len, [&](const Pattern& p) { out.push_back(p); }, cap);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

/// Canonical text form, e.g. "10:20:50".
inline std::string format_pattern(std::span<const Item> pattern, const ItemDictionary& dict) {
    std::string out;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i) out += ':';
        out += dict.token(pattern[i]);
    }
    return out;
}

/// Inverse of format_pattern. Throws InvalidParams on unknown items.
inline Pattern parse_pattern(std::string_view text, const ItemDictionary& dict) {
    Pattern out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(':', start);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(start, end - start);
        if (token.empty()) throw InvalidParams("empty item in pattern '" + std::string(text) + "'");
        out.push_back(dict.at(token));
        start = end + 1;
    }
    return out;
}

}  // namespace seqmine
