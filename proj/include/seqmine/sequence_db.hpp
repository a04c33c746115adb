#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "seqmine/errors.hpp"
#include "seqmine/sequence.hpp"
#include "seqmine/transaction_db.hpp"

namespace seqmine {

struct SequenceEntry {
    std::string object_id;
    Sequence items;

    friend bool operator==(const SequenceEntry&, const SequenceEntry&) = default;
};

/// Per-object item sequences derived under one time window. Entries are in
/// natural object_id order and only objects active in the window appear.
class SequenceDatabase {
public:
    SequenceDatabase() : dict_(std::make_shared<ItemDictionary>()) {}

    SequenceDatabase(std::vector<SequenceEntry> entries, TimeWindow window, DictionaryPtr dict)
        : entries_(std::move(entries)), window_(window), dict_(std::move(dict)) {}

    /// Builds a database directly from token sequences, mainly for tests and
    /// small examples. Objects are numbered 1..n in input order.
    static SequenceDatabase from_tokens(const std::vector<std::vector<std::string>>& sequences,
                                        TimeWindow window = {}) {
        std::vector<std::string> tokens;
        for (const auto& s : sequences) tokens.insert(tokens.end(), s.begin(), s.end());
        auto dict = std::make_shared<ItemDictionary>(std::move(tokens));
        std::vector<SequenceEntry> entries;
        for (std::size_t i = 0; i < sequences.size(); ++i) {
            SequenceEntry e{std::to_string(i + 1), {}};
            for (const auto& t : sequences[i]) e.items.push_back(dict->at(t));
            if (!e.items.empty()) entries.push_back(std::move(e));
        }
        return SequenceDatabase(std::move(entries), window, std::move(dict));
    }

    const std::vector<SequenceEntry>& entries() const noexcept { return entries_; }
    std::size_t object_count() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const TimeWindow& window() const noexcept { return window_; }
    std::int64_t interval_days() const { return window_.interval_days(); }
    const ItemDictionary& dictionary() const noexcept { return *dict_; }
    const DictionaryPtr& dictionary_ptr() const noexcept { return dict_; }

    /// Sequence of one object, or nullptr if the object is absent.
    const Sequence* find(std::string_view object_id) const {
        for (const auto& e : entries_)
            if (e.object_id == object_id) return &e.items;
        return nullptr;
    }

    std::size_t total_length() const noexcept {
        std::size_t n = 0;
        for (const auto& e : entries_) n += e.items.size();
        return n;
    }

    friend bool operator==(const SequenceDatabase& a, const SequenceDatabase& b) {
        return a.entries_ == b.entries_ && a.window_ == b.window_ &&
               a.dict_->tokens() == b.dict_->tokens();
    }

private:
    std::vector<SequenceEntry> entries_;
    TimeWindow window_{};
    DictionaryPtr dict_;
};

/// Filters records to the inclusive window and orders each object's items by
/// (timestamp, item). Objects with no in-window record are omitted.
inline SequenceDatabase derive_sequence_db(const TransactionDb& db, const TimeWindow& window) {
    if (window.end < window.start) throw InvalidParams("window start is after end");
    std::map<std::string_view, std::vector<std::pair<Timestamp, Item>>, TokenLess> grouped;
    for (const auto& r : db.records())
        if (window.contains(r.at)) grouped[r.object_id].emplace_back(r.at, r.item);

    std::vector<SequenceEntry> entries;
    entries.reserve(grouped.size());
    for (auto& [object, events] : grouped) {
        std::sort(events.begin(), events.end());
        SequenceEntry e{std::string(object), {}};
        e.items.reserve(events.size());
        for (const auto& ev : events) e.items.push_back(ev.second);
        entries.push_back(std::move(e));
    }
    return SequenceDatabase(std::move(entries), window, db.dictionary_ptr());
}

struct PreviewStats {
    std::size_t object_count = 0;
    std::size_t min_length = 0;
    double avg_length = 0.0;
    std::size_t max_length = 0;
    std::size_t distinct_items = 0;
    std::int64_t interval_days = 0;
};

struct PreviewReport {
    std::vector<SequenceEntry> sample;
    PreviewStats stats;
    TimeWindow window;
};

inline PreviewStats summarize(const SequenceDatabase& seqs) {
    PreviewStats stats;
    stats.object_count = seqs.object_count();
    stats.interval_days = seqs.interval_days();
    if (seqs.empty()) return stats;
    std::set<Item> items;
    stats.min_length = seqs.entries().front().items.size();
    for (const auto& e : seqs.entries()) {
        stats.min_length = std::min(stats.min_length, e.items.size());
        stats.max_length = std::max(stats.max_length, e.items.size());
        items.insert(e.items.begin(), e.items.end());
    }
    stats.avg_length = static_cast<double>(seqs.total_length()) / static_cast<double>(stats.object_count);
    stats.distinct_items = items.size();
    return stats;
}

/// First k derived sequences by object_id; stats cover the whole derivation.
inline PreviewReport preview_sample(const TransactionDb& db, const TimeWindow& window, std::size_t k) {
    if (k == 0) throw InvalidParams("preview sample size must be at least 1");
    auto seqs = derive_sequence_db(db, window);
    PreviewReport report;
    report.stats = summarize(seqs);
    report.window = window;
    const auto n = std::min(k, seqs.object_count());
    report.sample.assign(seqs.entries().begin(), seqs.entries().begin() + static_cast<std::ptrdiff_t>(n));
    return report;
}

/// `object_id,interval_days,sequence` export.
inline void write_sequence_db_csv(std::ostream& out, const SequenceDatabase& seqs) {
    out << "object_id,interval_days,sequence\n";
    for (const auto& e : seqs.entries())
        out << e.object_id << ',' << seqs.interval_days() << ',' << format_pattern(e.items, seqs.dictionary())
            << '\n';
}

}  // namespace seqmine
