#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seqmine/errors.hpp"
#include "seqmine/item.hpp"
#include "seqmine/timestamp.hpp"

namespace seqmine {

/// One (object, timestamp, item) observation.
struct TransactionRecord {
    std::string object_id;
    Timestamp at;
    Item item;
};

/// A record before item interning.
struct RawRecord {
    std::string object_id;
    Timestamp at;
    std::string item;
};

/// The raw transaction table. Immutable once built; item and object
/// universes are exactly the projections of the records.
class TransactionDb {
public:
    TransactionDb() : dict_(std::make_shared<ItemDictionary>()) {}

    static TransactionDb from_rows(std::vector<RawRecord> rows) {
        std::vector<std::string> tokens;
        tokens.reserve(rows.size());
        for (const auto& r : rows) tokens.push_back(r.item);
        auto dict = std::make_shared<ItemDictionary>(std::move(tokens));

        TransactionDb db;
        db.dict_ = dict;
        db.records_.reserve(rows.size());
        std::set<std::string, TokenLess> objects;
        for (auto& r : rows) {
            objects.insert(r.object_id);
            db.records_.push_back({std::move(r.object_id), r.at, dict->at(r.item)});
        }
        db.objects_.assign(objects.begin(), objects.end());
        return db;
    }

    const std::vector<TransactionRecord>& records() const noexcept { return records_; }
    const ItemDictionary& dictionary() const noexcept { return *dict_; }
    const DictionaryPtr& dictionary_ptr() const noexcept { return dict_; }

    /// Object ids in natural order.
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    std::size_t item_count() const noexcept { return dict_->size(); }
    bool empty() const noexcept { return records_.empty(); }

    /// Smallest window covering every record. Requires a non-empty db.
    TimeWindow span() const {
        if (records_.empty()) throw EmptyInput("transaction database is empty");
        auto [lo, hi] = std::minmax_element(records_.begin(), records_.end(),
                                            [](const auto& a, const auto& b) { return a.at < b.at; });
        return TimeWindow{lo->at, hi->at};
    }

private:
    std::vector<TransactionRecord> records_;
    std::vector<std::string> objects_;
    DictionaryPtr dict_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    s = s.substr(b, e - b + 1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace detail

/// Reads the `object_id,timestamp,item` CSV format. Every malformed row is
/// collected; the thrown ParseError lists all of them and carries the first
/// offending line number.
inline TransactionDb load_transactions(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    std::vector<RawRecord> rows;
    std::vector<std::string> problems;
    std::size_t first_bad = 0;

    auto bad = [&](const std::string& msg) {
        if (!first_bad) first_bad = lineno;
        problems.push_back("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (lineno == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
        if (detail::trim(view).empty()) continue;
        auto fields = detail::split_csv(view);
        if (!header_seen) {
            header_seen = true;
            if (fields.size() != 3 || fields[0] != "object_id" || fields[1] != "timestamp" || fields[2] != "item")
                throw ParseError(lineno, "expected header 'object_id,timestamp,item'");
            continue;
        }
        if (fields.size() != 3) {
            bad("expected 3 fields, got " + std::to_string(fields.size()));
            continue;
        }
        auto ts = parse_timestamp(fields[1]);
        if (fields[0].empty()) {
            bad("empty object_id");
        } else if (!ts) {
            bad("unparseable timestamp '" + std::string(fields[1]) + "'");
        } else if (fields[2].empty()) {
            bad("empty item");
        } else if (fields[2].find(':') != std::string_view::npos) {
            bad("item '" + std::string(fields[2]) + "' contains ':'");
        } else {
            rows.push_back({std::string(fields[0]), ts->at, std::string(fields[2])});
        }
    }

    if (!problems.empty()) {
        std::string msg = std::to_string(problems.size()) + " malformed row(s)";
        for (const auto& p : problems) msg += "\n  " + p;
        throw ParseError(first_bad, msg);
    }
    if (rows.empty()) throw EmptyInput("no transaction records in input");
    return TransactionDb::from_rows(std::move(rows));
}

inline TransactionDb load_transactions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return load_transactions(in);
}

inline void write_transactions_csv(std::ostream& out, const TransactionDb& db) {
    out << "object_id,timestamp,item\n";
    for (const auto& r : db.records())
        out << r.object_id << ',' << format_timestamp(r.at) << ',' << db.dictionary().token(r.item) << '\n';
}

}  // namespace seqmine
