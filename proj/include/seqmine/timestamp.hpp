#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "seqmine/errors.hpp"
#include "seqmine/item.hpp"

namespace seqmine {

using Timestamp = std::chrono::sys_seconds;

namespace detail {

inline std::optional<int> parse_fixed(std::string_view s, std::size_t pos, std::size_t width) {
    if (pos + width > s.size()) return std::nullopt;
    int value = 0;
    for (std::size_t i = pos; i < pos + width; ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        value = value * 10 + (s[i] - '0');
    }
    return value;
}

inline std::optional<std::chrono::sys_days> make_date(int y, int m, int d) {
    std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                    std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    return std::chrono::sys_days{ymd};
}

// D/M/YYYY, as used in spreadsheet exports of the fault logs.
inline std::optional<std::chrono::sys_days> parse_dmy(std::string_view s) {
    auto first = s.find('/');
    auto second = first == std::string_view::npos ? first : s.find('/', first + 1);
    if (second == std::string_view::npos) return std::nullopt;
    auto d = as_integer(s.substr(0, first));
    auto m = as_integer(s.substr(first + 1, second - first - 1));
    auto y = as_integer(s.substr(second + 1));
    if (!d || !m || !y || s.size() - second - 1 != 4 || *m < 1 || *m > 12 || *d < 1 || *d > 31)
        return std::nullopt;
    return make_date(static_cast<int>(*y), static_cast<int>(*m), static_cast<int>(*d));
}

}  // namespace detail

/// Result of parsing a timestamp: the instant and whether a time of day was given.
struct ParsedTimestamp {
    Timestamp at;
    bool has_time = false;
};

/// Accepts YYYY-MM-DD, YYYY-MM-DDTHH:MM[:SS] (space also allowed as the
/// separator) and D/M/YYYY.
inline std::optional<ParsedTimestamp> parse_timestamp(std::string_view s) {
    using namespace std::chrono;
    if (s.find('/') != std::string_view::npos) {
        auto day = detail::parse_dmy(s);
        if (!day) return std::nullopt;
        return ParsedTimestamp{Timestamp{*day}, false};
    }
    auto y = detail::parse_fixed(s, 0, 4);
    auto m = detail::parse_fixed(s, 5, 2);
    auto d = detail::parse_fixed(s, 8, 2);
    if (!y || !m || !d || s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    auto day = detail::make_date(*y, *m, *d);
    if (!day) return std::nullopt;
    if (s.size() == 10) return ParsedTimestamp{Timestamp{*day}, false};

    if (s[10] != 'T' && s[10] != ' ') return std::nullopt;
    auto hh = detail::parse_fixed(s, 11, 2);
    auto mm = detail::parse_fixed(s, 14, 2);
    if (!hh || !mm || s.size() < 16 || s[13] != ':' || *hh > 23 || *mm > 59) return std::nullopt;
    int ss = 0;
    if (s.size() != 16) {
        auto sec = detail::parse_fixed(s, 17, 2);
        if (!sec || s[16] != ':' || s.size() != 19 || *sec > 59) return std::nullopt;
        ss = *sec;
    }
    return ParsedTimestamp{Timestamp{*day} + hours{*hh} + minutes{*mm} + seconds{ss}, true};
}

inline std::string format_date(Timestamp t) {
    std::chrono::year_month_day ymd{std::chrono::floor<std::chrono::days>(t)};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

/// YYYY-MM-DD at midnight, otherwise YYYY-MM-DDTHH:MM:SS.
inline std::string format_timestamp(Timestamp t) {
    using namespace std::chrono;
    auto day = floor<days>(t);
    auto rest = t - day;
    if (rest == seconds{0}) return format_date(t);
    hh_mm_ss hms{rest};
    char buf[16];
    std::snprintf(buf, sizeof buf, "T%02d:%02d:%02d", static_cast<int>(hms.hours().count()),
                  static_cast<int>(hms.minutes().count()), static_cast<int>(hms.seconds().count()));
    return format_date(t) + buf;
}

/// Inclusive interval [start, end].
struct TimeWindow {
    Timestamp start;
    Timestamp end;

    /// A window given as calendar dates covers the whole of its last day.
    static TimeWindow from_dates(std::chrono::sys_days first, std::chrono::sys_days last) {
        return make(Timestamp{first}, Timestamp{last} + std::chrono::days{1} - std::chrono::seconds{1});
    }

    static TimeWindow make(Timestamp start, Timestamp end) {
        if (end < start)
            throw InvalidParams("window start " + format_timestamp(start) + " is after end " +
                                format_timestamp(end));
        return TimeWindow{start, end};
    }

    /// Parses window bounds; a date-only end bound extends to the end of that day.
    static TimeWindow parse(std::string_view start_text, std::string_view end_text) {
        auto s = parse_timestamp(start_text);
        auto e = parse_timestamp(end_text);
        if (!s) throw InvalidParams("bad window start '" + std::string(start_text) + "'");
        if (!e) throw InvalidParams("bad window end '" + std::string(end_text) + "'");
        Timestamp end = e->has_time ? e->at : e->at + std::chrono::days{1} - std::chrono::seconds{1};
        return make(s->at, end);
    }

    bool contains(Timestamp t) const noexcept { return start <= t && t <= end; }

    bool within(const TimeWindow& other) const noexcept {
        return other.start <= start && end <= other.end;
    }

    /// Whole days from the start date to the end date (t_e - t_s).
    std::int64_t interval_days() const {
        using std::chrono::floor, std::chrono::days;
        return (floor<days>(end) - floor<days>(start)).count();
    }

    std::string start_text() const { return format_timestamp(start); }

    std::string end_text() const {
        auto day = std::chrono::floor<std::chrono::days>(end);
        if (end - day == std::chrono::days{1} - std::chrono::seconds{1}) return format_date(end);
        return format_timestamp(end);
    }

    friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

}  // namespace seqmine
