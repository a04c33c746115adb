#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include "json.hpp"
#include "seqmine/mining.hpp"
#include "seqmine/sequence_db.hpp"

namespace seqmine {

inline std::string format_relative(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

/// `pattern,support,relative_support`, shortest patterns first.
inline void write_result_csv(std::ostream& out, const MiningResult& result) {
    out << "pattern,support,relative_support\n";
    for (const auto& [pattern, support] : result.patterns)
        out << result.format(pattern) << ',' << support << ',' << format_relative(result.relative_support(support))
            << '\n';
}

inline nlohmann::json window_to_json(const TimeWindow& window) {
    return {{"start", window.start_text()}, {"end", window.end_text()}, {"interval_days", window.interval_days()}};
}

inline nlohmann::json result_to_json(const MiningResult& result) {
    nlohmann::json min_support;
    if (result.config.min_support.is_fraction())
        min_support = result.config.min_support.fraction_value();
    else
        min_support = result.config.min_support.count_value();

    nlohmann::json patterns = nlohmann::json::array();
    for (const auto& [pattern, support] : result.patterns)
        patterns.push_back({{"pattern", result.format(pattern)},
                            {"length", pattern.size()},
                            {"support", support},
                            {"relative_support", result.relative_support(support)}});

    nlohmann::json max_len = nullptr;
    if (result.config.max_pattern_length) max_len = *result.config.max_pattern_length;

    return {{"algorithm", result.algorithm},
            {"window", window_to_json(result.window)},
            {"config", {{"min_support", min_support}, {"threshold", result.threshold}, {"max_len", max_len}}},
            {"object_count", result.object_count},
            {"scan_count", result.scan_count},
            {"counter_count", result.counter_count},
            {"timings",
             {{"scan_ms", result.timings.scan_ms},
              {"count_ms", result.timings.count_ms},
              {"total_ms", result.timings.total_ms}}},
            {"patterns", std::move(patterns)}};
}

inline nlohmann::json preview_to_json(const PreviewReport& report, const ItemDictionary& dict) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : report.sample)
        rows.push_back({{"object_id", e.object_id},
                        {"interval_days", report.stats.interval_days},
                        {"sequence", format_pattern(e.items, dict)},
                        {"length", e.items.size()}});
    const auto& s = report.stats;
    return {{"window", window_to_json(report.window)},
            {"sample", std::move(rows)},
            {"stats",
             {{"object_count", s.object_count},
              {"min_length", s.min_length},
              {"avg_length", s.avg_length},
              {"max_length", s.max_length},
              {"distinct_items", s.distinct_items},
              {"interval_days", s.interval_days}}}};
}

}  // namespace seqmine
