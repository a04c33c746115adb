#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "seqmine/errors.hpp"
#include "seqmine/sequence.hpp"
#include "seqmine/sequence_db.hpp"

namespace seqmine {

/// Support threshold given either as an object count or as a fraction of
/// the objects in the database.
class MinSupport {
public:
    MinSupport() = default;

    static MinSupport absolute(std::uint64_t count) {
        if (count < 1) throw InvalidParams("absolute min_support must be >= 1");
        MinSupport s;
        s.fractional_ = false;
        s.count_ = count;
        return s;
    }

    static MinSupport fraction(double f) {
        if (!(f > 0.0 && f <= 1.0)) throw InvalidParams("fractional min_support must be in (0, 1]");
        MinSupport s;
        s.fractional_ = true;
        s.fraction_ = f;
        return s;
    }

    /// "3" is an absolute count; "0.02" and "2%" are fractions.
    static MinSupport parse(std::string_view text) {
        if (text.empty()) throw InvalidParams("empty min_support");
        if (text.back() == '%') return fraction(parse_double(text.substr(0, text.size() - 1)) / 100.0);
        if (text.find_first_of(".eE") != std::string_view::npos) return fraction(parse_double(text));
        auto n = as_integer(text);
        if (!n || *n < 1) throw InvalidParams("bad min_support '" + std::string(text) + "'");
        return absolute(static_cast<std::uint64_t>(*n));
    }

    bool is_fraction() const noexcept { return fractional_; }
    double fraction_value() const noexcept { return fraction_; }
    std::uint64_t count_value() const noexcept { return count_; }

    /// Absolute threshold for a database of `objects` objects:
    /// ceil(fraction * objects), never below 1.
    std::uint32_t resolve(std::size_t objects) const {
        if (!fractional_) return static_cast<std::uint32_t>(std::min<std::uint64_t>(count_, UINT32_MAX));
        // The epsilon absorbs binary rounding, e.g. 0.0025 * 400.
        double raw = std::ceil(fraction_ * static_cast<double>(objects) - 1e-9);
        return static_cast<std::uint32_t>(std::max(1.0, raw));
    }

    std::string to_string() const {
        if (!fractional_) return std::to_string(count_);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", fraction_);
        return buf;
    }

private:
    static double parse_double(std::string_view text) {
        try {
            std::size_t used = 0;
            double v = std::stod(std::string(text), &used);
            if (used != text.size()) throw InvalidParams("bad min_support '" + std::string(text) + "'");
            return v;
        } catch (const std::logic_error&) {
            throw InvalidParams("bad min_support '" + std::string(text) + "'");
        }
    }

    bool fractional_ = false;
    std::uint64_t count_ = 1;
    double fraction_ = 0.0;
};

struct MiningConfig {
    MinSupport min_support = MinSupport::absolute(1);
    MaxLength max_pattern_length;  // unbounded when empty
    std::size_t threads = 1;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
};

struct Timings {
    double scan_ms = 0.0;
    double count_ms = 0.0;
    double total_ms = 0.0;
};

using PatternSupport = std::map<Pattern, std::uint32_t, CanonicalLess>;

struct MiningResult {
    PatternSupport patterns;
    MiningConfig config;
    std::string algorithm;
    TimeWindow window{};
    std::size_t object_count = 0;
    std::uint32_t threshold = 1;
    Timings timings;
    std::size_t scan_count = 0;
    std::size_t counter_count = 0;  // peak number of live support counters
    DictionaryPtr dictionary;

    double relative_support(std::uint32_t support) const {
        return object_count ? static_cast<double>(support) / static_cast<double>(object_count) : 0.0;
    }

    std::string format(const Pattern& p) const { return format_pattern(p, *dictionary); }
};

/// Result skeleton shared by every miner.
inline MiningResult make_result(const SequenceDatabase& seqs, const MiningConfig& config, std::string algorithm) {
    if (config.max_pattern_length && *config.max_pattern_length == 0)
        throw InvalidParams("max_pattern_length must be positive");
    MiningResult r;
    r.config = config;
    r.algorithm = std::move(algorithm);
    r.window = seqs.window();
    r.object_count = seqs.object_count();
    r.threshold = config.min_support.resolve(seqs.object_count());
    r.dictionary = seqs.dictionary_ptr();
    return r;
}

/// Millisecond stopwatch.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace seqmine
