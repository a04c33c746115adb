#pragma once

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "seqmine/errors.hpp"
#include "seqmine/gsp.hpp"
#include "seqmine/mining.hpp"
#include "seqmine/naive.hpp"
#include "seqmine/rsp.hpp"
#include "seqmine/sequence_db.hpp"
#include "seqmine/synth.hpp"

namespace seqmine {

using Miner = std::function<MiningResult(const SequenceDatabase&, const MiningConfig&)>;

struct NamedMiner {
    std::string name;
    Miner run;
};

/// Miner registered under `name` ("rsp", "gsp" or "naive").
inline NamedMiner miner_by_name(const std::string& name) {
    if (name == "rsp") return {name, mine_rsp};
    if (name == "gsp") return {name, mine_gsp};
    if (name == "naive") return {name, [](const SequenceDatabase& s, const MiningConfig& c) { return mine_naive(s, c); }};
    throw InvalidParams("unknown algorithm '" + name + "'");
}

struct BenchDataset {
    std::string id;
    std::variant<TransactionDb, SynthParams> source;
};

struct BenchGrid {
    std::vector<BenchDataset> datasets;
    std::vector<TimeWindow> windows;  // empty: each dataset's full span
    std::vector<MinSupport> supports;
    std::vector<std::string> algorithms{"rsp", "gsp"};
    MaxLength max_pattern_length;
    std::size_t repeats = 3;
};

struct BenchRow {
    std::string dataset_id;
    std::size_t D = 0;
    double C = 0.0;
    std::size_t N = 0;
    std::string min_support;
    std::uint32_t threshold = 0;
    std::string algorithm;
    double wall_ms = 0.0;
    std::size_t pattern_count = 0;
    std::size_t scan_count = 0;
    std::size_t peak_counter_count = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    void write_csv(std::ostream& out) const {
        out << "dataset_id,D,C,N,min_support,algorithm,wall_ms,pattern_count,scan_count\n";
        for (const auto& r : rows) {
            char c_buf[32], ms_buf[32];
            std::snprintf(c_buf, sizeof c_buf, "%g", r.C);
            std::snprintf(ms_buf, sizeof ms_buf, "%.3f", r.wall_ms);
            out << r.dataset_id << ',' << r.D << ',' << c_buf << ',' << r.N << ',' << r.min_support << ','
                << r.algorithm << ',' << ms_buf << ',' << r.pattern_count << ',' << r.scan_count << '\n';
        }
    }
};

inline double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

/// Runs every (dataset, window, support) cell with each miner single-threaded,
/// timing only the mining call and reporting the median of `repeats` runs.
/// Throws MismatchError if miners disagree on any cell.
inline BenchReport run_benchmark(const BenchGrid& grid, const std::vector<NamedMiner>& miners) {
    if (grid.datasets.empty() || grid.supports.empty() || miners.empty())
        throw InvalidParams("benchmark grid is empty");
    BenchReport report;
    for (const auto& dataset : grid.datasets) {
        const TransactionDb db = std::holds_alternative<TransactionDb>(dataset.source)
                                     ? std::get<TransactionDb>(dataset.source)
                                     : generate(std::get<SynthParams>(dataset.source));
        std::vector<TimeWindow> windows = grid.windows;
        if (windows.empty() && !db.empty()) windows.push_back(db.span());

        for (const auto& window : windows) {
            const SequenceDatabase seqs = derive_sequence_db(db, window);
            BenchRow base;
            base.dataset_id = dataset.id;
            base.D = seqs.object_count();
            base.C = seqs.empty() ? 0.0 : static_cast<double>(seqs.total_length()) / static_cast<double>(base.D);
            base.N = db.item_count();
            if (const auto* p = std::get_if<SynthParams>(&dataset.source)) {
                base.D = p->D;
                base.C = p->C;
                base.N = p->N;
            }

            for (const auto& support : grid.supports) {
                MiningConfig config;
                config.min_support = support;
                config.max_pattern_length = grid.max_pattern_length;
                config.threads = 1;

                const MiningResult* reference = nullptr;
                std::vector<MiningResult> results;
                results.reserve(miners.size());
                for (const auto& miner : miners) {
                    std::vector<double> times;
                    for (std::size_t rep = 0; rep < std::max<std::size_t>(1, grid.repeats); ++rep) {
                        Stopwatch sw;
                        MiningResult r = miner.run(seqs, config);
                        times.push_back(sw.elapsed_ms());
                        if (rep + 1 == std::max<std::size_t>(1, grid.repeats)) results.push_back(std::move(r));
                    }
                    const MiningResult& r = results.back();
                    if (!reference) {
                        reference = &results.front();
                    } else if (r.patterns != reference->patterns) {
                        throw MismatchError(miner.name + " disagrees with " + miners.front().name + " on " +
                                            dataset.id + " at min_support " + support.to_string() + " (" +
                                            std::to_string(r.patterns.size()) + " vs " +
                                            std::to_string(reference->patterns.size()) + " patterns)");
                    }
                    BenchRow row = base;
                    row.min_support = support.to_string();
                    row.threshold = r.threshold;
                    row.algorithm = miner.name;
                    row.wall_ms = median(times);
                    row.pattern_count = r.patterns.size();
                    row.scan_count = r.scan_count;
                    row.peak_counter_count = r.counter_count;
                    report.rows.push_back(std::move(row));
                }
            }
        }
    }
    return report;
}

inline BenchReport run_benchmark(const BenchGrid& grid) {
    std::vector<NamedMiner> miners;
    for (const auto& name : grid.algorithms) miners.push_back(miner_by_name(name));
    return run_benchmark(grid, miners);
}

}  // namespace seqmine
