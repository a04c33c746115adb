#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

using namespace seqmine;
using namespace seqmine::testing;

TEST(MineNaive, TableTwo) {
    auto r = mine_naive(table2(), support(2));
    EXPECT_EQ(as_text(r), as_text(mine_rsp(table2(), support(2))));
    EXPECT_EQ(r.patterns.size(), 10u);
}

TEST(MineNaive, EveryDistinctSubsequenceAtSupportOne) {
    auto db = table2();
    auto r = mine_naive(db, support(1));
    std::set<Pattern> expected;
    for (const auto& e : db.entries())
        for (const auto& p : all_subsequences(e.items)) expected.insert(p);
    EXPECT_EQ(r.patterns.size(), 45u);
    EXPECT_EQ(r.patterns.size(), expected.size());
    for (const auto& [p, s] : r.patterns) {
        EXPECT_TRUE(expected.contains(p));
        EXPECT_GE(s, 1u);
    }
}

TEST(MineNaive, EmptyAndOversized) {
    EXPECT_TRUE(mine_naive(SequenceDatabase{}, support(1)).patterns.empty());
    std::vector<std::string> big(kNaiveLengthCap + 1, "a");
    EXPECT_THROW(mine_naive(SequenceDatabase::from_tokens({big}), support(1)), CapExceeded);
}

TEST(OracleTriangle, RandomInstances) {
    std::size_t nonempty = 0;
    for (std::uint64_t seed = 1000; seed < 1150; ++seed) {
        SynthParams params;
        auto db = random_instance(seed, &params);
        const std::uint64_t s = 1 + seed % 4;
        auto config = support(s, seed % 3 == 0 ? MaxLength{3} : MaxLength{});
        auto naive = mine_naive(db, config);
        ASSERT_EQ(mine_rsp(db, config).patterns, naive.patterns) << "seed " << seed;
        ASSERT_EQ(mine_gsp(db, config).patterns, naive.patterns) << "seed " << seed;
        nonempty += !naive.patterns.empty();
    }
    EXPECT_GT(nonempty, 100u);
}

TEST(OracleTriangle, FractionalThresholds) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        auto db = random_db(rng, 12, 7, 4);
        MiningConfig config;
        config.min_support = MinSupport::fraction(0.1 + 0.15 * (trial % 6));
        auto naive = mine_naive(db, config);
        ASSERT_EQ(mine_rsp(db, config).patterns, naive.patterns);
        ASSERT_EQ(mine_gsp(db, config).patterns, naive.patterns);
    }
}

namespace {

BenchGrid small_grid() {
    SynthParams p;
    p.D = 40;
    p.C = 6;
    p.N = 6;
    p.seed = 5;
    BenchGrid grid;
    grid.datasets.push_back({"small", p});
    grid.supports = {MinSupport::fraction(0.05), MinSupport::fraction(0.2)};
    grid.max_pattern_length = 3;
    grid.repeats = 3;
    return grid;
}

}  // namespace

TEST(RunBenchmark, GridShapeAndCsv) {
    auto report = run_benchmark(small_grid());
    ASSERT_EQ(report.rows.size(), 4u);
    for (std::size_t i = 0; i < report.rows.size(); i += 2) {
        EXPECT_EQ(report.rows[i].algorithm, "rsp");
        EXPECT_EQ(report.rows[i + 1].algorithm, "gsp");
        EXPECT_EQ(report.rows[i].pattern_count, report.rows[i + 1].pattern_count);
        EXPECT_EQ(report.rows[i].scan_count, 2u);
    }
    std::ostringstream out;
    report.write_csv(out);
    auto text = out.str();
    EXPECT_TRUE(text.starts_with("dataset_id,D,C,N,min_support,algorithm,wall_ms,pattern_count,scan_count\n"));
    EXPECT_NE(text.find("small,40,6,6,0.05,rsp,"), std::string::npos);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

TEST(RunBenchmark, SingleAlgorithm) {
    auto grid = small_grid();
    grid.supports = {MinSupport::absolute(2)};
    grid.algorithms = {"rsp"};
    EXPECT_EQ(run_benchmark(grid).rows.size(), 1u);
}

TEST(RunBenchmark, TransactionDbDatasetAndWindow) {
    BenchGrid grid;
    grid.datasets.push_back({"table1", table1()});
    grid.windows = {may(10, 25), may(15, 25)};
    grid.supports = {MinSupport::absolute(2)};
    grid.algorithms = {"rsp", "gsp", "naive"};
    auto report = run_benchmark(grid);
    ASSERT_EQ(report.rows.size(), 6u);
    EXPECT_EQ(report.rows[0].pattern_count, 10u);
    EXPECT_EQ(report.rows[0].D, 4u);
    EXPECT_EQ(report.rows[3].pattern_count, 4u);  // Table III: 40, 50, 60, 70
}

TEST(RunBenchmark, BrokenMinerIsCaught) {
    auto grid = small_grid();
    NamedMiner broken{"broken", [](const SequenceDatabase& s, const MiningConfig& c) {
                          auto r = mine_rsp(s, c);
                          if (!r.patterns.empty()) r.patterns.erase(std::prev(r.patterns.end()));
                          return r;
                      }};
    EXPECT_THROW(run_benchmark(grid, {miner_by_name("gsp"), broken}), MismatchError);
    EXPECT_THROW(miner_by_name("spade"), InvalidParams);
    BenchGrid empty;
    EXPECT_THROW(run_benchmark(empty), InvalidParams);
}

TEST(Median, OddAndEven) {
    EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2.0);
    EXPECT_DOUBLE_EQ(median({4, 1, 3, 2}), 2.5);
}
