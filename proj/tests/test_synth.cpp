#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

using namespace seqmine;
using namespace seqmine::testing;

namespace {

std::string csv(const TransactionDb& db) {
    std::ostringstream out;
    write_transactions_csv(out, db);
    return out.str();
}

}  // namespace

TEST(Generate, PaperShapedDataset) {
    SynthParams p;  // C15-I1-N15-D400
    p.seed = 2024;
    auto db = generate(p);
    EXPECT_EQ(db.objects().size(), 400u);
    const double mean = static_cast<double>(db.records().size()) / 400.0;
    EXPECT_NEAR(mean, 15.0, 1.5);
    for (const auto& token : db.dictionary().tokens()) {
        auto v = as_integer(token);
        ASSERT_TRUE(v);
        EXPECT_GE(*v, 0);
        EXPECT_LT(*v, 15);
    }
    EXPECT_EQ(p.label(), "C15-I1-N15-D400");
}

TEST(Generate, MeanWithinTenPercentAcrossShapes) {
    for (double c : {2.0, 5.0, 8.0, 20.0}) {
        SynthParams p;
        p.D = 250;
        p.C = c;
        p.N = 10;
        p.seed = static_cast<std::uint64_t>(c * 17);
        auto db = generate(p);
        EXPECT_EQ(db.objects().size(), 250u);
        EXPECT_NEAR(static_cast<double>(db.records().size()) / 250.0, c, 0.1 * c) << c;
    }
}

TEST(Generate, DeterministicAndSeedSensitive) {
    SynthParams p;
    p.D = 50;
    p.seed = 7;
    EXPECT_EQ(csv(generate(p)), csv(generate(p)));
    auto other = p;
    other.seed = 8;
    EXPECT_NE(csv(generate(p)), csv(generate(other)));
}

TEST(Generate, EmptyAndInvalid) {
    SynthParams p;
    p.D = 0;
    EXPECT_TRUE(generate(p).empty());

    auto bad = [](auto mutate) {
        SynthParams q;
        q.D = 3;
        mutate(q);
        return q;
    };
    EXPECT_THROW(generate(bad([](SynthParams& q) { q.C = 0; })), InvalidParams);
    EXPECT_THROW(generate(bad([](SynthParams& q) { q.N = 0; })), InvalidParams);
    EXPECT_THROW(generate(bad([](SynthParams& q) { q.I = 2; })), InvalidParams);
    EXPECT_THROW(generate(bad([](SynthParams& q) { q.corruption_prob = 1.5; })), InvalidParams);
}

TEST(Generate, ConsecutiveDaysFromEpoch) {
    SynthParams p;
    p.D = 5;
    p.C = 4;
    p.seed = 3;
    auto seqs = derive_sequence_db(generate(p), TimeWindow::parse("2008-01-01", "2008-01-02"));
    for (const auto& e : seqs.entries()) EXPECT_LE(e.items.size(), 2u);
    EXPECT_EQ(seqs.object_count(), 5u);
}

TEST(Generate, CsvRoundTrip) {
    SynthParams p;
    p.D = 20;
    p.seed = 12;
    auto db = generate(p);
    std::istringstream in(csv(db));
    auto back = load_transactions(in);
    EXPECT_EQ(derive_sequence_db(back, back.span()), derive_sequence_db(db, db.span()));
}
