#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"

using namespace seqmine;
using namespace seqmine::testing;

namespace {

std::map<std::string, std::string> as_rows(const SequenceDatabase& db) {
    std::map<std::string, std::string> out;
    for (const auto& e : db.entries()) out[e.object_id] = format_pattern(e.items, db.dictionary());
    return out;
}

TransactionDb parse(const std::string& text) {
    std::istringstream in(text);
    return load_transactions(in);
}

}  // namespace

TEST(Timestamp, Formats) {
    auto iso = parse_timestamp("2008-05-10");
    auto dmy = parse_timestamp("10/5/2008");
    ASSERT_TRUE(iso && dmy);
    EXPECT_EQ(iso->at, dmy->at);
    EXPECT_FALSE(iso->has_time);
    auto t = parse_timestamp("2008-05-10T13:45:02");
    ASSERT_TRUE(t);
    EXPECT_EQ(format_timestamp(t->at), "2008-05-10T13:45:02");
    EXPECT_TRUE(parse_timestamp("2008-05-10 13:45"));
    for (auto bad : {"not-a-date", "2008-02-30", "2008-13-01", "32/1/2008", "2008-05-10T25:00", "", "2008-5-1"})
        EXPECT_FALSE(parse_timestamp(bad)) << bad;
}

TEST(TimeWindow, InclusiveDatesAndInterval) {
    auto w = TimeWindow::parse("2008-05-10", "2008-05-25");
    EXPECT_EQ(w.interval_days(), 15);
    EXPECT_TRUE(w.contains(parse_timestamp("2008-05-25T23:00")->at));
    EXPECT_FALSE(w.contains(parse_timestamp("2008-05-26")->at));
    EXPECT_EQ(w.start_text(), "2008-05-10");
    EXPECT_EQ(w.end_text(), "2008-05-25");
    EXPECT_THROW(TimeWindow::parse("2008-05-25", "2008-05-10"), InvalidParams);
    EXPECT_THROW(TimeWindow::parse("yesterday", "2008-05-10"), InvalidParams);
}

TEST(LoadTransactions, TableOne) {
    auto db = table1();
    EXPECT_EQ(db.records().size(), 14u);
    EXPECT_EQ(db.objects(), (std::vector<std::string>{"1", "2", "3", "4"}));
    EXPECT_EQ(db.item_count(), 7u);
    EXPECT_EQ(db.span().start_text(), "2008-05-10");
    EXPECT_EQ(format_timestamp(db.span().end), "2008-05-25");
}

TEST(LoadTransactions, Errors) {
    EXPECT_THROW(parse(""), EmptyInput);
    EXPECT_THROW(parse("object_id,timestamp,item\n"), EmptyInput);
    EXPECT_THROW(parse("a,b,c\n1,2008-01-01,5\n"), ParseError);
    try {
        parse("object_id,timestamp,item\n1,2008-01-01,5\n1,not-a-date,6\n2,2008-01-02,\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        std::string what = e.what();
        EXPECT_NE(what.find("line 3"), std::string::npos);
        EXPECT_NE(what.find("not-a-date"), std::string::npos);
        EXPECT_NE(what.find("line 4"), std::string::npos);
    }
    EXPECT_THROW(parse("object_id,timestamp,item\n1,2008-01-01,a:b\n"), ParseError);
}

TEST(LoadTransactions, CrlfBomAndRoundTrip) {
    auto db = parse("\xEF\xBB\xBFobject_id,timestamp,item\r\n7,2008-01-01,x\r\n\r\n7,2008-01-02T10:00:00,y\r\n");
    EXPECT_EQ(db.records().size(), 2u);
    std::ostringstream out;
    write_transactions_csv(out, db);
    EXPECT_EQ(out.str(), "object_id,timestamp,item\n7,2008-01-01,x\n7,2008-01-02T10:00:00,y\n");
    auto again = parse(out.str());
    EXPECT_EQ(derive_sequence_db(again, again.span()), derive_sequence_db(db, db.span()));
}

TEST(DeriveSequenceDb, TableTwo) {
    auto seqs = derive_sequence_db(table1(), may(10, 25));
    EXPECT_EQ(as_rows(seqs), (std::map<std::string, std::string>{
                                 {"1", "10:20:30:50:40"}, {"2", "20:40"}, {"3", "10:50:60:70"}, {"4", "10:70:60"}}));
    EXPECT_EQ(seqs.interval_days(), 15);
}

TEST(DeriveSequenceDb, TableThree) {
    auto seqs = derive_sequence_db(table1(), may(15, 25));
    EXPECT_EQ(as_rows(seqs), (std::map<std::string, std::string>{
                                 {"1", "30:50:40"}, {"2", "20:40"}, {"3", "50:60:70"}, {"4", "10:70:60"}}));
    EXPECT_EQ(seqs.interval_days(), 10);
}

TEST(DeriveSequenceDb, EmptyWindowAndTies) {
    EXPECT_TRUE(derive_sequence_db(table1(), may(1, 9)).empty());
    auto db = parse("object_id,timestamp,item\n9,2008-01-01,b\n9,2008-01-01,a\n10,2008-01-01,c\n9,2008-01-01,a\n");
    auto seqs = derive_sequence_db(db, db.span());
    ASSERT_EQ(seqs.object_count(), 2u);
    EXPECT_EQ(seqs.entries()[0].object_id, "9");  // natural order: 9 before 10
    EXPECT_EQ(format_pattern(seqs.entries()[0].items, seqs.dictionary()), "a:a:b");
}

TEST(DeriveSequenceDb, CsvExport) {
    std::ostringstream out;
    write_sequence_db_csv(out, table2());
    EXPECT_EQ(out.str(),
              "object_id,interval_days,sequence\n1,15,10:20:30:50:40\n2,15,20:40\n3,15,10:50:60:70\n4,15,10:70:60\n");
}

TEST(DeriveSequenceDb, WindowMonotonicityAndLengths) {
    SynthParams params;
    params.D = 60;
    params.C = 12;
    params.N = 9;
    params.seed = 99;
    auto db = generate(params);
    std::mt19937_64 rng(5);
    const auto span = db.span();
    const auto days = span.interval_days();
    for (int trial = 0; trial < 200; ++trial) {
        auto pick = [&] { return span.start + std::chrono::days{static_cast<long>(rng() % (days + 1))}; };
        auto a = pick(), b = pick();
        auto outer = TimeWindow::make(std::min(a, b), std::max(a, b));
        auto c = outer.start + std::chrono::days{static_cast<long>(rng() % (outer.interval_days() + 1))};
        auto inner = TimeWindow::make(c, c + std::chrono::days{static_cast<long>(rng() % 5)});
        if (!inner.within(outer)) inner = outer;

        auto big = derive_sequence_db(db, outer);
        auto small = derive_sequence_db(db, inner);
        for (const auto& e : small.entries()) {
            const Sequence* wide = big.find(e.object_id);
            ASSERT_NE(wide, nullptr) << "object set not monotone";
            ASSERT_TRUE(is_subsequence(e.items, *wide));
        }
        std::size_t in_window = 0;
        for (const auto& r : db.records()) in_window += outer.contains(r.at);
        ASSERT_EQ(big.total_length(), in_window);
        ASSERT_EQ(derive_sequence_db(db, outer), big);
    }
}

TEST(PreviewSample, Examples) {
    auto db = table1();
    auto r = preview_sample(db, may(10, 25), 2);
    ASSERT_EQ(r.sample.size(), 2u);
    EXPECT_EQ(r.sample[0].object_id, "1");
    EXPECT_EQ(r.sample[1].object_id, "2");
    EXPECT_EQ(r.stats.object_count, 4u);
    EXPECT_EQ(r.stats.max_length, 5u);
    EXPECT_EQ(r.stats.min_length, 2u);
    EXPECT_EQ(r.stats.distinct_items, 7u);
    EXPECT_EQ(r.stats.interval_days, 15);

    EXPECT_EQ(preview_sample(db, may(10, 25), 50).sample.size(), 4u);

    auto t3 = preview_sample(db, may(15, 25), 4);
    EXPECT_DOUBLE_EQ(t3.stats.avg_length, 2.75);  // (3 + 2 + 3 + 3) / 4
    EXPECT_THROW(preview_sample(db, may(10, 25), 0), InvalidParams);
}
