#include "dscore/extremal.hpp"

#include <gtest/gtest.h>

#include <map>

using dscore::extremal_case;
using dscore::md_set;

namespace {
md_set md(std::vector<std::int64_t> hooks) { return md_set::from_hooks(std::move(hooks)); }
}  // namespace

TEST(Classify, WorkedCases) {
    const auto r24 = dscore::classify_extremal(24);
    EXPECT_EQ(r24.gap4_floor, 4);
    EXPECT_EQ(r24.surplus, 3);
    EXPECT_EQ(r24.tag, extremal_case::a);
    EXPECT_EQ(r24.gap4_len, 4);
    EXPECT_EQ(r24.endpoint, 17);

    const auto r26 = dscore::classify_extremal(26);
    EXPECT_EQ(r26.gap4_floor, 4);
    EXPECT_EQ(r26.surplus, 4);
    EXPECT_EQ(r26.tag, extremal_case::b);
    EXPECT_EQ(r26.gap4_len, 6);
    EXPECT_EQ(r26.endpoint, 25);

    const auto r28 = dscore::classify_extremal(28);
    EXPECT_EQ(r28.gap4_floor, 4);
    EXPECT_EQ(r28.surplus, 5);
    EXPECT_EQ(r28.tag, extremal_case::c);
    EXPECT_EQ(r28.gap4_len, 5);
    EXPECT_EQ(r28.endpoint, 21);

    EXPECT_EQ(dscore::classify_extremal(8).tag, extremal_case::b_small);
    EXPECT_EQ(dscore::classify_extremal(8).endpoint, 11);
    EXPECT_EQ(dscore::classify_extremal(12).tag, extremal_case::b_small);
    EXPECT_EQ(dscore::classify_extremal(12).endpoint, 15);
    for (std::int64_t t = 1; t <= 5; ++t) {
        EXPECT_EQ(dscore::classify_extremal(t).tag, extremal_case::tiny) << t;
    }
    EXPECT_THROW(dscore::classify_extremal(0), std::invalid_argument);
}

TEST(ExtremalMd, ReferenceTable) {
    const std::map<std::int64_t, md_set> expected{
        {3, md({5})},
        {4, md({7})},
        {5, md({9})},
        {6, md({11, 5})},
        {7, md({13, 9})},
        {8, md({15, 11})},
        {9, md({17, 11, 5})},
        {10, md({19, 15, 9})},
        {11, md({21, 17, 13})},
        {12, md({23, 19, 15})},
        {13, md({25, 21, 15, 9})},
        {14, md({27, 23, 19, 13})},
        {15, md({29, 25, 21, 17})},
        {16, md({31, 27, 21, 15, 9})},
        {17, md({33, 29, 25, 19, 13})},
        {18, md({35, 31, 27, 23, 17})},
        {19, md({37, 33, 29, 25, 21})},
        {20, md({39, 35, 31, 25, 19, 13})},
        {21, md({41, 37, 33, 29, 23, 17})},
        {22, md({43, 39, 35, 31, 27, 21})},
        {23, md({45, 41, 37, 31, 25, 19, 13})},
        {24, md({47, 43, 39, 35, 29, 23, 17})},
        {25, md({49, 45, 41, 37, 33, 27, 21})},
        {26, md({51, 47, 43, 39, 35, 31, 25})},
    };
    const std::map<std::int64_t, std::int64_t> sizes{
        {3, 5},    {4, 7},    {5, 9},    {6, 16},   {7, 22},   {8, 26},
        {9, 33},   {10, 43},  {11, 51},  {12, 57},  {13, 70},  {14, 82},
        {15, 92},  {16, 103}, {17, 119}, {18, 133}, {19, 145}, {20, 162},
        {21, 180}, {22, 196}, {23, 211}, {24, 233}, {25, 253}, {26, 271},
    };
    for (const auto& [t, want] : expected) {
        EXPECT_EQ(dscore::extremal_md(t), want) << "t=" << t;
        EXPECT_EQ(dscore::extremal_size(t), sizes.at(t)) << "t=" << t;
    }
    EXPECT_EQ(dscore::extremal_md(1), md({}));
    EXPECT_EQ(dscore::extremal_md(2), md({1}));
    EXPECT_EQ(dscore::extremal_size(1), 0);
    EXPECT_EQ(dscore::extremal_size(2), 1);
    EXPECT_EQ(dscore::extremal_size(28), 316);
}

TEST(ExtremalMd, GreedyOracleOnAllGapFourCases) {
    EXPECT_EQ(dscore::extremal_md_greedy(8), md({15, 11}));
    EXPECT_EQ(dscore::extremal_md_greedy(12), md({23, 19, 15}));
}

TEST(ExtremalMd, ConstructionSelfConsistency) {
    for (std::int64_t t = 1; t <= 10000; ++t) {
        const md_set m = dscore::extremal_md(t);  // membership asserted inside
        if (t >= 3) {
            ASSERT_FALSE(m.empty());
            EXPECT_EQ(m.hooks().front(), 2 * t - 1);
        }
        bool seen6 = false;
        std::int64_t run = 1;
        const auto d = diff_seq(m);
        for (std::size_t i = 0; i < d.size(); ++i) {
            ASSERT_TRUE(d[i] == 4 || d[i] == 6) << "t=" << t;
            if (d[i] == 6) seen6 = true;
            else {
                ASSERT_FALSE(seen6) << "gap 4 after 6 at t=" << t;
                ++run;
            }
        }
        EXPECT_EQ(m.sum(), dscore::extremal_size(t)) << t;
        if (t >= 6 && m.count() >= 2) {
            const auto r = dscore::classify_extremal(t);
            EXPECT_EQ(run, std::min(r.gap4_len, m.count())) << t;
            EXPECT_EQ(m.hooks().back(), r.endpoint) << t;
        }
    }
}

TEST(VerifyExtremal, BruteForceAgreement) {
    const auto c16 = dscore::verify_extremal(16);
    EXPECT_TRUE(c16.ok());
    EXPECT_EQ(c16.maximizer, md({31, 27, 21, 15, 9}));
    EXPECT_EQ(c16.max_size, 103);
    EXPECT_EQ(c16.maximizer_count, 1);

    const auto c20 = dscore::verify_extremal(20);
    EXPECT_TRUE(c20.ok());
    EXPECT_EQ(c20.maximizer, md({39, 35, 31, 25, 19, 13}));
    EXPECT_EQ(c20.max_size, 162);

    const auto c3 = dscore::verify_extremal(3);
    EXPECT_TRUE(c3.ok());
    EXPECT_EQ(c3.maximizer, md({5}));
    EXPECT_EQ(c3.max_size, 5);

    for (std::int64_t t = 3; t <= 20; ++t) {
        const auto c = dscore::verify_extremal(t);
        EXPECT_TRUE(c.ok()) << "t=" << t << ": "
                            << (c.violations.empty() ? "" : c.violations.front());
    }
    EXPECT_THROW(dscore::verify_extremal(2), std::invalid_argument);
}

TEST(ToString, Tags) {
    EXPECT_EQ(dscore::to_string(extremal_case::tiny), "tiny");
    EXPECT_EQ(dscore::to_string(extremal_case::a), "A");
    EXPECT_EQ(dscore::to_string(extremal_case::b), "B");
    EXPECT_EQ(dscore::to_string(extremal_case::b_small), "B-small");
    EXPECT_EQ(dscore::to_string(extremal_case::c), "C");
}
