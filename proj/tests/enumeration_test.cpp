#include "dscore/enumeration.hpp"

#include <gtest/gtest.h>

#include <set>

#include "testutil.hpp"

using dscore::big_int;
using dscore::ds_stats;
using dscore::md_set;
using testutil::part;

namespace {
md_set md(std::vector<std::int64_t> hooks) { return md_set::from_hooks(std::move(hooks)); }
}  // namespace

TEST(EnumerateDs, SmallFamiliesExactly) {
    EXPECT_EQ(dscore::enumerate_ds(1), (std::vector<md_set>{md({})}));
    EXPECT_EQ(dscore::enumerate_ds(2), (std::vector<md_set>{md({}), md({1})}));
    EXPECT_EQ(dscore::enumerate_ds(5),
              (std::vector<md_set>{md({}), md({1}), md({3}), md({7}), md({7, 1}), md({9})}));
    EXPECT_EQ(dscore::enumerate_ds(7).size(), 13u);
    EXPECT_THROW(dscore::enumerate_ds(0), std::invalid_argument);
}

TEST(EnumerateDs, MatchesKnownPartitionLists) {
    // DS(5) and DS(6) as partitions
    std::set<dscore::partition> got5, got6;
    for (const md_set& m : dscore::enumerate_ds(5)) got5.insert(partition_from_md(m));
    for (const md_set& m : dscore::enumerate_ds(6)) got6.insert(partition_from_md(m));
    const std::set<dscore::partition> want5{part({}),          part({1}),
                                            part({2, 1}),      part({4, 1, 1, 1}),
                                            part({5, 1, 1, 1, 1}), part({4, 2, 1, 1})};
    const std::set<dscore::partition> want6{
        part({}),           part({1}),           part({2, 1}),
        part({3, 1, 1}),    part({3, 2, 1}),     part({5, 1, 1, 1, 1}),
        part({5, 2, 1, 1, 1}), part({6, 1, 1, 1, 1, 1}), part({6, 4, 2, 2, 1, 1})};
    EXPECT_EQ(got5, want5);
    EXPECT_EQ(got6, want6);
}

TEST(EnumerateDs, CanonicalOrderAndValidity) {
    for (std::int64_t t = 1; t <= 14; ++t) {
        const auto sets = dscore::enumerate_ds(t);
        ASSERT_FALSE(sets.empty());
        EXPECT_TRUE(sets.front().empty());
        std::set<md_set> seen;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            EXPECT_TRUE(dscore::is_ds_member(sets[i], t)) << sets[i].to_string();
            EXPECT_TRUE(seen.insert(sets[i]).second) << "duplicate " << sets[i].to_string();
            if (i + 1 < sets.size()) {
                EXPECT_LT(sets[i].hooks(), sets[i + 1].hooks()) << "order break at " << i;
            }
        }
    }
}

TEST(EnumerateDs, MembersSatisfyTheDefinition) {
    for (std::int64_t t = 1; t <= 10; ++t) {
        for (const md_set& m : dscore::enumerate_ds(t)) {
            EXPECT_TRUE(is_ds_member_definitional(partition_from_md(m), t))
                << m.to_string() << " t=" << t;
        }
    }
}

TEST(StatsDirect, KnownValues) {
    EXPECT_EQ(dscore::stats_direct(2), (ds_stats{2, 2, 1, 1}));
    EXPECT_EQ(dscore::stats_direct(3), (ds_stats{3, 3, 2, 6}));
    EXPECT_EQ(dscore::stats_direct(5), (ds_stats{5, 6, 6, 28}));
}

TEST(StatsRecurrence, KnownValues) {
    EXPECT_EQ(dscore::stats_recurrence(1), (ds_stats{1, 1, 0, 0}));
    EXPECT_EQ(dscore::stats_recurrence(2), (ds_stats{2, 2, 1, 1}));
    EXPECT_EQ(dscore::stats_recurrence(3), (ds_stats{3, 3, 2, 6}));
    EXPECT_EQ(dscore::stats_recurrence(4).total_size, big_int(11));
    EXPECT_EQ(dscore::stats_recurrence(7).count, big_int(13));

    const auto table = dscore::stats_table(10);
    const std::vector<std::int64_t> f{1, 2, 3, 4, 6, 9, 13, 19, 28, 41};
    const std::vector<std::int64_t> g{0, 1, 2, 3, 6, 11, 18, 30, 50, 81};
    const std::vector<std::int64_t> h{0, 1, 6, 11, 28, 61, 122, 228, 436, 779};
    for (std::size_t i = 0; i < 10; ++i) {
        EXPECT_EQ(table[i].count, big_int(f[i])) << "t=" << i + 1;
        EXPECT_EQ(table[i].hook_count, big_int(g[i])) << "t=" << i + 1;
        EXPECT_EQ(table[i].total_size, big_int(h[i])) << "t=" << i + 1;
    }
    EXPECT_EQ(dscore::stats_recurrence(40).count, big_int(3914488));
}

TEST(Stats, DirectEqualsRecurrence) {
    const auto table = dscore::stats_table(20);
    for (std::int64_t t = 1; t <= 20; ++t) {
        EXPECT_EQ(dscore::stats_direct(t), table[static_cast<std::size_t>(t - 1)]) << t;
    }
}

TEST(Stats, CountIsMonotone) {
    const auto table = dscore::stats_table(60);
    for (std::size_t i = 0; i + 1 < table.size(); ++i) {
        EXPECT_LE(table[i].count, table[i + 1].count);
    }
}

TEST(AverageSize, ExactFractions) {
    EXPECT_EQ(dscore::average_size(1), dscore::big_rat(0));
    EXPECT_EQ(dscore::average_size(2), dscore::big_rat(1, 2));
    EXPECT_EQ(dscore::average_size(5), dscore::big_rat(14, 3));
}
