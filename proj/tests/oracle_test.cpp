#include <gtest/gtest.h>

#include <random>

#include "plcs/oracle.hpp"
#include "test_support.hpp"

namespace plcs {
namespace {

TEST(DpLcs, Examples) {
    const auto r = oracle::dp_lcs(Sequence(std::string_view("gatttatgcagg")), Sequence(std::string_view("tcaggatt")));
    EXPECT_EQ(r.length, 5u);
    EXPECT_EQ(oracle::dp_lcs(Sequence(std::string_view("abc")), Sequence(std::string_view("abc"))).subsequence.str(), "abc");
    EXPECT_EQ(oracle::dp_lcs(Sequence(std::string_view("abcd")), Sequence(std::string_view("efgh"))).length, 0u);
    EXPECT_EQ(oracle::dp_lcs(Sequence(), Sequence(std::string_view("abc"))).length, 0u);
}

TEST(DpLcs, IntroductionExample) {
    // abccb / abba share "abb"
    EXPECT_EQ(oracle::dp_lcs(Sequence(std::string_view("abccb")), Sequence(std::string_view("abba"))).length, 3u);
}

TEST(DpLcs, SymmetricAndValid) {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 500; ++iter) {
        const Sequence a = test::random_seq(rng, rng() % 40, 1 + rng() % 4);
        const Sequence b = test::random_seq(rng, rng() % 40, 1 + rng() % 4);
        const auto ab = oracle::dp_lcs(a, b);
        ASSERT_EQ(ab.length, oracle::dp_lcs(b, a).length);
        ASSERT_EQ(validate_lcs_result(ab, a, b), "");
    }
}

TEST(DpTable, Invariants) {
    std::mt19937_64 rng(32);
    const Sequence a = test::random_seq(rng, 30, 3);
    const Sequence b = test::random_seq(rng, 25, 3);
    const auto t = oracle::dp_table(a, b);
    for (std::size_t i = 0; i <= a.size(); ++i) {
        EXPECT_EQ(t.at(i, 0), 0u);
    }
    for (std::size_t j = 0; j <= b.size(); ++j) {
        EXPECT_EQ(t.at(0, j), 0u);
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const auto v = t.at(i, j);
            EXPECT_TRUE(v == t.at(i - 1, j) || v == t.at(i, j - 1) || v == t.at(i - 1, j - 1) + 1);
            EXPECT_GE(v, t.at(i - 1, j));
            EXPECT_GE(v, t.at(i, j - 1));
        }
    }
}

TEST(GridReachOracle, WorkedGridBreakouts) {
    const GridModel g(Sequence(std::string_view("tcaggatt")), Sequence(std::string_view("gatttatgcagg")));
    const std::vector<std::uint32_t> want{1, 2, 3, 4, 5, 13};
    for (std::size_t j = 0; j < want.size(); ++j) {
        EXPECT_EQ(oracle::grid_reach_oracle(g, 1, 9, 1, j), Reach(want[j])) << "j=" << j;
    }
    EXPECT_EQ(oracle::grid_reach_oracle(g, 1, 9, 1, 6), g.inf());
    // no 5th breakout from (1, 8)
    EXPECT_EQ(oracle::grid_reach_oracle(g, 1, 9, 8, 5), g.inf());
}

TEST(GridReachOracle, IdentityAndSymbolFree) {
    const GridModel g(Sequence(std::string_view("xyz")), Sequence(std::string_view("abcabc")));
    for (std::size_t s = 1; s <= 7; ++s) {
        EXPECT_EQ(oracle::grid_reach_oracle(g, 1, 4, s, 0), Reach(static_cast<std::uint32_t>(s)));
        EXPECT_EQ(oracle::grid_reach_oracle(g, 1, 4, s, 1), g.inf());
    }
}

TEST(GridReachOracle, FiniteExactlyUpToLcsLength) {
    std::mt19937_64 rng(33);
    for (int iter = 0; iter < 300; ++iter) {
        const Sequence a = test::random_seq(rng, rng() % 12, 3);
        const Sequence b = test::random_seq(rng, rng() % 12, 3);
        const GridModel g(a, b);
        const std::size_t len = oracle::dp_lcs(a, b).length;
        for (std::size_t j = 0; j <= len + 1; ++j) {
            ASSERT_EQ(oracle::grid_reach_oracle(g, 1, a.size() + 1, 1, j) < g.inf(), j <= len);
        }
    }
}

} // namespace
} // namespace plcs
