#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <random>

#include "plcs/monotone.hpp"
#include "test_support.hpp"

namespace plcs {
namespace {

constexpr std::uint32_t kInf = 1000;

test::Matrix from_rows(std::vector<std::vector<std::uint32_t>> rows) {
    test::Matrix m{rows.size(), rows.front().size(), {}};
    for (const auto& r : rows) {
        for (std::uint32_t v : r) {
            m.cells.push_back(Reach(v));
        }
    }
    return m;
}

ColMins solve(const test::Matrix& m, const ParallelConfig& cfg = {}) {
    return find_col_mins([&](std::size_t r, std::size_t c) { return m(r, c); }, m.cols, m.rows,
                         Reach(kInf), cfg);
}

TEST(FindColMins, SmallMonotoneMatrix) {
    const auto m = from_rows({{1, 2, 5, 9}, {3, 2, 4, 8}, {7, 6, 4, 7}});
    const auto brute = test::brute_col_mins(m);
    // frozen from the brute-force scan; ties in columns 1 and 2 go to the upper row
    ASSERT_EQ(brute.argmin_row, (std::vector<std::uint32_t>{0, 0, 1, 2}));
    const ColMins got = solve(m);
    EXPECT_EQ(got.argmin_row, brute.argmin_row);
    EXPECT_EQ(got.min_value, brute.min_value);
}

TEST(FindColMins, SingleRow) {
    const auto m = from_rows({{4, 1, 9, 9, 2}});
    const ColMins got = solve(m);
    EXPECT_EQ(got.argmin_row, (std::vector<std::uint32_t>(5, 0)));
    EXPECT_EQ(got.min_value, m.cells);
}

TEST(FindColMins, AllInf) {
    const test::Matrix m{4, 6, std::vector<Reach>(24, Reach(kInf))};
    const ColMins got = solve(m);
    for (std::size_t c = 0; c < 6; ++c) {
        EXPECT_EQ(got.min_value[c], Reach(kInf));
        EXPECT_EQ(got.argmin_row[c], 0u);
    }
}

TEST(FindColMins, InfSuffixAfterFiniteColumns) {
    const auto m = from_rows({{9, 8, kInf, kInf}, {3, 5, kInf, kInf}, {4, 4, kInf, kInf}});
    const ColMins got = solve(m);
    const auto brute = test::brute_col_mins(m);
    EXPECT_EQ(got.argmin_row, brute.argmin_row);
    EXPECT_EQ(got.min_value, brute.min_value);
}

TEST(FindColMins, RandomMonotoneMatricesSerialAndForked) {
    std::mt19937_64 rng(21);
    ParallelConfig forked;
    forked.colmins_cutoff = 1;
    forked.scan_cutoff = 2;
    ThreadScope scope(4);
    scope.run([&] {
        for (int iter = 0; iter < 1500; ++iter) {
            const std::size_t rows = 1 + rng() % 64;
            const std::size_t cols = 1 + rng() % 64;
            const auto m = test::random_monotone(rng, rows, cols, kInf);
            const auto brute = test::brute_col_mins(m);
            for (const auto& cfg : {ParallelConfig{}, forked}) {
                const ColMins got = solve(m, cfg);
                ASSERT_EQ(got.argmin_row, brute.argmin_row) << "iter " << iter;
                ASSERT_EQ(got.min_value, brute.min_value) << "iter " << iter;
            }
        }
    });
}

TEST(FindColMins, SubRectangleWritesFromOffsetZero) {
    const auto m = from_rows({{1, 2, 5, 9}, {3, 2, 4, 8}, {7, 6, 4, 7}});
    std::vector<std::uint32_t> arg(2);
    std::vector<Reach> val(2);
    find_col_mins([&](std::size_t r, std::size_t c) { return m(r, c); }, 2, 3, 1, 2, Reach(kInf),
                  std::span<std::uint32_t>(arg), std::span<Reach>(val));
    EXPECT_EQ(arg, (std::vector<std::uint32_t>{1, 2}));
    EXPECT_EQ(val, (std::vector<Reach>{Reach(4), Reach(7)}));
}

TEST(FindColMins, EvaluationCountBound) {
    std::mt19937_64 rng(22);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t rows = 1 + rng() % 64;
        const std::size_t cols = 1 + rng() % 64;
        const auto m = test::random_monotone(rng, rows, cols, kInf);
        std::atomic<std::size_t> evals{0};
        find_col_mins(
            [&](std::size_t r, std::size_t c) {
                evals.fetch_add(1, std::memory_order_relaxed);
                return m(r, c);
            },
            cols, rows, Reach(kInf));
        const double bound = 4.0 * static_cast<double>(rows + cols) * (1.0 + std::log2(static_cast<double>(cols)));
        ASSERT_LE(static_cast<double>(evals.load()), bound) << rows << "x" << cols;
    }
}

TEST(FindMinIndex, Examples) {
    const std::vector<Reach> col{Reach(7), Reach(2), Reach(2)};
    auto cell = [&](std::size_t r, std::size_t) { return col[r]; };
    EXPECT_EQ(find_min_index(cell, 0, 0, 2).index, 1u);
    EXPECT_EQ(find_min_index(cell, 0, 2, 2).index, 2u);
    EXPECT_EQ(find_min_index(cell, 0, 0, 2, 0), (MinIndex{Reach(2), 1}));

    auto all_inf = [](std::size_t, std::size_t) { return Reach(kInf); };
    EXPECT_EQ(find_min_index(all_inf, 3, 4, 9), (MinIndex{Reach(kInf), 4}));
    EXPECT_EQ(find_min_index(all_inf, 3, 4, 9, 0), (MinIndex{Reach(kInf), 4}));
}

struct RowLookup {
    std::vector<std::vector<Reach>> rows;  // rows[start - 1][w]
    Reach reach(std::uint32_t start, std::size_t w) const {
        const auto& r = rows[start - 1];
        return w < r.size() ? r[w] : Reach(kInf);
    }
};

TEST(ComposeCell, InfAndIdentity) {
    const RowLookup lower{{{Reach(1), Reach(3)}, {Reach(2), Reach(4)}, {Reach(3), Reach(kInf)}}};
    const std::vector<Reach> upper{Reach(1), Reach(2), Reach(kInf)};
    const std::span<const Reach> u(upper);

    EXPECT_EQ(compose_cell(u, lower, 2, 2, Reach(kInf)), Reach(kInf));
    EXPECT_EQ(compose_cell(u, lower, 1, 1, Reach(kInf)), upper[1]);
    EXPECT_EQ(compose_cell(u, lower, 0, 1, Reach(kInf)), Reach(3));
    EXPECT_EQ(compose_cell(u, lower, 1, 2, Reach(kInf)), Reach(4));
    EXPECT_EQ(compose_cell(u, lower, 2, 1, Reach(kInf)), Reach(kInf));
    EXPECT_EQ(compose_cell(u, lower, 0, 5, Reach(kInf)), Reach(kInf));
}

} // namespace
} // namespace plcs
