#pragma once

// Two-row base case of the cost matrix and the scan primitives it is built
// from.
//
// For the slab made of grid rows h and h+1, the first breakout of top-row
// column i is the leftmost column of row h+1 reachable from (h, i) through
// exactly one weight-1 diagonal: (min{ p in matches : p >= i }) + 1, or INF
// when no match lies at or right of i.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <type_traits>
#include <vector>

#include "plcs/parallel.hpp"
#include "plcs/seqcore.hpp"

namespace plcs {

/*
 * Breakout columns of one top-row start column: reach[j] is the leftmost
 * bottom-row column reachable with path weight j. reach[0] == start; the
 * finite prefix is nondecreasing and INF is absorbing.
 */
struct BreakoutRow {
    std::uint32_t start = 0;
    std::vector<Reach> reach;

    friend bool operator==(const BreakoutRow&, const BreakoutRow&) = default;
};

/*
 * Inclusive prefix sums. Inputs longer than `cutoff` are scanned in blocks:
 * per-block totals in parallel, a serial scan over the block totals, then a
 * parallel pass adding each block's offset. Integer addition makes the
 * result independent of the block schedule.
 */
template <typename T>
    requires std::is_integral_v<T>
std::vector<T> prefix_sum(std::span<const T> values, std::size_t cutoff = ParallelConfig{}.scan_cutoff) {
    std::vector<T> out(values.begin(), values.end());
    const std::size_t len = out.size();
    if (len <= std::max<std::size_t>(cutoff, 1)) {
        std::partial_sum(out.begin(), out.end(), out.begin());
        return out;
    }

    const std::size_t block = std::max<std::size_t>(cutoff, 1);
    const std::size_t nblocks = (len + block - 1) / block;
    std::vector<T> totals(nblocks, T{0});

    parallel_for(0, nblocks, 1, [&](std::size_t b) {
        const std::size_t lo = b * block;
        const std::size_t hi = std::min(len, lo + block);
        std::partial_sum(out.begin() + lo, out.begin() + hi, out.begin() + lo);
        totals[b] = out[hi - 1];
    });

    T carry{0};
    for (auto& t : totals) {
        T next = carry + t;
        t = carry;
        carry = next;
    }

    parallel_for(1, nblocks, 1, [&](std::size_t b) {
        const std::size_t lo = b * block;
        const std::size_t hi = std::min(len, lo + block);
        for (std::size_t i = lo; i < hi; ++i) {
            out[i] += totals[b];
        }
    });
    return out;
}

template <typename T>
    requires std::is_integral_v<T>
std::vector<T> prefix_sum(const std::vector<T>& values, std::size_t cutoff = ParallelConfig{}.scan_cutoff) {
    return prefix_sum(std::span<const T>(values), cutoff);
}

struct MinIndex {
    Reach value;
    std::size_t index = 0;

    friend bool operator==(const MinIndex&, const MinIndex&) = default;
};

/*
 * Minimum of `values` and the smallest index attaining it.
 *
 * Above `cutoff` this is the doubling prefix-min scan: in the round for bit
 * `exp`, every element j with that bit set folds in the running minimum of
 * the block just before it, at (j & ~exp) | (exp - 1). Writes touch only
 * indices with the bit set and reads only indices with it clear, so a round
 * is a conflict-free parallel loop. The `<=` keeps the earlier element on
 * ties.
 */
inline MinIndex prefix_min_scan_index(std::span<const Reach> values,
                                      std::size_t cutoff = ParallelConfig{}.scan_cutoff) {
    assert(!values.empty());
    const std::size_t len = values.size();

    if (len <= cutoff) {
        MinIndex best{values[0], 0};
        for (std::size_t i = 1; i < len; ++i) {
            if (values[i] < best.value) {
                best = {values[i], i};
            }
        }
        return best;
    }

    std::vector<Reach> prefix(values.begin(), values.end());
    std::vector<std::size_t> min_index(len);
    std::iota(min_index.begin(), min_index.end(), std::size_t{0});

    for (std::size_t exp = 1; exp < len; exp <<= 1) {
        const std::size_t expm1 = exp - 1;
        const std::size_t expnot = ~exp;
        parallel_for(0, len, cutoff, [&](std::size_t j) {
            if ((j & exp) != 0) {
                const std::size_t src = (j & expnot) | expm1;
                if (prefix[src] <= prefix[j]) {
                    prefix[j] = prefix[src];
                    min_index[j] = min_index[src];
                }
            }
        });
    }
    return {prefix[len - 1], min_index[len - 1]};
}

/*
 * First breakouts of every top-row column 1..n for string row h, built as
 * scatter / prefix-sum / fill:
 *   entry 1 gets p_1 + 1 and entry p_{k-1} + 1 gets the gap p_k - p_{k-1};
 *   an inclusive prefix sum turns the gaps into columns;
 *   entries p_r + 1 .. n have no match at or to their right and become INF.
 * `matches` must equal match_positions(g.col_seq(), g.row_seq().at(h)).
 */
inline std::vector<Reach> base_case_row(const GridModel& g, std::size_t h,
                                        std::span<const std::size_t> matches,
                                        std::size_t cutoff = ParallelConfig{}.scan_cutoff) {
    assert(h >= 1 && h <= g.m());
    const std::size_t n = g.n();
    std::vector<Reach> out(n, g.inf());
    if (matches.empty()) {
        return out;
    }

    std::vector<std::uint32_t> gaps(n, 0);
    gaps[0] = static_cast<std::uint32_t>(matches[0] + 1);
    parallel_for(1, matches.size(), cutoff, [&](std::size_t k) {
        gaps[matches[k - 1]] = static_cast<std::uint32_t>(matches[k] - matches[k - 1]);
    });

    const std::vector<std::uint32_t> cols = prefix_sum(std::span<const std::uint32_t>(gaps), cutoff);
    const std::size_t last = matches.back();
    parallel_for(0, last, cutoff, [&](std::size_t i) { out[i] = Reach(cols[i]); });
    return out;
}

inline std::vector<Reach> base_case_row(const GridModel& g, std::size_t h,
                                        std::size_t cutoff = ParallelConfig{}.scan_cutoff) {
    const auto matches = match_positions(g.col_seq(), g.row_seq().at(h));
    return base_case_row(g, h, std::span<const std::size_t>(matches), cutoff);
}

} // namespace plcs
