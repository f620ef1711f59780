#pragma once

// Reference implementations for differential testing. Deliberately
// independent of the breakout machinery: only seqcore types are shared.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "plcs/seqcore.hpp"

namespace plcs::oracle {

/*
 * Full (m+1) x (n+1) LCS length table, L[i][j] = LCS of a[1..i], b[1..j].
 */
struct DpTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> cells;

    std::uint32_t at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
    std::uint32_t& at(std::size_t i, std::size_t j) { return cells[i * cols + j]; }
};

inline DpTable dp_table(const Sequence& a, const Sequence& b) {
    DpTable t{a.size() + 1, b.size() + 1, {}};
    t.cells.assign(t.rows * t.cols, 0);
    for (std::size_t i = 1; i < t.rows; ++i) {
        for (std::size_t j = 1; j < t.cols; ++j) {
            if (a.symbols[i - 1] == b.symbols[j - 1]) {
                t.at(i, j) = t.at(i - 1, j - 1) + 1;
            } else {
                t.at(i, j) = std::max(t.at(i - 1, j), t.at(i, j - 1));
            }
        }
    }
    return t;
}

// Classic O(mn) LCS; backtracks diagonal first, then up, then left.
inline LcsResult dp_lcs(const Sequence& a, const Sequence& b) {
    const DpTable t = dp_table(a, b);
    LcsResult res;
    std::size_t i = a.size();
    std::size_t j = b.size();
    while (i > 0 && j > 0) {
        if (a.symbols[i - 1] == b.symbols[j - 1]) {
            res.subsequence.symbols.push_back(a.symbols[i - 1]);
            res.row_positions.push_back(i);
            res.col_positions.push_back(j);
            --i;
            --j;
        } else if (t.at(i - 1, j) == t.at(i, j)) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(res.subsequence.symbols.begin(), res.subsequence.symbols.end());
    std::reverse(res.row_positions.begin(), res.row_positions.end());
    std::reverse(res.col_positions.begin(), res.col_positions.end());
    res.length = res.subsequence.size();
    return res;
}

/*
 * Leftmost column of grid row `bottom` reachable from (top, start) with a
 * path of weight j, or INF. Computes the maximum path weight into every
 * vertex of the slab explicitly; since any diagonal can be traded for a
 * right+down detour, a vertex is reachable with weight j iff its maximum
 * weight is at least j. Meant for small grids.
 */
inline Reach grid_reach_oracle(const GridModel& g, std::size_t top, std::size_t bottom,
                               std::size_t start, std::size_t j) {
    const std::size_t n = g.n();
    assert(top >= 1 && top <= bottom && bottom <= g.m() + 1);
    assert(start >= 1 && start <= n + 1);

    constexpr int unreachable = -1;
    // best[c] for the current row, columns 1..n+1 at index c
    std::vector<int> best(n + 2, unreachable);
    for (std::size_t c = start; c <= n + 1; ++c) {
        best[c] = 0;
    }
    for (std::size_t r = top; r < bottom; ++r) {
        std::vector<int> next(n + 2, unreachable);
        for (std::size_t c = 1; c <= n + 1; ++c) {
            int v = best[c];  // down
            if (c > 1) {
                v = std::max(v, next[c - 1]);  // right
                if (best[c - 1] != unreachable && g.row_seq().at(r) == g.col_seq().at(c - 1)) {
                    v = std::max(v, best[c - 1] + 1);  // diagonal
                }
            }
            next[c] = v;
        }
        best = std::move(next);
    }
    for (std::size_t c = 1; c <= n + 1; ++c) {
        if (best[c] != unreachable && static_cast<std::size_t>(best[c]) >= j) {
            return Reach(static_cast<std::uint32_t>(c));
        }
    }
    return g.inf();
}

} // namespace plcs::oracle
