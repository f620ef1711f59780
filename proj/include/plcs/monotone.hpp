#pragma once

// Column minima of an implicitly defined monotone matrix by bisection over
// columns, plus the composition cell that makes the combine step of the
// solver such a matrix.
//
// A matrix is monotone here when the first-wins argmin row of each finite
// column is nondecreasing from left to right, and a column whose minimum is
// INF is followed only by columns whose minima are INF. Cost matrices built
// from breakout rows have both properties.

#include <cassert>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "plcs/breakout.hpp"
#include "plcs/parallel.hpp"
#include "plcs/seqcore.hpp"

namespace plcs {

template <typename F>
concept CellOracle = requires(const F& f, std::size_t row, std::size_t col) {
    { f(row, col) } -> std::convertible_to<Reach>;
};

/*
 * Per-column minima. argmin_row of a column with an INF minimum is the
 * first row of the searched matrix, which is also what a plain first-wins
 * scan reports for an all-INF column.
 */
struct ColMins {
    std::vector<std::uint32_t> argmin_row;
    std::vector<Reach> min_value;

    ColMins() = default;
    explicit ColMins(std::size_t cols) : argmin_row(cols, 0), min_value(cols) {}
};

/*
 * Minimum of column `col` over rows [top, bottom], smallest row on ties.
 * Short segments are scanned directly; long ones are evaluated into a
 * buffer and reduced by the doubling prefix-min scan.
 */
template <CellOracle F>
MinIndex find_min_index(const F& cell, std::size_t col, std::size_t top, std::size_t bottom,
                        std::size_t cutoff = ParallelConfig{}.scan_cutoff) {
    assert(top <= bottom);
    const std::size_t len = bottom - top + 1;
    if (len <= cutoff) {
        MinIndex best{cell(top, col), top};
        for (std::size_t r = top + 1; r <= bottom; ++r) {
            Reach v = cell(r, col);
            if (v < best.value) {
                best = {v, r};
            }
        }
        return best;
    }

    std::vector<Reach> buf(len);
    parallel_for(0, len, cutoff, [&](std::size_t i) { buf[i] = cell(top + i, col); });
    MinIndex mi = prefix_min_scan_index(std::span<const Reach>(buf), cutoff);
    mi.index += top;
    return mi;
}

namespace detail {

template <CellOracle F>
void find_col_mins_rec(const F& cell, std::size_t left, std::size_t right, std::size_t top,
                       std::size_t bottom, std::size_t first_row, Reach inf,
                       std::span<std::uint32_t> argmin, std::span<Reach> minv, std::size_t firstind,
                       const ParallelConfig& cfg) {
    if (right < left) {
        return;
    }
    const std::size_t mid = left + (right - left + 1) / 2;
    const MinIndex mi = find_min_index(cell, mid, top, bottom, cfg.scan_cutoff);
    const std::size_t pos = firstind + (mid - left);
    minv[pos] = mi.value;

    if (mi.value < inf) {
        argmin[pos] = static_cast<std::uint32_t>(mi.index);
        const bool fork = right - left >= cfg.colmins_cutoff;
        fork2(
            fork,
            [&] {
                if (mid > left) {
                    find_col_mins_rec(cell, left, mid - 1, top, mi.index, first_row, inf, argmin,
                                      minv, firstind, cfg);
                }
            },
            [&] {
                find_col_mins_rec(cell, mid + 1, right, mi.index, bottom, first_row, inf, argmin,
                                  minv, pos + 1, cfg);
            });
        return;
    }

    // every column from mid rightwards is INF
    for (std::size_t p = pos; p <= firstind + (right - left); ++p) {
        argmin[p] = static_cast<std::uint32_t>(first_row);
        minv[p] = inf;
    }
    if (mid > left) {
        find_col_mins_rec(cell, left, mid - 1, top, bottom, first_row, inf, argmin, minv, firstind,
                          cfg);
    }
}

} // namespace detail

/*
 * Fills argmin[c - left] and minv[c - left] for every column c in
 * [left, right] of the matrix restricted to rows [top, bottom].
 *
 * Bisects at the upper-middle column. A finite minimum at row r splits the
 * remaining work into columns left of it over rows [top, r] and columns
 * right of it over rows [r, bottom]; the two halves write disjoint output
 * ranges and run as a fork-join pair above cfg.colmins_cutoff columns. An
 * INF minimum settles every column to its right as INF and sends the left
 * half back over the full row range.
 */
template <CellOracle F>
void find_col_mins(const F& cell, std::size_t left, std::size_t right, std::size_t top,
                   std::size_t bottom, Reach inf, std::span<std::uint32_t> argmin,
                   std::span<Reach> minv, const ParallelConfig& cfg = {}) {
    assert(top <= bottom);
    assert(right < left || (argmin.size() >= right - left + 1 && minv.size() >= right - left + 1));
    detail::find_col_mins_rec(cell, left, right, top, bottom, top, inf, argmin, minv, 0, cfg);
}

template <CellOracle F>
ColMins find_col_mins(const F& cell, std::size_t cols, std::size_t rows, Reach inf,
                      const ParallelConfig& cfg = {}) {
    ColMins out(cols);
    if (cols == 0 || rows == 0) {
        for (auto& v : out.min_value) {
            v = inf;
        }
        return out;
    }
    find_col_mins(cell, 0, cols - 1, 0, rows - 1, inf, std::span<std::uint32_t>(out.argmin_row),
                  std::span<Reach>(out.min_value), cfg);
    return out;
}

/*
 * One candidate of the combine step: leave the upper slab from start column
 * upper[0] with weight k, then continue through the lower slab with weight
 * j - k. `lower` answers lower.reach(start, w), INF past its own width.
 * With the 0th breakout being the identity, k = 0 is the pure lower-slab
 * path and k = j the pure upper-slab path, so min over k in [0, j] covers
 * every split.
 */
template <typename Lower>
Reach compose_cell(std::span<const Reach> upper, const Lower& lower, std::size_t k, std::size_t j,
                   Reach inf) {
    if (k > j || k >= upper.size()) {
        return inf;
    }
    const Reach mid = upper[k];
    if (mid >= inf) {
        return inf;
    }
    return lower.reach(mid.column(), j - k);
}

} // namespace plcs
