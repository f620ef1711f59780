#pragma once

// Test-only helpers: random inputs and brute-force references that do not
// go through the code paths they check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plcs/seqcore.hpp"

namespace plcs::test {

inline Sequence random_seq(std::mt19937_64& rng, std::size_t len, unsigned alphabet) {
    Sequence s;
    for (std::size_t i = 0; i < len; ++i) {
        s.symbols.push_back(static_cast<Symbol>('a' + rng() % alphabet));
    }
    return s;
}

inline Sequence binary_seq(std::size_t len, std::uint32_t bits) {
    Sequence s;
    for (std::size_t i = 0; i < len; ++i) {
        s.symbols.push_back((bits >> i) & 1u ? 'b' : 'a');
    }
    return s;
}

// First breakouts straight from the definition: nearest match at or right
// of i, plus one.
inline std::vector<Reach> base_case_by_formula(const GridModel& g, std::size_t h) {
    const std::size_t n = g.n();
    std::vector<Reach> out(n, g.inf());
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t c = i; c <= n; ++c) {
            if (g.col_seq().at(c) == g.row_seq().at(h)) {
                out[i - 1] = Reach(static_cast<std::uint32_t>(c + 1));
                break;
            }
        }
    }
    return out;
}

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Reach> cells;

    Reach operator()(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
};

struct BruteColMins {
    std::vector<std::uint32_t> argmin_row;
    std::vector<Reach> min_value;
};

inline BruteColMins brute_col_mins(const Matrix& m) {
    BruteColMins out;
    for (std::size_t c = 0; c < m.cols; ++c) {
        std::size_t best = 0;
        for (std::size_t r = 1; r < m.rows; ++r) {
            if (m(r, c) < m(best, c)) {
                best = r;
            }
        }
        out.argmin_row.push_back(static_cast<std::uint32_t>(best));
        out.min_value.push_back(m(best, c));
    }
    return out;
}

/*
 * Random monotone matrix with INF sentinel `inf`: nondecreasing argmin rows
 * over a finite column prefix, every column after the prefix all-INF. Rows
 * above a column's argmin hold strictly larger values (or INF), rows below
 * hold values >= the minimum, so ties appear below the argmin only and the
 * first-wins argmin is the planted one.
 */
inline Matrix random_monotone(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::uint32_t inf) {
    Matrix m{rows, cols, std::vector<Reach>(rows * cols, Reach(inf))};
    const std::size_t finite_cols = (rng() % 5 == 0) ? rng() % (cols + 1) : cols;
    std::vector<std::size_t> arg(finite_cols);
    for (auto& a : arg) {
        a = rng() % rows;
    }
    std::sort(arg.begin(), arg.end());
    const std::uint32_t span = inf - 1;
    for (std::size_t c = 0; c < finite_cols; ++c) {
        const std::uint32_t lo = 1 + static_cast<std::uint32_t>(rng() % (span / 2));
        for (std::size_t r = 0; r < rows; ++r) {
            std::uint32_t v;
            if (r == arg[c]) {
                v = lo;
            } else if (r < arg[c]) {
                v = rng() % 6 == 0 ? inf : lo + 1 + static_cast<std::uint32_t>(rng() % (span - lo));
            } else {
                const auto roll = rng() % 6;
                v = roll == 0 ? inf : roll == 1 ? lo : lo + static_cast<std::uint32_t>(rng() % (span - lo + 1));
            }
            m.cells[r * cols + c] = Reach(std::min(v, inf));
        }
    }
    return m;
}

} // namespace plcs::test
