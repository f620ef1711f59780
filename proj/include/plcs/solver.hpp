#pragma once

// Divide and conquer over grid rows.
//
// A CostTable holds, for a slab of grid rows [top, bottom] and every top-row
// start column i in 1..n+1, the breakout columns reach(i, 0..W) on the
// bottom row, W = min(bottom - top, n). Slabs of one string row come from
// base_case_row; taller slabs split at floor((top + bottom) / 2) and combine
//
//     reach(i, j) = min over k in [0, j] of lower.reach(upper.reach(i, k), j - k)
//
// whose (k, j) matrix is monotone, so each row costs one find_col_mins call.
// The argmin k of every cell is kept as the trace used for path recovery.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plcs/breakout.hpp"
#include "plcs/monotone.hpp"
#include "plcs/parallel.hpp"
#include "plcs/seqcore.hpp"

namespace plcs {

struct SolverOptions {
    int threads = 0;               // 0 = TBB default
    bool low_memory = false;       // drop child tables, rebuild them during recovery
    bool verify_monotone = false;  // brute-force check every combine matrix (slow)
    ParallelConfig parallel;
};

class CostTable {
public:
    CostTable(std::size_t top_row, std::size_t bottom_row, std::size_t n, std::size_t max_weight,
              bool with_trace)
        : top_row_(top_row),
          bottom_row_(bottom_row),
          n_(n),
          max_weight_(max_weight),
          inf_(static_cast<std::uint32_t>(n + 2)),
          reach_((n + 1) * (max_weight + 1), inf_) {
        if (with_trace) {
            trace_.assign(reach_.size(), 0);
        }
    }

    std::size_t top_row() const noexcept { return top_row_; }
    std::size_t bottom_row() const noexcept { return bottom_row_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t max_weight() const noexcept { return max_weight_; }
    std::size_t width() const noexcept { return max_weight_ + 1; }
    Reach inf() const noexcept { return inf_; }

    bool is_base() const noexcept { return bottom_row_ - top_row_ <= 1; }
    bool has_trace() const noexcept { return !trace_.empty(); }
    bool has_children() const noexcept { return upper_ != nullptr; }

    // start in 1..n+1; weights past max_weight are INF
    Reach reach(std::uint32_t start, std::size_t w) const noexcept {
        assert(start >= 1 && start <= n_ + 1);
        if (w > max_weight_) {
            return inf_;
        }
        return reach_[(start - 1) * width() + w];
    }

    std::span<const Reach> row(std::uint32_t start) const noexcept {
        return {reach_.data() + (start - 1) * width(), width()};
    }
    std::span<Reach> mutable_row(std::uint32_t start) noexcept {
        return {reach_.data() + (start - 1) * width(), width()};
    }

    BreakoutRow breakout_row(std::uint32_t start) const {
        auto r = row(start);
        return {start, std::vector<Reach>(r.begin(), r.end())};
    }

    // argmin split weight chosen for (start, w); combined slabs only
    std::uint32_t split(std::uint32_t start, std::size_t w) const noexcept {
        assert(has_trace() && w <= max_weight_);
        return trace_[(start - 1) * width() + w];
    }
    std::span<std::uint32_t> mutable_trace_row(std::uint32_t start) noexcept {
        return {trace_.data() + (start - 1) * width(), width()};
    }

    const CostTable* upper() const noexcept { return upper_.get(); }
    const CostTable* lower() const noexcept { return lower_.get(); }

    void set_children(std::unique_ptr<CostTable> upper, std::unique_ptr<CostTable> lower) {
        upper_ = std::move(upper);
        lower_ = std::move(lower);
    }

private:
    std::size_t top_row_;
    std::size_t bottom_row_;
    std::size_t n_;
    std::size_t max_weight_;
    Reach inf_;
    std::vector<Reach> reach_;
    std::vector<std::uint32_t> trace_;
    std::unique_ptr<CostTable> upper_;
    std::unique_ptr<CostTable> lower_;
};

/*
 * Column v[r] of the path on every grid row r = 1..m+1, stored at cols[r-1].
 */
struct CrossVertexPath {
    std::vector<std::uint32_t> cols;

    std::uint32_t col(std::size_t r) const { return cols.at(r - 1); }

    friend bool operator==(const CrossVertexPath&, const CrossVertexPath&) = default;
};

namespace detail {

inline void verify_combine(std::span<const Reach> upper, const CostTable& lower, std::size_t max_weight,
                           std::span<const Reach> out, std::span<const std::uint32_t> trace) {
    const Reach inf = lower.inf();
    for (std::size_t j = 0; j <= max_weight; ++j) {
        Reach best = inf;
        std::size_t best_k = 0;
        for (std::size_t k = 0; k < upper.size(); ++k) {
            Reach v = compose_cell(upper, lower, k, j, inf);
            if (v < best) {
                best = v;
                best_k = k;
            }
        }
        if (best != out[j] || (best < inf && best_k != trace[j])) {
            throw std::logic_error("combine matrix is not monotone at start " +
                                   std::to_string(upper[0].column()) + ", weight " +
                                   std::to_string(j));
        }
    }
}

} // namespace detail

/*
 * Combines one upper-slab breakout row with the table of the slab below it.
 * Writes reach(start, 0..max_weight) into `out` and the argmin split weight
 * of each entry into `trace`.
 */
inline void combine_row_into(std::span<const Reach> upper, const CostTable& lower,
                             std::size_t max_weight, std::span<Reach> out,
                             std::span<std::uint32_t> trace, const SolverOptions& opts = {}) {
    assert(!upper.empty());
    const Reach inf = lower.inf();
    auto cell = [&](std::size_t k, std::size_t j) { return compose_cell(upper, lower, k, j, inf); };
    find_col_mins(cell, 0, max_weight, 0, upper.size() - 1, inf, trace, out, opts.parallel);
#ifndef NDEBUG
    for (std::size_t j = 1; j <= max_weight && out[j] < inf; ++j) {
        assert(trace[j - 1] <= trace[j]);
    }
#endif
    if (opts.verify_monotone) {
        detail::verify_combine(upper, lower, max_weight, out, trace);
    }
}

inline std::pair<BreakoutRow, std::vector<std::uint32_t>>
combine_row(const BreakoutRow& upper, const CostTable& lower, std::size_t max_weight,
            const SolverOptions& opts = {}) {
    BreakoutRow row{upper.start, std::vector<Reach>(max_weight + 1, lower.inf())};
    std::vector<std::uint32_t> trace(max_weight + 1, 0);
    combine_row_into(std::span<const Reach>(upper.reach), lower, max_weight,
                     std::span<Reach>(row.reach), std::span<std::uint32_t>(trace), opts);
    return {std::move(row), std::move(trace)};
}

namespace detail {

inline std::unique_ptr<CostTable> build_base(const GridModel& g, std::size_t top,
                                             const SolverOptions& opts) {
    const std::size_t n = g.n();
    const std::size_t w = std::min<std::size_t>(1, n);
    auto t = std::make_unique<CostTable>(top, top + 1, n, w, false);
    std::vector<Reach> first;
    if (w > 0) {
        first = base_case_row(g, top, opts.parallel.scan_cutoff);
    }
    for (std::uint32_t i = 1; i <= n + 1; ++i) {
        auto row = t->mutable_row(i);
        row[0] = Reach(i);
        if (w > 0) {
            row[1] = i <= n ? first[i - 1] : g.inf();
        }
    }
    return t;
}

inline std::unique_ptr<CostTable> build(const GridModel& g, std::size_t top, std::size_t bottom,
                                        const SolverOptions& opts) {
    const std::size_t n = g.n();
    if (bottom == top) {
        auto t = std::make_unique<CostTable>(top, bottom, n, 0, false);
        for (std::uint32_t i = 1; i <= n + 1; ++i) {
            t->mutable_row(i)[0] = Reach(i);
        }
        return t;
    }
    if (bottom == top + 1) {
        return build_base(g, top, opts);
    }

    const std::size_t mid = (top + bottom) / 2;
    std::unique_ptr<CostTable> upper;
    std::unique_ptr<CostTable> lower;
    fork2(
        true, [&] { upper = build(g, top, mid, opts); }, [&] { lower = build(g, mid, bottom, opts); });

    const std::size_t w = std::min(bottom - top, n);
    auto t = std::make_unique<CostTable>(top, bottom, n, w, true);
    parallel_for(1, n + 2, opts.parallel.start_grain, [&](std::size_t i) {
        const auto s = static_cast<std::uint32_t>(i);
        combine_row_into(upper->row(s), *lower, w, t->mutable_row(s), t->mutable_trace_row(s), opts);
    });

    if (!opts.low_memory) {
        t->set_children(std::move(upper), std::move(lower));
    }
    return t;
}

} // namespace detail

/*
 * Cost table of the slab spanning grid rows [top_row, bottom_row],
 * 1 <= top_row <= bottom_row <= m+1. Call inside a ThreadScope to pin the
 * worker count.
 */
inline CostTable build_cost_table(const GridModel& g, std::size_t top_row, std::size_t bottom_row,
                                  const SolverOptions& opts = {}) {
    if (top_row < 1 || top_row > bottom_row || bottom_row > g.m() + 1) {
        throw std::out_of_range("build_cost_table: invalid slab [" + std::to_string(top_row) + ", " +
                                std::to_string(bottom_row) + "]");
    }
    return std::move(*detail::build(g, top_row, bottom_row, opts));
}

inline CostTable build_cost_table(const GridModel& g, const SolverOptions& opts = {}) {
    return build_cost_table(g, 1, g.m() + 1, opts);
}

// Largest weight whose breakout from the source column is finite.
inline std::size_t lcs_length(const CostTable& table) {
    std::size_t best = 0;
    for (std::size_t j = 0; j <= table.max_weight(); ++j) {
        if (table.reach(1, j) >= table.inf()) {
            break;
        }
        best = j;
    }
    return best;
}

namespace detail {

inline void recover(const GridModel& g, const CostTable& t, std::uint32_t start, std::size_t w,
                    std::vector<std::uint32_t>& cols, const SolverOptions& opts) {
    cols[t.top_row() - 1] = start;
    cols[t.bottom_row() - 1] = t.reach(start, w).column();
    if (t.bottom_row() - t.top_row() <= 1) {
        return;
    }

    const std::size_t k = t.split(start, w);
    const std::size_t mid = (t.top_row() + t.bottom_row()) / 2;
    std::unique_ptr<CostTable> rebuilt_upper;
    std::unique_ptr<CostTable> rebuilt_lower;
    const CostTable* upper = t.upper();
    const CostTable* lower = t.lower();
    if (upper == nullptr) {
        rebuilt_upper = build(g, t.top_row(), mid, opts);
        rebuilt_lower = build(g, mid, t.bottom_row(), opts);
        upper = rebuilt_upper.get();
        lower = rebuilt_lower.get();
    }

    const Reach cross = upper->reach(start, k);
    assert(cross < t.inf());
    recover(g, *upper, start, k, cols, opts);
    rebuilt_upper.reset();
    recover(g, *lower, cross.column(), w - k, cols, opts);
}

} // namespace detail

/*
 * Cross-vertices of the leftmost path from the source that carries weight j
 * down to the bottom row. Requires reach(1, j) to be finite.
 */
inline CrossVertexPath recover_cross_vertices(const GridModel& g, const CostTable& table,
                                              std::size_t j, const SolverOptions& opts = {}) {
    if (table.top_row() != 1 || table.bottom_row() != g.m() + 1) {
        throw std::invalid_argument("recover_cross_vertices: table must span the whole grid");
    }
    if (table.reach(1, j) >= table.inf()) {
        throw std::out_of_range("recover_cross_vertices: weight " + std::to_string(j) +
                                " exceeds the LCS length");
    }
    CrossVertexPath path;
    path.cols.assign(g.m() + 1, 1);
    detail::recover(g, table, 1, j, path.cols, opts);
    return path;
}

/*
 * Reads the common subsequence off a cross-vertex path. Row r contributes
 * row_seq[r] when the path moves right between v[r] and v[r+1] and enters
 * v[r+1] over the weight-1 diagonal from (r, v[r+1] - 1). Marked rows are
 * compacted through prefix-sum offsets.
 */
inline LcsResult assemble_lcs(const GridModel& g, const CrossVertexPath& path,
                              const ParallelConfig& cfg = {}) {
    const std::size_t m = g.m();
    assert(path.cols.size() == m + 1);
    const auto& a = g.row_seq().symbols;
    const auto& b = g.col_seq().symbols;

    std::vector<std::uint32_t> marked(m, 0);
    parallel_for(0, m, cfg.scan_cutoff, [&](std::size_t r) {
        const std::uint32_t from = path.cols[r];
        const std::uint32_t to = path.cols[r + 1];
        marked[r] = (to > from && a[r] == b[to - 2]) ? 1u : 0u;
    });
    const auto offsets = prefix_sum(std::span<const std::uint32_t>(marked), cfg.scan_cutoff);

    LcsResult res;
    res.length = m == 0 ? 0 : offsets.back();
    res.subsequence.symbols.resize(res.length);
    res.row_positions.resize(res.length);
    res.col_positions.resize(res.length);
    parallel_for(0, m, cfg.scan_cutoff, [&](std::size_t r) {
        if (marked[r] != 0) {
            const std::size_t slot = offsets[r] - 1;
            res.subsequence.symbols[slot] = a[r];
            res.row_positions[slot] = r + 1;
            res.col_positions[slot] = path.cols[r + 1] - 1;
        }
    });
    return res;
}

/*
 * Longest common subsequence of a and b. The shorter input indexes the grid
 * rows; the result is reported with row_positions into `a` and
 * col_positions into `b` either way.
 */
inline LcsResult lcs(const Sequence& a, const Sequence& b, const SolverOptions& opts = {}) {
    if (a.empty() || b.empty()) {
        return {};
    }
    const bool swapped = a.size() > b.size();
    const GridModel g = swapped ? GridModel(b, a) : GridModel(a, b);

    ThreadScope scope(opts.threads);
    LcsResult res = scope.run([&] {
        const CostTable table = build_cost_table(g, opts);
        const CrossVertexPath path = recover_cross_vertices(g, table, lcs_length(table), opts);
        return assemble_lcs(g, path, opts.parallel);
    });
    if (swapped) {
        std::swap(res.row_positions, res.col_positions);
    }
    return res;
}

inline LcsResult lcs(std::string_view a, std::string_view b, const SolverOptions& opts = {}) {
    return lcs(Sequence(a), Sequence(b), opts);
}

} // namespace plcs
