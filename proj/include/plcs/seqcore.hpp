#pragma once

// Core types shared by every stage of the solver: input sequences, the
// implicit grid graph they induce, the Reach column scalar, and the result
// record.
//
// Indexing: containers are 0-based. Grid rows, grid columns and sequence
// positions are 1-based at the API boundary, so vertex (r, c) lives on grid
// row r and grid column c, with r in [1, m+1] and c in [1, n+1].

#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plcs {

using Symbol = unsigned char;

/*
 * An input string as raw octets. No text semantics are attached.
 */
struct Sequence {
    std::vector<Symbol> symbols;

    Sequence() = default;
    explicit Sequence(std::vector<Symbol> s) : symbols(std::move(s)) {}
    explicit Sequence(std::string_view s) : symbols(s.begin(), s.end()) {}

    std::size_t size() const noexcept { return symbols.size(); }
    bool empty() const noexcept { return symbols.empty(); }

    // 1-based access, matching the grid convention
    Symbol at(std::size_t pos) const {
        assert(pos >= 1 && pos <= symbols.size());
        return symbols[pos - 1];
    }

    std::string str() const { return std::string(symbols.begin(), symbols.end()); }

    friend bool operator==(const Sequence&, const Sequence&) = default;
};

/*
 * A grid column reached by some path, or INF when nothing is reachable.
 *
 * Only comparison is defined. INF is represented per problem instance as
 * n+2, one past the largest legal column n+1, so plain integer ordering puts
 * it above every finite column and rows of Reach stay flat integer arrays.
 */
class Reach {
public:
    constexpr Reach() = default;
    constexpr explicit Reach(std::uint32_t column) : column_(column) {}

    constexpr std::uint32_t column() const noexcept { return column_; }

    friend constexpr auto operator<=>(Reach, Reach) = default;

private:
    std::uint32_t column_ = 0;
};

constexpr Reach min(Reach a, Reach b) noexcept { return b < a ? b : a; }

/*
 * The (m+1) x (n+1) grid graph of a pair of sequences. Right and down edges
 * weigh 0; the diagonal (r, c) -> (r+1, c+1) exists with weight 1 exactly
 * when row_seq[r] == col_seq[c]. Nothing is materialized.
 */
class GridModel {
public:
    GridModel(Sequence row_seq, Sequence col_seq)
        : row_seq_(std::move(row_seq)), col_seq_(std::move(col_seq)) {}

    const Sequence& row_seq() const noexcept { return row_seq_; }
    const Sequence& col_seq() const noexcept { return col_seq_; }

    // number of string rows / string columns
    std::size_t m() const noexcept { return row_seq_.size(); }
    std::size_t n() const noexcept { return col_seq_.size(); }

    Reach inf() const noexcept { return Reach(static_cast<std::uint32_t>(n() + 2)); }
    bool is_inf(Reach r) const noexcept { return r >= inf(); }

private:
    Sequence row_seq_;
    Sequence col_seq_;
};

/*
 * Result of an LCS computation. Positions are 1-based; row_positions index
 * the sequence on the grid rows (the first argument of lcs()) and
 * col_positions the other one.
 */
struct LcsResult {
    std::size_t length = 0;
    Sequence subsequence;
    std::vector<std::size_t> row_positions;
    std::vector<std::size_t> col_positions;

    friend bool operator==(const LcsResult&, const LcsResult&) = default;
};

// Strictly increasing 1-based positions at which `seq` holds `symbol`.
inline std::vector<std::size_t> match_positions(const Sequence& seq, Symbol symbol) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq.symbols[i] == symbol) {
            out.push_back(i + 1);
        }
    }
    return out;
}

inline int diagonal_weight(const GridModel& g, std::size_t r, std::size_t c) {
    assert(r >= 1 && r <= g.m());
    assert(c >= 1 && c <= g.n());
    return g.row_seq().symbols[r - 1] == g.col_seq().symbols[c - 1] ? 1 : 0;
}

/*
 * Checks the structural invariants of an LcsResult against the two
 * sequences it claims to describe. Returns an empty string when valid,
 * otherwise a description of the first violation.
 */
inline std::string validate_lcs_result(const LcsResult& res, const Sequence& row_seq,
                                       const Sequence& col_seq) {
    if (res.subsequence.size() != res.length || res.row_positions.size() != res.length ||
        res.col_positions.size() != res.length) {
        return "length mismatch between length, subsequence and positions";
    }
    for (std::size_t k = 0; k < res.length; ++k) {
        std::size_t rp = res.row_positions[k];
        std::size_t cp = res.col_positions[k];
        if (rp < 1 || rp > row_seq.size() || cp < 1 || cp > col_seq.size()) {
            return "position out of range at index " + std::to_string(k);
        }
        if (k > 0 && (rp <= res.row_positions[k - 1] || cp <= res.col_positions[k - 1])) {
            return "positions not strictly increasing at index " + std::to_string(k);
        }
        Symbol s = res.subsequence.symbols[k];
        if (row_seq.at(rp) != s || col_seq.at(cp) != s) {
            return "symbol mismatch at index " + std::to_string(k);
        }
    }
    return {};
}

} // namespace plcs
