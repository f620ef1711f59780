#pragma once

// Built-in correctness sweep: worked-example goldens, exhaustive binary
// strings against the DP oracle, and a seeded random fuzz.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "plcs/breakout.hpp"
#include "plcs/harness/instance.hpp"
#include "plcs/oracle.hpp"
#include "plcs/solver.hpp"

namespace plcs::harness {

struct SelftestReport {
    std::vector<std::string> passed;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

inline std::string check_against_oracle(const Sequence& a, const Sequence& b, const SolverOptions& opts) {
    const LcsResult got = lcs(a, b, opts);
    const LcsResult want = oracle::dp_lcs(a, b);
    if (got.length != want.length) {
        return "length " + std::to_string(got.length) + " != oracle " + std::to_string(want.length);
    }
    return validate_lcs_result(got, a, b);
}

inline Sequence binary_string(std::size_t len, std::uint32_t bits) {
    Sequence s;
    for (std::size_t i = 0; i < len; ++i) {
        s.symbols.push_back((bits >> i) & 1u ? 'b' : 'a');
    }
    return s;
}

} // namespace detail

inline SelftestReport selftest(std::uint64_t seed = 42, std::size_t fuzz_cases = 1000,
                               const SolverOptions& opts = {}) {
    SelftestReport rep;
    auto record = [&](const std::string& name, const std::string& failure) {
        if (failure.empty()) {
            rep.passed.push_back(name);
        } else {
            rep.failures.push_back(name + ": " + failure);
        }
    };

    {
        const GridModel g(Sequence(std::string_view("tcaggatt")), Sequence(std::string_view("gatttatgcagg")));
        const std::vector<std::uint32_t> want{4, 4, 4, 5, 6, 8, 8, 14, 14, 14, 14, 14};
        const auto got = base_case_row(g, 1);
        std::string failure;
        for (std::size_t i = 0; i < want.size(); ++i) {
            if (got.size() != want.size() || got[i].column() != want[i]) {
                failure = "base_case_row mismatch at start column " + std::to_string(i + 1);
                break;
            }
        }
        record("golden base_case_row", failure);

        const std::vector<std::uint32_t> breakouts{1, 2, 3, 4, 5, 13};
        ThreadScope scope(opts.threads);
        const CostTable table = scope.run([&] { return build_cost_table(g, opts); });
        failure.clear();
        for (std::size_t j = 0; j <= table.max_weight(); ++j) {
            const std::uint32_t expect = j < breakouts.size() ? breakouts[j] : g.inf().column();
            if (table.reach(1, j).column() != expect) {
                failure = "breakout " + std::to_string(j) + " of column 1 is " +
                          std::to_string(table.reach(1, j).column());
                break;
            }
        }
        record("golden breakouts", failure);
        record("golden lcs_length",
               lcs_length(table) == 5 ? "" : "got " + std::to_string(lcs_length(table)));
    }

    {
        std::string failure;
        for (std::size_t la = 0; la <= 6 && failure.empty(); ++la) {
            for (std::size_t lb = 0; lb <= 6 && failure.empty(); ++lb) {
                for (std::uint32_t ba = 0; ba < (1u << la) && failure.empty(); ++ba) {
                    for (std::uint32_t bb = 0; bb < (1u << lb) && failure.empty(); ++bb) {
                        const Sequence a = detail::binary_string(la, ba);
                        const Sequence b = detail::binary_string(lb, bb);
                        if (auto f = detail::check_against_oracle(a, b, opts); !f.empty()) {
                            failure = "'" + a.str() + "' vs '" + b.str() + "': " + f;
                        }
                    }
                }
            }
        }
        record("exhaustive {a,b} lengths 0..6", failure);
    }

    {
        std::string failure;
        for (std::size_t i = 0; i < fuzz_cases && failure.empty(); ++i) {
            std::mt19937_64 rng(instance_seed(seed, 0, 0, i, 4));
            const std::size_t la = rng() % 201;
            const std::size_t lb = rng() % 201;
            const Sequence a = random_sequence(rng, la, 4);
            const Sequence b = random_sequence(rng, lb, 4);
            if (auto f = detail::check_against_oracle(a, b, opts); !f.empty()) {
                failure = "seed " + std::to_string(seed) + " case " + std::to_string(i) + ": " + f;
            }
        }
        record("fuzz " + std::to_string(fuzz_cases) + " pairs, lengths <= 200, alphabet 4", failure);
    }
    return rep;
}

inline void print_report(const SelftestReport& rep, std::ostream& os) {
    for (const auto& p : rep.passed) {
        os << "PASS " << p << '\n';
    }
    for (const auto& f : rep.failures) {
        os << "FAIL " << f << '\n';
    }
    os << (rep.ok() ? "selftest passed" : "selftest FAILED") << '\n';
}

} // namespace plcs::harness
