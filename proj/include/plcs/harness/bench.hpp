#pragma once

// Benchmark sweeps over (threads, fixed size, sweep size, repetition) with
// CSV output, plus the log-linear fit used to summarise growth curves.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <tuple>
#include <vector>

#include "plcs/harness/instance.hpp"
#include "plcs/solver.hpp"

namespace plcs::harness {

enum class Mode { lcs, bench, selftest };

struct BenchConfig {
    std::vector<std::size_t> fixed_sizes{2, 4};
    std::vector<std::size_t> sweep_sizes{2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192};
    std::vector<int> thread_counts{8, 32};
    std::size_t repetitions = 3;
    std::uint64_t seed = 42;
    unsigned alphabet = 4;
    bool low_memory = false;
    bool transpose = true;  // also run (sweep, fixed) for each (fixed, sweep)
    Mode mode = Mode::bench;

    void validate() const {
        if (repetitions < 1) {
            throw std::invalid_argument("repetitions must be at least 1");
        }
        if (alphabet < 2 || alphabet > 256) {
            throw std::invalid_argument("alphabet size must be in 2..256");
        }
        for (int t : thread_counts) {
            if (t < 1) {
                throw std::invalid_argument("thread counts must be positive");
            }
        }
    }
};

struct BenchRecord {
    int threads = 0;
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    std::size_t rep = 0;
    double wall_seconds = 0.0;
    std::size_t lcs_length = 0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr std::string_view kCsvHeader = "threads,size_a,size_b,rep,wall_seconds,lcs_length";

namespace detail {

inline std::size_t parse_size(std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("not a size: '" + std::string(s) + "'");
    }
    return v;
}

inline std::string format_seconds(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 9);
    return std::string(buf, ptr);
}

} // namespace detail

/*
 * Comma-separated sizes; an item "lo..hi" expands to lo, lo+1, .., hi and
 * "lo..hixF" to lo, lo*F, lo*F^2, .. up to hi.
 */
inline std::vector<std::size_t> parse_size_list(std::string_view text) {
    std::vector<std::size_t> out;
    while (!text.empty()) {
        const std::size_t comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

        const std::size_t dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(detail::parse_size(item));
            continue;
        }
        const std::size_t lo = detail::parse_size(item.substr(0, dots));
        std::string_view rest = item.substr(dots + 2);
        std::size_t factor = 0;
        if (const std::size_t x = rest.find('x'); x != std::string_view::npos) {
            factor = detail::parse_size(rest.substr(x + 1));
            rest = rest.substr(0, x);
            if (factor < 2) {
                throw std::invalid_argument("range factor must be at least 2");
            }
        }
        const std::size_t hi = detail::parse_size(rest);
        if (hi < lo || (factor != 0 && lo == 0)) {
            throw std::invalid_argument("bad range '" + std::string(item) + "'");
        }
        for (std::size_t v = lo; v <= hi; v = factor ? v * factor : v + 1) {
            out.push_back(v);
        }
    }
    return out;
}

inline void write_csv_preamble(std::ostream& os, const BenchConfig& cfg) {
    os << "# plcs bench seed=" << cfg.seed << " alphabet=" << cfg.alphabet
       << " generator=" << kGeneratorDescription << '\n';
    os << kCsvHeader << '\n';
}

inline void write_csv_record(std::ostream& os, const BenchRecord& r) {
    os << r.threads << ',' << r.size_a << ',' << r.size_b << ',' << r.rep << ','
       << detail::format_seconds(r.wall_seconds) << ',' << r.lcs_length << '\n';
}

/*
 * Parses bench CSV: '#' lines are comments, the first other line must be
 * the header, every following line one record.
 */
inline std::vector<BenchRecord> parse_csv(std::string_view text) {
    std::vector<BenchRecord> out;
    bool header_seen = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != kCsvHeader) {
                throw std::invalid_argument("unexpected CSV header '" + std::string(line) + "'");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        for (;;) {
            const std::size_t c = line.find(',', start);
            fields.push_back(line.substr(start, c - start));
            if (c == std::string_view::npos) {
                break;
            }
            start = c + 1;
        }
        if (fields.size() != 6) {
            throw std::invalid_argument("CSV record needs 6 fields: '" + std::string(line) + "'");
        }
        BenchRecord r;
        r.threads = static_cast<int>(detail::parse_size(fields[0]));
        r.size_a = detail::parse_size(fields[1]);
        r.size_b = detail::parse_size(fields[2]);
        r.rep = detail::parse_size(fields[3]);
        auto [ptr, ec] = std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(),
                                         r.wall_seconds);
        if (ec != std::errc{} || ptr != fields[4].data() + fields[4].size() || r.wall_seconds < 0) {
            throw std::invalid_argument("bad wall_seconds '" + std::string(fields[4]) + "'");
        }
        r.lcs_length = detail::parse_size(fields[5]);
        out.push_back(r);
    }
    if (!header_seen) {
        throw std::invalid_argument("CSV header missing");
    }
    return out;
}

/*
 * Runs the sweep, writing the CSV to `csv` as records are produced and
 * returning them. Only the solver call is timed. Warnings (thread counts
 * above the hardware concurrency) go to `log` when given.
 */
inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream& csv,
                                          std::ostream* log = nullptr) {
    cfg.validate();
    const unsigned hw = std::thread::hardware_concurrency();
    if (log != nullptr) {
        for (int t : cfg.thread_counts) {
            if (hw != 0 && static_cast<unsigned>(t) > hw) {
                *log << "warning: " << t << " threads requested, host reports " << hw
                     << " hardware threads\n";
            }
        }
    }

    write_csv_preamble(csv, cfg);
    std::vector<BenchRecord> records;
    for (int threads : cfg.thread_counts) {
        SolverOptions opts;
        opts.threads = threads;
        opts.low_memory = cfg.low_memory;
        for (std::size_t fixed : cfg.fixed_sizes) {
            for (std::size_t sweep : cfg.sweep_sizes) {
                std::vector<std::pair<std::size_t, std::size_t>> cells{{fixed, sweep}};
                if (cfg.transpose && fixed != sweep) {
                    cells.emplace_back(sweep, fixed);
                }
                for (auto [size_a, size_b] : cells) {
                    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
                        auto [a, b] = generate_pair(cfg.seed, size_a, size_b, rep, cfg.alphabet);
                        const auto t0 = std::chrono::steady_clock::now();
                        const LcsResult res = lcs(a, b, opts);
                        const auto t1 = std::chrono::steady_clock::now();
                        BenchRecord r{threads, size_a, size_b, rep,
                                      std::chrono::duration<double>(t1 - t0).count(), res.length};
                        write_csv_record(csv, r);
                        records.push_back(r);
                    }
                }
            }
        }
    }
    csv.flush();
    return records;
}

struct LogLinearFit {
    double coefficient = 0.0;  // a in time = a * exp(b * size)
    double exponent = 0.0;     // b
    double r2 = 0.0;           // of the fit of ln(time) against size
    std::optional<std::string> error;
};

enum class SizeAxis { a, b };

/*
 * Least squares of ln(wall_seconds) against the chosen size column.
 */
inline LogLinearFit fit_log_linear(std::span<const BenchRecord> records, SizeAxis axis = SizeAxis::b) {
    LogLinearFit fit;
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& r : records) {
        if (r.wall_seconds > 0) {
            xs.push_back(static_cast<double>(axis == SizeAxis::a ? r.size_a : r.size_b));
            ys.push_back(std::log(r.wall_seconds));
        }
    }
    if (xs.size() < 3) {
        fit.error = "need at least 3 records with positive wall time";
        return fit;
    }
    const double count = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0) {
        fit.error = "all records have the same size";
        return fit;
    }
    fit.exponent = sxy / sxx;
    const double intercept = my - fit.exponent * mx;
    fit.coefficient = std::exp(intercept);
    double ss_res = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (intercept + fit.exponent * xs[i]);
        ss_res += e * e;
    }
    fit.r2 = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

inline double median(std::vector<double> v) {
    if (v.empty()) {
        return 0.0;
    }
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

/*
 * Human-readable summary: median wall time per (threads, size_a, size_b)
 * and one log-linear fit per (threads, fixed size) over the sweep.
 */
inline void summarize(std::span<const BenchRecord> records, const BenchConfig& cfg, std::ostream& os) {
    std::map<std::tuple<int, std::size_t, std::size_t>, std::vector<double>> cells;
    for (const auto& r : records) {
        cells[{r.threads, r.size_a, r.size_b}].push_back(r.wall_seconds);
    }
    os << "median wall seconds (threads, size_a, size_b):\n";
    for (const auto& [key, times] : cells) {
        os << "  " << std::get<0>(key) << ", " << std::get<1>(key) << ", " << std::get<2>(key) << ": "
           << detail::format_seconds(median(times)) << '\n';
    }
    for (int threads : cfg.thread_counts) {
        for (std::size_t fixed : cfg.fixed_sizes) {
            std::vector<BenchRecord> group;
            for (const auto& r : records) {
                if (r.threads == threads && r.size_a == fixed) {
                    group.push_back(r);
                }
            }
            const LogLinearFit fit = fit_log_linear(group, SizeAxis::b);
            os << "fit threads=" << threads << " fixed=" << fixed << ": ";
            if (fit.error) {
                os << "error: " << *fit.error << '\n';
            } else {
                os << "time = " << fit.coefficient << " * exp(" << fit.exponent
                   << " * size), R^2 = " << fit.r2 << '\n';
            }
        }
    }
}

} // namespace plcs::harness
