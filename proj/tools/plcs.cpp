// plcs: command-line front end.
//
//   plcs lcs <A> <B> [--threads N] [--fasta]
//   plcs bench [--fixed 2,4] [--sweep 2..8192x2] [--threads 8,32] [--reps R]
//              [--seed S] [--csv PATH] [--alphabet K] [--low-memory]
//   plcs selftest [--seed S]
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 selftest failure.
// PLCS_NUM_THREADS sets the default thread count when --threads is absent.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "plcs/harness/bench.hpp"
#include "plcs/harness/input.hpp"
#include "plcs/harness/selftest.hpp"
#include "plcs/solver.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitSelftest = 3;

int env_threads() {
    if (const char* v = std::getenv("PLCS_NUM_THREADS")) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring PLCS_NUM_THREADS='" << v << "'\n";
        }
    }
    return 0;
}

void print_positions(std::ostream& os, const char* label, const std::vector<std::size_t>& pos) {
    os << label << ':';
    for (std::size_t p : pos) {
        os << ' ' << p;
    }
    os << '\n';
}

int run_lcs(const std::string& a_arg, const std::string& b_arg, int threads, bool fasta) {
    plcs::Sequence a;
    plcs::Sequence b;
    try {
        a = plcs::harness::load_sequence(a_arg, fasta);
        b = plcs::harness::load_sequence(b_arg, fasta);
    } catch (const plcs::harness::InputError& e) {
        std::cerr << "plcs: " << e.what() << '\n';
        return kExitIo;
    }
    plcs::SolverOptions opts;
    opts.threads = threads > 0 ? threads : env_threads();
    const plcs::LcsResult res = plcs::lcs(a, b, opts);
    std::cout << "length: " << res.length << '\n';
    std::cout << "lcs: " << res.subsequence.str() << '\n';
    print_positions(std::cout, "positions_a", res.row_positions);
    print_positions(std::cout, "positions_b", res.col_positions);
    return 0;
}

int run_bench(plcs::harness::BenchConfig cfg, const std::string& csv_path) {
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "plcs: " << e.what() << '\n';
        return kExitUsage;
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!csv_path.empty()) {
        file.open(csv_path, std::ios::binary);
        if (!file) {
            std::cerr << "plcs: cannot write '" << csv_path << "'\n";
            return kExitIo;
        }
        out = &file;
    }
    const auto records = plcs::harness::run_bench(cfg, *out, &std::cerr);
    if (!*out) {
        std::cerr << "plcs: error writing CSV\n";
        return kExitIo;
    }
    plcs::harness::summarize(records, cfg, std::cerr);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parallel longest common subsequence"};
    app.require_subcommand(1);

    auto* lcs_cmd = app.add_subcommand("lcs", "LCS of two sequences (inline text or file paths)");
    std::string a_arg;
    std::string b_arg;
    int lcs_threads = 0;
    bool fasta = false;
    lcs_cmd->add_option("A", a_arg, "first sequence or file")->required();
    lcs_cmd->add_option("B", b_arg, "second sequence or file")->required();
    lcs_cmd->add_option("--threads", lcs_threads, "worker threads (0 = default)")->check(CLI::NonNegativeNumber);
    lcs_cmd->add_flag("--fasta", fasta, "read both arguments as FASTA files");

    auto* bench_cmd = app.add_subcommand("bench", "timing sweep written as CSV");
    plcs::harness::BenchConfig cfg;
    std::string fixed_text = "2,4";
    std::string sweep_text = "2..8192x2";
    std::string threads_text;
    std::string csv_path;
    bench_cmd->add_option("--fixed", fixed_text, "fixed string sizes");
    bench_cmd->add_option("--sweep", sweep_text, "swept string sizes, e.g. 2..8192x2");
    bench_cmd->add_option("--threads", threads_text, "thread counts, e.g. 8,32");
    bench_cmd->add_option("--reps", cfg.repetitions, "repetitions per cell");
    bench_cmd->add_option("--seed", cfg.seed, "instance seed");
    bench_cmd->add_option("--alphabet", cfg.alphabet, "alphabet size (2..256)");
    bench_cmd->add_option("--csv", csv_path, "output path (default stdout)");
    bench_cmd->add_flag("--low-memory", cfg.low_memory, "rebuild sub-tables during path recovery");

    auto* self_cmd = app.add_subcommand("selftest", "oracle sweep, fuzz and golden checks");
    std::uint64_t self_seed = 42;
    self_cmd->add_option("--seed", self_seed, "fuzz seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*lcs_cmd) {
        return run_lcs(a_arg, b_arg, lcs_threads, fasta);
    }
    if (*bench_cmd) {
        try {
            cfg.fixed_sizes = plcs::harness::parse_size_list(fixed_text);
            cfg.sweep_sizes = plcs::harness::parse_size_list(sweep_text);
            if (threads_text.empty()) {
                if (const int t = env_threads(); t > 0) {
                    cfg.thread_counts = {t};
                }
            } else {
                cfg.thread_counts.clear();
                for (std::size_t t : plcs::harness::parse_size_list(threads_text)) {
                    cfg.thread_counts.push_back(static_cast<int>(t));
                }
            }
        } catch (const std::invalid_argument& e) {
            std::cerr << "plcs: " << e.what() << '\n';
            return kExitUsage;
        }
        return run_bench(cfg, csv_path);
    }
    if (*self_cmd) {
        const auto rep = plcs::harness::selftest(self_seed);
        plcs::harness::print_report(rep, std::cout);
        return rep.ok() ? 0 : kExitSelftest;
    }
    return kExitUsage;
}
