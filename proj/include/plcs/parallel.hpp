#pragma once

// Fork-join plumbing on top of oneTBB. Everything in the library expresses
// parallelism through parallel_for / fork2 so the thread count is decided
// once, by whoever opens a ThreadScope.

#include <cstddef>
#include <memory>
#include <optional>

#include <tbb/blocked_range.h>
#include <tbb/global_control.h>
#include <tbb/parallel_for.h>
#include <tbb/parallel_invoke.h>
#include <tbb/task_arena.h>

namespace plcs {

/*
 * Sequential cutoffs. Below these sizes the parallel primitives run as plain
 * loops; above them they split into tasks.
 */
struct ParallelConfig {
    std::size_t scan_cutoff = 4096;    // prefix sum / prefix-min scans
    std::size_t colmins_cutoff = 32;   // column span for forking find_col_mins
    std::size_t start_grain = 16;      // start columns per task when combining tables
};

/*
 * Runs work inside an arena of exactly `threads` workers (0 = TBB default).
 * The global_control raises TBB's worker limit so that thread counts above
 * the hardware concurrency are honored rather than silently clamped.
 */
class ThreadScope {
public:
    explicit ThreadScope(int threads) {
        if (threads > 0) {
            control_.emplace(tbb::global_control::max_allowed_parallelism,
                             static_cast<std::size_t>(threads));
            arena_ = std::make_unique<tbb::task_arena>(threads);
        } else {
            arena_ = std::make_unique<tbb::task_arena>();
        }
    }

    template <typename F>
    decltype(auto) run(F&& f) {
        return arena_->execute(std::forward<F>(f));
    }

private:
    std::optional<tbb::global_control> control_;
    std::unique_ptr<tbb::task_arena> arena_;
};

template <typename Body>
void parallel_for(std::size_t begin, std::size_t end, std::size_t grain, Body&& body) {
    if (end <= begin) {
        return;
    }
    if (end - begin <= grain) {
        for (std::size_t i = begin; i < end; ++i) {
            body(i);
        }
        return;
    }
    tbb::parallel_for(tbb::blocked_range<std::size_t>(begin, end, grain ? grain : 1),
                      [&](const tbb::blocked_range<std::size_t>& r) {
                          for (std::size_t i = r.begin(); i != r.end(); ++i) {
                              body(i);
                          }
                      });
}

// cobegin { a(); b(); }
template <typename A, typename B>
void fork2(bool parallel, A&& a, B&& b) {
    if (parallel) {
        tbb::parallel_invoke(std::forward<A>(a), std::forward<B>(b));
    } else {
        a();
        b();
    }
}

} // namespace plcs
