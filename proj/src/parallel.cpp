#include "sumtriples/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sumtriples {

TaskFrontier expand_frontier(const SearchState& state, int split_depth,
                             const SolverConfig& config) {
    if (split_depth < 1) throw std::invalid_argument("expand_frontier: split_depth must be >= 1");
    if (!state.full_problem())
        throw std::invalid_argument("expand_frontier: expects a full-problem state");
    TaskFrontier f;
    f.split_depth = split_depth;
    detail::FrontierSink sink{split_depth, &f.tasks};
    f.prefix_stats = detail::count_with_frontier(state, config, &sink);
    return f;
}

TaskFrontier expand_frontier_adaptive(const SearchState& state, int workers,
                                      const SolverConfig& config) {
    const size_t want = static_cast<size_t>(32) * static_cast<size_t>(std::max(1, workers));
    const int max_depth = std::max(1, state.m() - 1);
    for (int depth = 1;; ++depth) {
        TaskFrontier f = expand_frontier(state, depth, config);
        if (f.tasks.size() >= want || f.tasks.empty() || depth >= max_depth) return f;
    }
}

SearchStats run_parallel(const TaskFrontier& frontier, int workers, const SolverConfig& config) {
    SearchStats total = frontier.prefix_stats;
    if (frontier.tasks.empty()) return total;

    SolverConfig task_cfg = config;
    task_cfg.enumerate = false;  // enumeration stays on the sequential path

    const size_t ntasks = frontier.tasks.size();
    const size_t nthreads =
        std::min<size_t>(static_cast<size_t>(std::max(1, workers)), ntasks);

    if (nthreads == 1) {
        for (const SearchState& t : frontier.tasks) total += count(t, task_cfg);
        return total;
    }

    std::atomic<size_t> next{0};
    std::vector<SearchStats> per_thread(nthreads);
    std::mutex mu;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};

    auto worker = [&](size_t slot) {
        try {
            SearchStats local;
            for (;;) {
                if (failed.load(std::memory_order_relaxed)) break;
                const size_t i = next.fetch_add(1);
                if (i >= ntasks) break;
                local += count(frontier.tasks[i], task_cfg);
            }
            per_thread[slot] = local;
        } catch (...) {
            failed.store(true, std::memory_order_relaxed);
            std::lock_guard<std::mutex> lk(mu);
            if (!failure) failure = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker, i);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    // uint64 addition is associative, so merge order cannot matter
    for (const SearchStats& st : per_thread) total += st;
    return total;
}

SearchStats count_parallel(const SearchState& state, int workers, const SolverConfig& config) {
    if (workers <= 1 && config.split_depth <= 0) return count(state, config);
    TaskFrontier f = config.split_depth > 0
                         ? expand_frontier(state, config.split_depth, config)
                         : expand_frontier_adaptive(state, workers, config);
    return run_parallel(f, workers, config);
}

}  // namespace sumtriples
