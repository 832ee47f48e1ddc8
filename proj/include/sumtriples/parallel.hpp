#pragma once

#include <vector>

#include "sumtriples/search_state.hpp"
#include "sumtriples/solver.hpp"
#include "sumtriples/stats.hpp"

namespace sumtriples {

// The search tree cut at a fixed depth: everything above the cut has been
// counted into prefix_stats, everything below is packaged as independent
// tasks, one per surviving node at the cut, in depth-first discovery order.
// Sequential total == prefix + sum over tasks, exactly, calls included,
// because expansion runs the same solver code path and a node at the cut is
// counted by whichever worker processes it, never by the prefix.
struct TaskFrontier {
    std::vector<SearchState> tasks;
    int split_depth = 0;
    SearchStats prefix_stats;
};

TaskFrontier expand_frontier(const SearchState& state, int split_depth,
                             const SolverConfig& config);

// Smallest depth that yields at least 32 tasks per worker (or exhausts the
// tree trying).
TaskFrontier expand_frontier_adaptive(const SearchState& state, int workers,
                                      const SolverConfig& config);

// Counts every task with the configured tier on `workers` threads and merges.
// Totals are identical to the single-threaded run regardless of worker count
// or scheduling; a failing task fails the whole run.
SearchStats run_parallel(const TaskFrontier& frontier, int workers, const SolverConfig& config);

// Convenience wrapper: split (config.split_depth, 0 = adaptive) and run.
// workers == 1 with no explicit split degenerates to the plain solver.
SearchStats count_parallel(const SearchState& state, int workers, const SolverConfig& config);

}  // namespace sumtriples
