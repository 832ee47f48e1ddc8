#pragma once

#include <functional>
#include <vector>

#include "sumtriples/search_state.hpp"
#include "sumtriples/stats.hpp"

namespace sumtriples {

// Called once per complete partition when enumeration is requested.
using PartitionSink = std::function<void(const std::vector<Triple>&)>;

// The full problem {1,...,3n} has a partition only for n = 0,1 (mod 4):
// the triple sums z_i add up to half the total 3n(3n+1)/2, so 4 must
// divide 3n(3n+1).
bool feasible(int n);

// The four tiers. All return the same solution count; they differ in how
// much of the tree they visit, which the stats record.
SearchStats count_naive(const SearchState& s);
SearchStats count_basic(const SearchState& s);
SearchStats count_thm2(const SearchState& s);
SearchStats count_thm2_3(const SearchState& s);  // requires s.full_problem()

// Tier dispatch; sink (optional) receives each partition when
// config.enumerate is set.
SearchStats count(const SearchState& s, const SolverConfig& config,
                  const PartitionSink* sink = nullptr);

namespace detail {

// Hook for the parallel driver: the recursion runs normally until it reaches
// depth_limit, where each node is handed over as a task instead of being
// processed (and, crucially, not counted as a call; the worker counts it).
// Keeping this inside the solver means frontier expansion and sequential
// counting share one code path, which is what makes the split exact.
struct FrontierSink {
    int depth_limit = 0;
    std::vector<SearchState>* tasks = nullptr;
};

SearchStats count_with_frontier(const SearchState& s, const SolverConfig& config,
                                FrontierSink* frontier);

}  // namespace detail

}  // namespace sumtriples
