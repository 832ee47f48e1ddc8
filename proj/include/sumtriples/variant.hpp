#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sumtriples/stats.hpp"

namespace sumtriples {

// A002849 instance: how many size-t collections of disjoint sum-triples fit
// in {1,...,n}. Except for n = 6, 9 (mod 12), t = floor(n/3); in those two
// residue classes one fewer is the best possible, leaving r = n - 3t values
// excluded. Whatever remains must have even total (the triple sums z make
// up exactly half of it to be partitionable), which fixes the parity of the
// excluded sum.
struct VariantProblem {
    int n = 0;
    int t = 0;       // target collection size
    int r = 0;       // exclusion size, n - 3t
    int parity = 0;  // required sum(E) mod 2
};

VariantProblem variant_problem(int n);

// All exclusion sets E of size r with the right sum parity, in lexicographic
// order. Lexicographic order is what makes long runs resumable: progress is
// identified by the last finished E.
std::vector<std::vector<int>> exclusion_candidates(const VariantProblem& p);

// Per-exclusion-set progress: E, its subcount, and the solver stats for that
// subproblem. index/total refer to the candidate list.
struct VariantProgress {
    size_t index = 0;
    size_t total = 0;
    std::vector<int> excluded;
    uint64_t subcount = 0;
    SearchStats stats;
};

using VariantProgressFn = std::function<void(const VariantProgress&)>;

struct VariantOptions {
    int workers = 1;
    bool use_parity_filter = true;            // pruning only; never changes the count
    const std::vector<int>* resume_after = nullptr;  // skip every E <= this, lexicographically
    VariantProgressFn progress;               // called in lexicographic order
};

struct VariantResult {
    uint64_t count = 0;
    SearchStats stats;  // summed over subproblems
    size_t candidates = 0;
    size_t skipped = 0;  // candidates at or before the resume marker
};

// Sums, over all exclusion sets E, the number of partitions of {1,...,n}\E
// into sum-triples. Distinct E give distinct remainders, so the sum is the
// A002849 count directly. Tier must be thm2 or below: the subproblems are
// not full-problem states, so the m=2 endgame does not apply.
VariantResult count_a002849(int n, const SolverConfig& config, const VariantOptions& opts = {});

}  // namespace sumtriples
