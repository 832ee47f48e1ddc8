#pragma once

#include <cstdint>
#include <vector>

#include "sumtriples/search_state.hpp"

namespace sumtriples {

// Reference counter for partitions into sum-triples, deliberately built on a
// different idea than the solvers: fix the smallest unassigned element, try
// every unordered pair of larger elements as its blockmates, and only test
// x + y = z once the block is complete. No sums, no membership table, no
// shared branching logic, so a solver bug cannot hide behind an oracle bug.
// Cost grows as (3m)!/(m! 6^m), hence the m <= 5 guard.
uint64_t oracle_count(const std::vector<int>& values);

// Reference counter for A002849: collections of t disjoint sum-triples
// inside {1,...,n}, t being the maximum possible size. Enumerates directly
// over the (lexicographically sorted) list of all sum-triples in range,
// keeping collections canonical by demanding increasing list positions.
// Exponential; guarded to n <= 15.
uint64_t oracle_a002849(int n);

// Same enumeration, but materializes each collection (as sorted triple
// lists) so tests can verify nothing is counted twice.
std::vector<std::vector<Triple>> oracle_a002849_collections(int n);

// Collections of exactly t disjoint sum-triples in {1,...,n}, any t. Used to
// confirm that for n = 6, 9 no collection of size floor(n/3) exists.
uint64_t oracle_count_collections(int n, int t);

}  // namespace sumtriples
