#include "doctest.h"
#include "sumtriples/parallel.hpp"

using namespace sumtriples;

TEST_CASE("frontier at depth 1 is one task per root branch") {
    SolverConfig cfg;
    cfg.tier = Tier::THM2;
    const SearchState root = SearchState::from_full(4);
    const TaskFrontier f = expand_frontier(root, 1, cfg);
    CHECK(f.tasks.size() == root.candidate_partners().size());
    CHECK(f.prefix_stats.calls == 1);  // just the root
    CHECK(f.prefix_stats.solutions == 0);
    for (const SearchState& t : f.tasks) CHECK(t.m() == 3);
}

TEST_CASE("split deeper than the tree degenerates to a full sequential count") {
    SolverConfig cfg;
    cfg.tier = Tier::THM2_3;
    const TaskFrontier f = expand_frontier(SearchState::from_full(4), 10, cfg);
    CHECK(f.tasks.empty());
    CHECK(f.prefix_stats.solutions == 8);
    const SearchStats seq = count(SearchState::from_full(4), cfg);
    CHECK(f.prefix_stats.calls == seq.calls);
    CHECK(run_parallel(f, 4, cfg).solutions == 8);  // empty frontier passes through
}

TEST_CASE("prefix plus tasks reproduce the sequential run exactly") {
    for (Tier tier : {Tier::BASIC, Tier::THM2, Tier::THM2_3}) {
        SolverConfig cfg;
        cfg.tier = tier;
        const SearchState root = SearchState::from_full(8);
        const SearchStats seq = count(root, cfg);
        for (int depth : {1, 2, 3}) {
            const TaskFrontier f = expand_frontier(root, depth, cfg);
            SearchStats merged = f.prefix_stats;
            for (const SearchState& t : f.tasks) merged += count(t, cfg);
            INFO("tier=", tier_name(tier), " depth=", depth);
            CHECK(merged.solutions == seq.solutions);
            CHECK(merged.calls == seq.calls);
            CHECK(merged.prunes_sum == seq.prunes_sum);
            CHECK(merged.prunes_cutoff == seq.prunes_cutoff);
            CHECK(merged.forced_moves == seq.forced_moves);
            CHECK(merged.endgame_hits == seq.endgame_hits);
        }
    }
}

TEST_CASE("worker count cannot change any counter") {
    SolverConfig cfg;
    cfg.tier = Tier::THM2_3;
    const SearchState root = SearchState::from_full(8);
    const SearchStats seq = count(root, cfg);
    const TaskFrontier f = expand_frontier(root, 2, cfg);
    SearchStats runs[3] = {run_parallel(f, 1, cfg), run_parallel(f, 2, cfg),
                           run_parallel(f, 8, cfg)};
    for (const SearchStats& st : runs) {
        CHECK(st.solutions == seq.solutions);
        CHECK(st.calls == seq.calls);
    }
    // and again, same frontier, same answers
    CHECK(run_parallel(f, 2, cfg) == runs[1]);
}

TEST_CASE("adaptive split yields enough tasks or exhausts the tree") {
    SolverConfig cfg;
    cfg.tier = Tier::THM2_3;
    const TaskFrontier f = expand_frontier_adaptive(SearchState::from_full(8), 2, cfg);
    const bool enough = f.tasks.size() >= 64;
    const bool exhausted = f.tasks.empty();
    CHECK((enough || exhausted));
    SearchStats merged = f.prefix_stats;
    for (const SearchState& t : f.tasks) merged += count(t, cfg);
    CHECK(merged.solutions == 3040);
}

TEST_CASE("count_parallel wraps the whole pipeline") {
    SolverConfig cfg;
    cfg.tier = Tier::THM2_3;
    CHECK(count_parallel(SearchState::from_full(8), 1, cfg).solutions == 3040);
    CHECK(count_parallel(SearchState::from_full(8), 4, cfg).solutions == 3040);
    cfg.split_depth = 2;
    CHECK(count_parallel(SearchState::from_full(8), 1, cfg).solutions == 3040);
    CHECK(count_parallel(SearchState::from_full(9), 3, cfg).solutions == 20505);
}

TEST_CASE("frontier expansion rejects subset states and bad depths") {
    SolverConfig cfg;
    cfg.tier = Tier::THM2;
    const SearchState sub = SearchState::from_subset({1, 2, 3, 4, 5, 9}, 9);
    CHECK_THROWS_AS(expand_frontier(sub, 1, cfg), std::invalid_argument);
    CHECK_THROWS_AS(expand_frontier(SearchState::from_full(4), 0, cfg), std::invalid_argument);
}
