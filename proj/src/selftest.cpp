#include "sumtriples/selftest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "sumtriples/oracle.hpp"
#include "sumtriples/parallel.hpp"
#include "sumtriples/solver.hpp"
#include "sumtriples/variant.hpp"

namespace sumtriples {

namespace {

std::string show_set(const std::vector<int>& v) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

// Full problems n = 1..max_n: all tiers agree with each other and with the
// pairing oracle (which covers everything up to 15 elements).
SuiteResult suite_tier_agreement(const SelftestOptions& opts) {
    SuiteResult r{"tier-agreement-full", true, 0, ""};
    for (int n = 1; n <= opts.max_n; ++n) {
        const SearchState s = SearchState::from_full(n);
        const uint64_t expect = oracle_count(s.elements());
        const uint64_t got[4] = {count_naive(s).solutions, count_basic(s).solutions,
                                 count_thm2(s).solutions, count_thm2_3(s).solutions};
        ++r.checked;
        for (int t = 0; t < 4; ++t) {
            if (got[t] != expect) {
                r.passed = false;
                std::ostringstream os;
                os << "full n=" << n << ": " << tier_name(static_cast<Tier>(t)) << " got "
                   << got[t] << ", oracle says " << expect;
                r.detail = os.str();
                return r;
            }
        }
    }
    return r;
}

std::vector<int> random_subset(std::mt19937& rng, int size) {
    std::vector<int> pool(15);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<size_t>(size));
    std::sort(pool.begin(), pool.end());
    return pool;
}

// Seeded random subsets of {1,...,15}, sizes cycling 6/9/12/15: the three
// subset-applicable tiers must agree with the oracle on every one.
SuiteResult suite_oracle_subsets(const SelftestOptions& opts) {
    SuiteResult r{"oracle-random-subsets", true, 0, ""};
    std::mt19937 rng(opts.seed);
    const int sizes[4] = {6, 9, 12, 15};
    for (int trial = 0; trial < opts.subset_trials; ++trial) {
        const std::vector<int> vals = random_subset(rng, sizes[trial % 4]);
        const SearchState s = SearchState::from_subset(vals, 15);
        const uint64_t expect = oracle_count(vals);
        const uint64_t got[3] = {count_naive(s).solutions, count_basic(s).solutions,
                                 count_thm2(s).solutions};
        ++r.checked;
        for (int t = 0; t < 3; ++t) {
            if (got[t] != expect) {
                r.passed = false;
                std::ostringstream os;
                os << "subset " << show_set(vals) << ": " << tier_name(static_cast<Tier>(t))
                   << " got " << got[t] << ", oracle says " << expect;
                r.detail = os.str();
                return r;
            }
        }
    }
    return r;
}

// Random descent paths: after every removal the cached sums must equal a
// from-scratch recomputation. The fault fixture perturbs the observed low
// sum on the both-blockmates-high branch, as a deliberately broken update
// formula would.
SuiteResult suite_sum_consistency(const SelftestOptions& opts) {
    SuiteResult r{"sum-consistency", true, 0, ""};
    std::mt19937 rng(opts.seed + 1);
    const int fulls[3] = {4, 5, 8};
    for (int trial = 0; trial < std::max(opts.subset_trials, 50); ++trial) {
        SearchState s = trial % 2 == 0
                            ? SearchState::from_full(fulls[trial % 3])
                            : SearchState::from_subset(random_subset(rng, 6 + 3 * (trial % 4)), 15);
        while (s.m() >= 2) {
            const auto pairs = s.candidate_partners();
            if (pairs.empty()) break;
            // under fault injection take the largest i so the corrupted
            // branch is guaranteed to be exercised
            const auto [i, k] =
                opts.inject_fault ? pairs.back() : pairs[rng() % pairs.size()];
            const int m2 = 2 * s.m();
            const Triple chosen(s.at(0), s.at(i), s.at(k));
            SearchState child = s.remove_triple(i, k);
            SearchState fresh = child;
            fresh.recompute_sums();
            int64_t observed_s1 = child.low_sum();
            if (opts.inject_fault && i >= m2) observed_s1 += 1;
            ++r.checked;
            if (observed_s1 != fresh.low_sum() || child.high_sum() != fresh.high_sum()) {
                r.passed = false;
                std::ostringstream os;
                os << "removing {" << chosen.x << "," << chosen.y << "," << chosen.z
                   << "} from " << show_set(s.elements()) << ": sums (" << observed_s1 << ","
                   << child.high_sum() << ") vs recomputed (" << fresh.low_sum() << ","
                   << fresh.high_sum() << ")";
                r.detail = os.str();
                return r;
            }
            s = child;
        }
    }
    return r;
}

// Walks the basic-tier tree from the full problems, collecting nodes that
// satisfy a predicate, up to a cap. Public-API walk, slow but plain.
void collect_states(const SearchState& s, size_t cap,
                    const std::function<bool(const SearchState&)>& pred,
                    std::vector<SearchState>& out) {
    if (out.size() >= cap) return;
    if (pred(s)) out.push_back(s);
    if (s.m() < 2) return;
    for (const auto& [i, k] : s.candidate_partners()) {
        if (out.size() >= cap) return;
        SearchState child = s.remove_triple(i, k);
        if (child.low_sum() > child.high_sum()) continue;
        collect_states(child, cap, pred, out);
    }
}

// On states with S1 = S2, restricting partners to low-low-high (the whole
// reduced machinery, forced moves included) must count exactly what the
// unrestricted basic scan counts.
SuiteResult suite_reduced_soundness(const SelftestOptions&) {
    SuiteResult r{"reduced-soundness", true, 0, ""};
    std::vector<SearchState> states;
    for (int n : {4, 5, 8})
        collect_states(SearchState::from_full(n), states.size() + 400,
                       [](const SearchState& s) {
                           return s.m() >= 2 && s.low_sum() == s.high_sum();
                       },
                       states);
    for (const SearchState& s : states) {
        const uint64_t unrestricted = count_basic(s).solutions;
        SearchState reduced = s;
        reduced.set_mode(Mode::REDUCED);
        const uint64_t restricted = count_thm2(reduced).solutions;
        ++r.checked;
        if (unrestricted != restricted) {
            r.passed = false;
            std::ostringstream os;
            os << "S1=S2 state " << show_set(s.elements()) << ": reduced scan counts "
               << restricted << ", unrestricted counts " << unrestricted;
            r.detail = os.str();
            return r;
        }
    }
    return r;
}

// On every encountered state where b_1 + b_{2m} = b_{3m}, committing only
// the forced triple must lose nothing against branching over everything.
SuiteResult suite_forced_moves(const SelftestOptions&) {
    SuiteResult r{"forced-move-soundness", true, 0, ""};
    std::vector<SearchState> states;
    for (int n : {4, 5, 8})
        collect_states(SearchState::from_full(n), states.size() + 400,
                       [](const SearchState& s) {
                           const int m = s.m();
                           return m >= 2 && s.low_sum() == s.high_sum() &&
                                  s.at(0) + s.at(2 * m - 1) == s.at(3 * m - 1);
                       },
                       states);
    for (const SearchState& s : states) {
        const uint64_t all_branches = count_basic(s).solutions;
        SearchState reduced = s;
        reduced.set_mode(Mode::REDUCED);
        const SearchStats forced = count_thm2(reduced);
        ++r.checked;
        if (forced.solutions != all_branches || forced.forced_moves == 0) {
            r.passed = false;
            std::ostringstream os;
            os << "forced-trigger state " << show_set(s.elements()) << ": forced-only counts "
               << forced.solutions << " (forced_moves=" << forced.forced_moves
               << "), all branches count " << all_branches;
            r.detail = os.str();
            return r;
        }
    }
    return r;
}

// Every m=2 remainder the full search actually reaches must be resolved by
// the four-pattern endgame exactly as the oracle resolves it. The frontier
// hook cut at depth m-2 hands back precisely those remainders.
SuiteResult suite_endgame(const SelftestOptions&) {
    SuiteResult r{"endgame-completeness", true, 0, ""};
    SolverConfig cfg;
    cfg.tier = Tier::THM2_3;
    for (int n : {4, 5, 8}) {
        const SearchState root = SearchState::from_full(n);
        TaskFrontier f = expand_frontier(root, root.m() - 2, cfg);
        for (const SearchState& rem : f.tasks) {
            const uint64_t expect = oracle_count(rem.elements());
            const uint64_t got = count(rem, cfg).solutions;
            ++r.checked;
            if (got != expect) {
                r.passed = false;
                std::ostringstream os;
                os << "n=" << n << " remainder " << show_set(rem.elements())
                   << ": endgame counts " << got << ", oracle says " << expect;
                r.detail = os.str();
                return r;
            }
        }
    }
    return r;
}

// The parity filter on exclusion sets may only skip subproblems that would
// have contributed zero; with and without it, totals must match (and match
// the direct collection oracle).
SuiteResult suite_parity_neutrality(const SelftestOptions&) {
    SuiteResult r{"parity-filter-neutrality", true, 0, ""};
    SolverConfig cfg;
    cfg.tier = Tier::THM2;
    for (int n = 3; n <= 12; ++n) {
        VariantOptions with, without;
        without.use_parity_filter = false;
        const uint64_t filtered = count_a002849(n, cfg, with).count;
        const uint64_t unfiltered = count_a002849(n, cfg, without).count;
        const uint64_t direct = oracle_a002849(n);
        ++r.checked;
        if (filtered != unfiltered || filtered != direct) {
            r.passed = false;
            std::ostringstream os;
            os << "n=" << n << ": filtered " << filtered << ", unfiltered " << unfiltered
               << ", oracle " << direct;
            r.detail = os.str();
            return r;
        }
    }
    return r;
}

// For n = 6 and 9, floor(n/3) disjoint triples genuinely do not fit.
SuiteResult suite_deficient(const SelftestOptions&) {
    SuiteResult r{"deficient-case-rule", true, 0, ""};
    for (int n : {6, 9}) {
        ++r.checked;
        if (oracle_count_collections(n, n / 3) != 0) {
            r.passed = false;
            r.detail = "n=" + std::to_string(n) + ": found a collection of size " +
                       std::to_string(n / 3);
            return r;
        }
    }
    return r;
}

}  // namespace

std::vector<SuiteResult> run_battery(const SelftestOptions& opts) {
    std::vector<SuiteResult> out;
    out.push_back(suite_tier_agreement(opts));
    out.push_back(suite_oracle_subsets(opts));
    out.push_back(suite_sum_consistency(opts));
    out.push_back(suite_reduced_soundness(opts));
    out.push_back(suite_forced_moves(opts));
    out.push_back(suite_endgame(opts));
    out.push_back(suite_parity_neutrality(opts));
    out.push_back(suite_deficient(opts));
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace sumtriples
