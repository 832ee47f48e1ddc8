#include "sumtriples/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumtriples {

bool feasible(int n) {
    if (n < 1) throw std::invalid_argument("feasible: n must be >= 1");
    return n % 4 == 0 || n % 4 == 1;
}

namespace {

struct Ctx {
    Tier tier = Tier::THM2_3;
    bool endgame = true;
    SearchStats st;
    std::vector<SearchState> buf;  // child scratch, one slot per depth
    detail::FrontierSink* frontier = nullptr;
    const PartitionSink* sink = nullptr;
    std::vector<Triple> trail;  // triples committed so far, enumeration only
};

void count_rec(const SearchState& s, int depth, Ctx& ctx) {
    if (ctx.frontier && depth == ctx.frontier->depth_limit) {
        // This node becomes a task; the worker that picks it up will count
        // the call, so the prefix must not.
        ctx.frontier->tasks->push_back(s);
        return;
    }
    ++ctx.st.calls;

    const auto& e = s.elements();
    const int n3 = static_cast<int>(e.size());
    const int m = n3 / 3;

    if (m == 1) {
        // For the sum-aware tiers the base case is the sum test itself: at
        // m = 1, S1 = b_1 + b_2 and S2 = b_3, so S1 > S2 is the usual
        // low-block-too-heavy rejection and S1 = S2 is the final triple.
        if (ctx.tier != Tier::NAIVE && s.low_sum() > s.high_sum()) {
            ++ctx.st.prunes_sum;
            return;
        }
        const bool ok = ctx.tier == Tier::NAIVE ? e[0] + e[1] == e[2]
                                                : s.low_sum() == s.high_sum();
        if (ok) {
            ++ctx.st.solutions;
            if (ctx.sink) {
                ctx.trail.emplace_back(e[0], e[1], e[2]);
                (*ctx.sink)(ctx.trail);
                ctx.trail.pop_back();
            }
        }
        return;
    }

    // Six elements left under smallest-first descent from the full set: the
    // remainder is so constrained that only four triple patterns can open a
    // partition, and each pattern's complement triple is implied by S1 = S2.
    // Resolves the node in closed form, no deeper calls.
    if (ctx.tier == Tier::THM2_3 && ctx.endgame && m == 2 && s.full_problem()) {
        ++ctx.st.endgame_hits;
        if (s.low_sum() != s.high_sum()) return;
        static constexpr int pats[4][2] = {{1, 4}, {2, 4}, {3, 4}, {3, 5}};
        for (auto [i, k] : pats) {
            if (e[0] + e[i] != e[k]) continue;
            ++ctx.st.solutions;
            if (ctx.sink) {
                int rest[3], w = 0;
                for (int j = 1; j < 6; ++j)
                    if (j != i && j != k) rest[w++] = e[j];
                ctx.trail.emplace_back(e[0], e[i], e[k]);
                ctx.trail.emplace_back(rest[0], rest[1], rest[2]);
                (*ctx.sink)(ctx.trail);
                ctx.trail.pop_back();
                ctx.trail.pop_back();
            }
        }
        return;
    }

    const int m2 = 2 * m;
    Mode mode = s.mode();
    if (mode == Mode::GENERAL && ctx.tier >= Tier::BASIC) {
        if (s.low_sum() > s.high_sum()) {  // no partition can exist (low block too heavy)
            ++ctx.st.prunes_sum;
            return;
        }
        if (ctx.tier >= Tier::THM2) {
            if (s.low_sum() == s.high_sum()) {
                mode = Mode::REDUCED;
            } else if (e[0] + e[m2] > e[n3 - 1]) {
                // Even b_{2m+1} is too big to be a middle element, so every
                // triple must be low-low-high; that forces S1 = S2 in any
                // solvable subtree, and in an unsolvable one the reduced
                // scan can only find fewer branches, never more. Same
                // invocation, just processed in reduced form.
                mode = Mode::REDUCED;
            }
        }
    }

    if (ctx.tier >= Tier::THM2 && mode == Mode::REDUCED) {
        if (e[0] + e[m2 - 1] == e[n3 - 1]) {
            // b_{2m} pairs with b_1 or with nothing: anything else it could
            // join would overshoot b_{3m}. Commit {b_1, b_{2m}, b_{3m}} as
            // the only branch.
            ++ctx.st.forced_moves;
            SearchState& child = ctx.buf[depth];
            s.remove_triple_into(m2 - 1, n3 - 1, child);
            child.set_mode(Mode::REDUCED);
            if (ctx.sink) ctx.trail.emplace_back(e[0], e[m2 - 1], e[n3 - 1]);
            count_rec(child, depth + 1, ctx);
            if (ctx.sink) ctx.trail.pop_back();
            return;
        }
        const int last = e[n3 - 1];
        int k = m2;  // partners live in the high block only
        for (int i = 1; i < m2; ++i) {
            const int target = e[0] + e[i];
            if (target > last) {
                ++ctx.st.prunes_cutoff;
                break;
            }
            while (e[k] < target) ++k;
            if (e[k] != target) continue;
            SearchState& child = ctx.buf[depth];
            s.remove_triple_into(i, k, child);
            child.set_mode(Mode::REDUCED);
            if (ctx.sink) ctx.trail.emplace_back(e[0], e[i], e[k]);
            count_rec(child, depth + 1, ctx);
            if (ctx.sink) ctx.trail.pop_back();
        }
        return;
    }

    if (ctx.tier >= Tier::THM2) {
        // General-mode scan with the monotone partner pointer: the target
        // b_1 + b_i only grows with i, so the k scan never restarts, and
        // once the target passes b_{3m} no later i can match either.
        const int last = e[n3 - 1];
        int k = 2;
        for (int i = 1; i < n3 - 1; ++i) {
            const int target = e[0] + e[i];
            if (target > last) {
                ++ctx.st.prunes_cutoff;
                break;
            }
            if (k <= i) k = i + 1;
            while (e[k] < target) ++k;
            if (e[k] != target) continue;
            SearchState& child = ctx.buf[depth];
            s.remove_triple_into(i, k, child);
            if (ctx.sink) ctx.trail.emplace_back(e[0], e[i], e[k]);
            count_rec(child, depth + 1, ctx);
            if (ctx.sink) ctx.trail.pop_back();
        }
        return;
    }

    // naive and basic: plain scan over i, membership test for b_1 + b_i
    for (int i = 1; i < n3 - 1; ++i) {
        const int target = e[0] + e[i];
        if (!s.contains(target)) continue;
        const int k = static_cast<int>(
            std::lower_bound(e.begin() + i + 1, e.end(), target) - e.begin());
        SearchState& child = ctx.buf[depth];
        s.remove_triple_into(i, k, child);
        if (ctx.sink) ctx.trail.emplace_back(e[0], e[i], e[k]);
        count_rec(child, depth + 1, ctx);
        if (ctx.sink) ctx.trail.pop_back();
    }
}

SearchStats run(const SearchState& s, Tier tier, bool endgame,
                detail::FrontierSink* frontier, const PartitionSink* sink) {
    Ctx ctx;
    ctx.tier = tier;
    ctx.endgame = endgame;
    ctx.frontier = frontier;
    ctx.sink = sink;
    ctx.buf.resize(static_cast<size_t>(std::max(1, s.m())));
    count_rec(s, 0, ctx);
    return ctx.st;
}

}  // namespace

SearchStats count_naive(const SearchState& s) { return run(s, Tier::NAIVE, false, nullptr, nullptr); }
SearchStats count_basic(const SearchState& s) { return run(s, Tier::BASIC, false, nullptr, nullptr); }
SearchStats count_thm2(const SearchState& s) { return run(s, Tier::THM2, false, nullptr, nullptr); }

SearchStats count_thm2_3(const SearchState& s) {
    if (!s.full_problem())
        throw std::invalid_argument(
            "count_thm2_3: the m=2 endgame is only valid for smallest-first "
            "descent from the full set");
    return run(s, Tier::THM2_3, true, nullptr, nullptr);
}

SearchStats count(const SearchState& s, const SolverConfig& config, const PartitionSink* sink) {
    if (config.tier == Tier::THM2_3 && !s.full_problem())
        throw std::invalid_argument("tier thm2+3 requires a full-problem state");
    const PartitionSink* use_sink = config.enumerate ? sink : nullptr;
    return run(s, config.tier, config.endgame_enabled, nullptr, use_sink);
}

namespace detail {

SearchStats count_with_frontier(const SearchState& s, const SolverConfig& config,
                                FrontierSink* frontier) {
    if (config.tier == Tier::THM2_3 && !s.full_problem())
        throw std::invalid_argument("tier thm2+3 requires a full-problem state");
    return run(s, config.tier, config.endgame_enabled, frontier, nullptr);
}

}  // namespace detail

}  // namespace sumtriples
