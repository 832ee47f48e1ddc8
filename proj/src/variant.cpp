#include "sumtriples/variant.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sumtriples/solver.hpp"

namespace sumtriples {

VariantProblem variant_problem(int n) {
    if (n < 3) throw std::invalid_argument("variant_problem: n must be >= 3 (no triple fits)");
    VariantProblem p;
    p.n = n;
    p.t = n / 3;
    // For n = 6 or 9 (mod 12) the greedy bound floor(n/3) is unreachable:
    // 3t disjoint triple elements would have to carry an odd total.
    const int res = n % 12;
    if (res == 6 || res == 9) p.t -= 1;
    p.r = n - 3 * p.t;
    p.parity = static_cast<int>((static_cast<int64_t>(n) * (n + 1) / 2) % 2);
    return p;
}

namespace {

void gen_subsets(int n, int r, int parity, bool filter, std::vector<int>& cur,
                 int next, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        if (filter) {
            int s = 0;
            for (int v : cur) s += v;
            if (s % 2 != parity) return;
        }
        out.push_back(cur);
        return;
    }
    const int need = r - static_cast<int>(cur.size());
    for (int v = next; v <= n - need + 1; ++v) {
        cur.push_back(v);
        gen_subsets(n, r, parity, filter, cur, v + 1, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> candidates(const VariantProblem& p, bool filter) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_subsets(p.n, p.r, p.parity, filter, cur, 1, out);
    return out;
}

}  // namespace

std::vector<std::vector<int>> exclusion_candidates(const VariantProblem& p) {
    return candidates(p, true);
}

VariantResult count_a002849(int n, const SolverConfig& config, const VariantOptions& opts) {
    if (config.tier > Tier::THM2)
        throw std::invalid_argument(
            "count_a002849: endgame tier not applicable (subproblems are not "
            "full-problem states); use thm2 or below");
    const VariantProblem p = variant_problem(n);
    const std::vector<std::vector<int>> cand = candidates(p, opts.use_parity_filter);

    size_t start = 0;
    if (opts.resume_after) {
        const std::vector<int>& mark = *opts.resume_after;
        if (static_cast<int>(mark.size()) != p.r)
            throw std::invalid_argument("resume marker: wrong size, expected r elements");
        for (size_t i = 0; i < mark.size(); ++i) {
            if (mark[i] < 1 || mark[i] > n || (i > 0 && mark[i] <= mark[i - 1]))
                throw std::invalid_argument("resume marker: not a strictly increasing subset of 1..n");
        }
        while (start < cand.size() && !(mark < cand[start])) ++start;
    }

    VariantResult res;
    res.candidates = cand.size();
    res.skipped = start;
    const size_t work = cand.size() - start;
    if (work == 0) return res;

    auto solve_one = [&](size_t idx) {
        const std::vector<int>& excl = cand[idx];
        std::vector<int> rest;
        rest.reserve(static_cast<size_t>(3) * p.t);
        size_t e = 0;
        for (int v = 1; v <= n; ++v) {
            if (e < excl.size() && excl[e] == v) {
                ++e;
                continue;
            }
            rest.push_back(v);
        }
        VariantProgress pr;
        pr.index = idx;
        pr.total = cand.size();
        pr.excluded = excl;
        if (rest.empty()) {
            // r = n is impossible here (r <= 3), but keep the degenerate
            // branch well defined
            pr.subcount = 1;
        } else {
            SearchStats st = count(SearchState::from_subset(rest, n), config);
            pr.subcount = st.solutions;
            pr.stats = st;
        }
        return pr;
    };

    const int workers = std::max(1, opts.workers);
    if (workers == 1 || work == 1) {
        for (size_t i = start; i < cand.size(); ++i) {
            VariantProgress pr = solve_one(i);
            res.count += pr.subcount;
            res.stats += pr.stats;
            if (opts.progress) opts.progress(pr);
        }
        return res;
    }

    // Parallel over exclusion sets. Workers pick the next E off a shared
    // counter; the main thread emits progress strictly in lexicographic
    // order as results come in, so output is identical to the sequential
    // run no matter how the subproblems are scheduled.
    std::vector<VariantProgress> results(cand.size());
    std::vector<char> done(cand.size(), 0);
    std::atomic<size_t> next{start};
    std::atomic<bool> failed{false};
    std::mutex mu;
    std::condition_variable cv;
    std::exception_ptr failure;

    auto worker = [&]() {
        try {
            for (;;) {
                if (failed.load(std::memory_order_relaxed)) return;
                const size_t i = next.fetch_add(1);
                if (i >= cand.size()) return;
                VariantProgress pr = solve_one(i);
                {
                    std::lock_guard<std::mutex> lk(mu);
                    results[i] = std::move(pr);
                    done[i] = 1;
                }
                cv.notify_all();
            }
        } catch (...) {
            failed.store(true, std::memory_order_relaxed);
            std::lock_guard<std::mutex> lk(mu);
            if (!failure) failure = std::current_exception();
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    const size_t nthreads = std::min<size_t>(static_cast<size_t>(workers), work);
    pool.reserve(nthreads);
    for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);

    for (size_t i = start; i < cand.size(); ++i) {
        std::unique_lock<std::mutex> lk(mu);
        cv.wait(lk, [&] { return done[i] || failure; });
        if (failure) break;
        VariantProgress pr = results[i];
        lk.unlock();
        res.count += pr.subcount;
        res.stats += pr.stats;
        if (opts.progress) opts.progress(pr);
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return res;
}

}  // namespace sumtriples
