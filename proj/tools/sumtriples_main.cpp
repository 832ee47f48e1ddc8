// sumtriples: count partitions of {1,...,3n} into triples {x,y,z} with
// x+y=z, and the related maximum disjoint-triple counts in {1,...,n}.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sumtriples/oracle.hpp"
#include "sumtriples/parallel.hpp"
#include "sumtriples/record.hpp"
#include "sumtriples/selftest.hpp"
#include "sumtriples/solver.hpp"
#include "sumtriples/variant.hpp"

namespace st = sumtriples;

namespace {

int64_t ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int env_workers() {
    const char* v = std::getenv("SUMTRIPLES_WORKERS");
    if (!v) return 1;
    try {
        const int w = std::stoi(v);
        if (w >= 1) return w;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid SUMTRIPLES_WORKERS=" << v << "\n";
    return 1;
}

void print_text_record(const st::RunRecord& r, const std::string& note) {
    std::cout << r.command << ": n=" << r.n << " algo=" << r.algo
              << " workers=" << r.workers;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\ncount=" << r.count << "\ncalls=" << r.calls
              << " prunes_sum=" << r.prunes_sum << " prunes_cutoff=" << r.prunes_cutoff
              << " forced_moves=" << r.forced_moves << " endgame_hits=" << r.endgame_hits
              << "\nelapsed_ms=" << r.elapsed_ms << "\n";
}

void print_record(const st::RunRecord& r, const std::string& format, const std::string& note) {
    if (format == "jsonl") {
        std::cout << st::to_jsonl(r) << "\n";
    } else if (format == "csv") {
        std::cout << st::kCsvHeader << "\n" << st::to_csv_row(r) << "\n";
    } else {
        print_text_record(r, note);
    }
}

std::vector<int> parse_marker(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("resume marker: bad integer");
        out.push_back(v);
    }
    return out;
}

struct CountArgs {
    int n = 0;
    std::string algo = "thm2+3";
    bool algo_given = false;
    int workers = 1;
    int split_depth = 0;
    std::string format = "text";
    bool enumerate = false;
    uint64_t enumerate_cap = 1000000;
};

int run_count(const CountArgs& a) {
    st::SolverConfig cfg;
    cfg.tier = st::tier_from_name(a.algo);
    cfg.split_depth = a.split_depth;
    const std::string note = a.algo_given ? "" : "default algorithm";

    if (!st::feasible(a.n)) {
        // 3n(3n+1)/2 is odd, so no set of triple sums can take half of it
        st::RunRecord r = st::make_record("count", a.algo, a.n, {}, 0, a.workers);
        print_record(r, a.format, note.empty() ? "infeasible n, no search" : note);
        return 0;
    }

    const st::SearchState root = st::SearchState::from_full(a.n);

    if (a.enumerate) {
        // pre-count with the same tier, refuse to materialize huge outputs
        const st::SearchStats pre = st::count(root, cfg);
        if (pre.solutions > a.enumerate_cap) {
            std::cerr << "error: --enumerate refused, predicted count " << pre.solutions
                      << " exceeds cap " << a.enumerate_cap << "\n";
            return 2;
        }
        cfg.enumerate = true;
        st::PartitionSink sink = [](const std::vector<st::Triple>& triples) {
            std::ostringstream os;
            for (size_t i = 0; i < triples.size(); ++i) {
                if (i) os << ' ';
                os << '{' << triples[i].x << ',' << triples[i].y << ',' << triples[i].z << '}';
            }
            std::cout << os.str() << "\n";
        };
        const auto t0 = std::chrono::steady_clock::now();
        const st::SearchStats stats = st::count(root, cfg, &sink);
        st::RunRecord r = st::make_record("count", a.algo, a.n, stats, ms_since(t0), 1);
        print_record(r, a.format, note);
        return 0;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const st::SearchStats stats = st::count_parallel(root, a.workers, cfg);
    st::RunRecord r = st::make_record("count", a.algo, a.n, stats, ms_since(t0), a.workers);
    print_record(r, a.format, note);
    return 0;
}

struct BenchArgs {
    std::vector<int> ns;
    std::vector<std::string> algos{"naive", "basic", "thm2", "thm2+3"};
    std::string format = "csv";
};

int run_bench(const BenchArgs& a) {
    if (a.ns.empty() || a.algos.empty()) {
        std::cerr << "error: bench needs at least one n and one algorithm\n";
        return 2;
    }
    std::vector<st::RunRecord> rows;
    for (const std::string& algo : a.algos) {
        const st::Tier tier = st::tier_from_name(algo);
        for (int n : a.ns) {
            st::SolverConfig cfg;
            cfg.tier = tier;
            st::SearchStats stats;
            const auto t0 = std::chrono::steady_clock::now();
            if (st::feasible(n)) stats = st::count(st::SearchState::from_full(n), cfg);
            rows.push_back(st::make_record("bench", algo, n, stats, ms_since(t0), 1));
        }
    }
    if (a.format == "markdown") {
        std::cout << "| algo | n | count | calls | elapsed_ms |\n";
        std::cout << "| --- | ---: | ---: | ---: | ---: |\n";
        for (const auto& r : rows)
            std::cout << "| " << r.algo << " | " << r.n << " | " << r.count << " | "
                      << r.calls << " | " << r.elapsed_ms << " |\n";
    } else {
        std::cout << st::kCsvHeader << "\n";
        for (const auto& r : rows) std::cout << st::to_csv_row(r) << "\n";
    }
    return 0;
}

struct VariantArgs {
    int n = 0;
    int workers = 1;
    std::string format = "text";
    std::string resume;
    bool resume_given = false;
};

int run_a002849(const VariantArgs& a) {
    st::SolverConfig cfg;
    cfg.tier = st::Tier::THM2;  // endgame needs full-problem states, so thm2 is the ceiling here

    std::vector<int> marker;
    if (a.resume_given) marker = parse_marker(a.resume);

    st::VariantOptions opts;
    opts.workers = a.workers;
    if (a.resume_given) opts.resume_after = &marker;

    const bool jsonl = a.format == "jsonl";
    const bool csv = a.format == "csv";
    opts.progress = [&](const st::VariantProgress& p) {
        std::ostringstream es;
        es << '{';
        for (size_t i = 0; i < p.excluded.size(); ++i) es << (i ? "," : "") << p.excluded[i];
        es << '}';
        if (jsonl) {
            nlohmann::json j;
            j["calls"] = p.stats.calls;
            j["event"] = "progress";
            j["excluded"] = p.excluded;
            j["index"] = p.index;
            j["subcount"] = p.subcount;
            j["total_candidates"] = p.total;
            std::cout << j.dump() << "\n";
        } else if (csv) {
            // keep stdout pure record-table in csv mode
            std::cerr << "E=" << es.str() << " subcount=" << p.subcount << " ("
                      << (p.index + 1) << "/" << p.total << ")\n";
        } else {
            std::cout << "E=" << es.str() << " subcount=" << p.subcount << " ("
                      << (p.index + 1) << "/" << p.total << ")\n";
        }
    };

    const auto t0 = std::chrono::steady_clock::now();
    const st::VariantResult res = st::count_a002849(a.n, cfg, opts);
    st::RunRecord r;
    r.command = "a002849";
    r.algo = "thm2";
    r.n = a.n;
    r.count = res.count;
    r.calls = res.stats.calls;
    r.prunes_sum = res.stats.prunes_sum;
    r.prunes_cutoff = res.stats.prunes_cutoff;
    r.forced_moves = res.stats.forced_moves;
    r.endgame_hits = res.stats.endgame_hits;
    r.elapsed_ms = ms_since(t0);
    r.workers = a.workers;
    if (a.resume_given && a.format == "text")
        std::cout << "resumed: skipped " << res.skipped << " of " << res.candidates
                  << " exclusion sets\n";
    print_record(r, a.format, "algorithm thm2, endgame not applicable");
    return 0;
}

struct VerifyArgs {
    int max_n = 5;
    int subset_trials = 200;
    uint32_t seed = 7;
    bool inject_fault = false;
};

int run_verify(const VerifyArgs& a) {
    if (a.max_n < 1 || a.max_n > 5) {
        std::cerr << "error: --max-n must be in 1..5 (the reference oracle enumerates "
                     "all pairings, 3n > 15 elements is too costly)\n";
        return 2;
    }
    st::SelftestOptions opts;
    opts.max_n = a.max_n;
    opts.subset_trials = a.subset_trials;
    opts.seed = a.seed;
    opts.inject_fault = a.inject_fault;
    const auto results = st::run_battery(opts);
    for (const auto& r : results) {
        if (r.passed) {
            std::cout << r.name << ": pass (" << r.checked << " instances)\n";
        } else {
            std::cout << r.name << ": FAIL after " << r.checked << " instances: " << r.detail
                      << "\n";
        }
    }
    return st::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counts partitions of {1..3n} into sum-triples (x+y=z)"};
    app.require_subcommand(1);
    const int workers_default = env_workers();

    CountArgs ca;
    ca.workers = workers_default;
    CLI::App* count = app.add_subcommand("count", "count partitions of {1,...,3n}");
    count->add_option("--n", ca.n, "problem size n (the set is {1,...,3n})")
        ->required()
        ->check(CLI::PositiveNumber);
    CLI::Option* algo_opt =
        count->add_option("--algo", ca.algo, "algorithm tier")
            ->check(CLI::IsMember({"naive", "basic", "thm2", "thm2+3"}));
    count->add_option("--workers", ca.workers, "worker threads (env SUMTRIPLES_WORKERS)")
        ->check(CLI::PositiveNumber);
    count->add_option("--split-depth", ca.split_depth,
                      "parallel frontier depth (default: adaptive)")
        ->check(CLI::PositiveNumber);
    count->add_option("--format", ca.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    count->add_flag("--enumerate", ca.enumerate, "print the partitions (small n only)");
    count->add_option("--enumerate-cap", ca.enumerate_cap,
                      "refuse enumeration above this many partitions");

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand("bench", "timing/call-count table over n and tiers");
    bench->add_option("--ns", ba.ns, "comma list of n values")->required()->delimiter(',');
    bench->add_option("--algos", ba.algos, "comma list of tiers")->delimiter(',');
    bench->add_option("--format", ba.format, "output format")
        ->check(CLI::IsMember({"csv", "markdown"}));

    VariantArgs va;
    va.workers = workers_default;
    CLI::App* variant = app.add_subcommand(
        "a002849", "count maximum collections of disjoint sum-triples in {1,...,n}");
    variant->add_option("--n", va.n, "upper end of the ground set")
        ->required()
        ->check(CLI::Range(3, 1000000));
    variant->add_option("--workers", va.workers, "worker threads (env SUMTRIPLES_WORKERS)")
        ->check(CLI::PositiveNumber);
    variant->add_option("--format", va.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    CLI::Option* resume_opt = variant->add_option(
        "--resume-after", va.resume,
        "skip exclusion sets up to and including this one (comma list, e.g. 2 or 1,5)");

    VerifyArgs ve;
    CLI::App* verify = app.add_subcommand("verify", "run the cross-validation battery");
    verify->add_option("--max-n", ve.max_n, "check full problems up to this n (max 5)");
    verify->add_option("--subset-trials", ve.subset_trials, "random subsets to check")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", ve.seed, "RNG seed for subset generation");
    verify->add_flag("--inject-fault", ve.inject_fault)->group("");  // test fixture, hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ca.algo_given = algo_opt->count() > 0;
    va.resume_given = resume_opt->count() > 0;

    try {
        if (*count) return run_count(ca);
        if (*bench) return run_bench(ba);
        if (*variant) return run_a002849(va);
        if (*verify) return run_verify(ve);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
