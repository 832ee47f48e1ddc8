#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sumtriples/oracle.hpp"
#include "sumtriples/parallel.hpp"
#include "sumtriples/selftest.hpp"
#include "sumtriples/solver.hpp"
#include "sumtriples/variant.hpp"

namespace py = pybind11;
using namespace sumtriples;

namespace {

SolverConfig config_for(const std::string& algo) {
    SolverConfig cfg;
    cfg.tier = tier_from_name(algo);
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "counting partitions of {1,...,3n} into sum-triples, plus the "
              "maximum disjoint-triple variant";

    py::class_<Triple>(m, "Triple")
        .def(py::init<int, int, int>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readonly("x", &Triple::x)
        .def_readonly("y", &Triple::y)
        .def_readonly("z", &Triple::z)
        .def("__repr__", [](const Triple& t) {
            return "Triple(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," +
                   std::to_string(t.z) + ")";
        })
        .def("__eq__", [](const Triple& a, const Triple& b) { return a == b; });

    py::class_<SearchStats>(m, "SearchStats")
        .def_readonly("solutions", &SearchStats::solutions)
        .def_readonly("calls", &SearchStats::calls)
        .def_readonly("prunes_sum", &SearchStats::prunes_sum)
        .def_readonly("prunes_cutoff", &SearchStats::prunes_cutoff)
        .def_readonly("forced_moves", &SearchStats::forced_moves)
        .def_readonly("endgame_hits", &SearchStats::endgame_hits)
        .def("__repr__", [](const SearchStats& s) {
            return "SearchStats(solutions=" + std::to_string(s.solutions) +
                   ", calls=" + std::to_string(s.calls) + ")";
        });

    py::class_<SearchState>(m, "SearchState")
        .def_static("from_full", &SearchState::from_full, py::arg("n"))
        .def_static("from_subset", &SearchState::from_subset, py::arg("values"),
                    py::arg("value_bound"))
        .def_property_readonly("m", &SearchState::m)
        .def_property_readonly("elements", &SearchState::elements)
        .def_property_readonly("low_sum", &SearchState::low_sum)
        .def_property_readonly("high_sum", &SearchState::high_sum)
        .def_property_readonly("full_problem", &SearchState::full_problem)
        .def_property_readonly("reduced",
                               [](const SearchState& s) { return s.mode() == Mode::REDUCED; })
        .def("contains", &SearchState::contains, py::arg("value"))
        .def("candidate_partners", &SearchState::candidate_partners,
             "pairs (i, k) of 0-based positions with b[0]+b[i] == b[k]")
        .def("remove_triple", &SearchState::remove_triple, py::arg("i"), py::arg("k"),
             "new state without {b[0], b[i], b[k]} (0-based positions)");

    m.def("feasible", &feasible, py::arg("n"),
          "whether {1,...,3n} can be partitioned at all (n = 0 or 1 mod 4)");

    m.def(
        "count",
        [](const SearchState& s, const std::string& algo) { return count(s, config_for(algo)); },
        py::arg("state"), py::arg("algo") = "thm2+3",
        "count partitions of the state's elements; algo in "
        "{naive, basic, thm2, thm2+3}");

    m.def(
        "count_full",
        [](int n, const std::string& algo, int workers) {
            if (!feasible(n)) return SearchStats{};
            return count_parallel(SearchState::from_full(n), workers, config_for(algo));
        },
        py::arg("n"), py::arg("algo") = "thm2+3", py::arg("workers") = 1,
        "count partitions of {1,...,3n}");

    m.def("oracle_count", &oracle_count, py::arg("values"),
          "independent reference count (pairing enumeration, at most 15 values)");
    m.def("oracle_a002849", &oracle_a002849, py::arg("n"),
          "independent reference for the variant problem, n <= 15");

    m.def(
        "variant_problem",
        [](int n) {
            const VariantProblem p = variant_problem(n);
            return py::make_tuple(p.t, p.r, p.parity);
        },
        py::arg("n"), "(target collection size t, exclusion size r, excluded-sum parity)");

    m.def(
        "count_a002849",
        [](int n, int workers) {
            SolverConfig cfg;
            cfg.tier = Tier::THM2;
            VariantOptions opts;
            opts.workers = workers;
            return count_a002849(n, cfg, opts).count;
        },
        py::arg("n"), py::arg("workers") = 1,
        "number of maximum-size collections of disjoint sum-triples in {1,...,n}");

    m.def(
        "self_check",
        [](int max_n, int subset_trials, uint32_t seed) {
            SelftestOptions opts;
            opts.max_n = max_n;
            opts.subset_trials = subset_trials;
            opts.seed = seed;
            py::list out;
            for (const SuiteResult& r : run_battery(opts))
                out.append(py::make_tuple(r.name, r.passed, r.checked, r.detail));
            return out;
        },
        py::arg("max_n") = 5, py::arg("subset_trials") = 50, py::arg("seed") = 7,
        "run the cross-validation battery; returns (name, passed, checked, detail) tuples");
}
