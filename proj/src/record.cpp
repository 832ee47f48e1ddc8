#include "sumtriples/record.hpp"

#include <sstream>

#include "json.hpp"

namespace sumtriples {

RunRecord make_record(const std::string& command, const std::string& algo, int n,
                      const SearchStats& st, int64_t elapsed_ms, int workers) {
    RunRecord r;
    r.command = command;
    r.algo = algo;
    r.n = n;
    r.count = st.solutions;
    r.calls = st.calls;
    r.prunes_sum = st.prunes_sum;
    r.prunes_cutoff = st.prunes_cutoff;
    r.forced_moves = st.forced_moves;
    r.endgame_hits = st.endgame_hits;
    r.elapsed_ms = elapsed_ms;
    r.workers = workers;
    return r;
}

std::string to_jsonl(const RunRecord& r) {
    // nlohmann::json objects keep keys sorted, which is exactly the
    // determinism the output contract wants
    nlohmann::json j;
    j["algo"] = r.algo;
    j["calls"] = r.calls;
    j["command"] = r.command;
    j["count"] = r.count;
    j["elapsed_ms"] = r.elapsed_ms;
    j["endgame_hits"] = r.endgame_hits;
    j["forced_moves"] = r.forced_moves;
    j["n"] = r.n;
    j["prunes_cutoff"] = r.prunes_cutoff;
    j["prunes_sum"] = r.prunes_sum;
    j["workers"] = r.workers;
    return j.dump();
}

RunRecord record_from_jsonl(const std::string& line) {
    const nlohmann::json j = nlohmann::json::parse(line);
    RunRecord r;
    r.command = j.at("command").get<std::string>();
    r.algo = j.at("algo").get<std::string>();
    r.n = j.at("n").get<int>();
    r.count = j.at("count").get<uint64_t>();
    r.calls = j.at("calls").get<uint64_t>();
    r.prunes_sum = j.at("prunes_sum").get<uint64_t>();
    r.prunes_cutoff = j.at("prunes_cutoff").get<uint64_t>();
    r.forced_moves = j.at("forced_moves").get<uint64_t>();
    r.endgame_hits = j.at("endgame_hits").get<uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<int64_t>();
    r.workers = j.at("workers").get<int>();
    return r;
}

std::string to_csv_row(const RunRecord& r) {
    std::ostringstream os;
    os << r.algo << ',' << r.n << ',' << r.count << ',' << r.calls << ',' << r.elapsed_ms;
    return os.str();
}

}  // namespace sumtriples
