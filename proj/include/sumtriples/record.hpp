#pragma once

#include <cstdint>
#include <string>

#include "sumtriples/stats.hpp"

namespace sumtriples {

// One benchmark/count row, as printed by the CLI. The field set mirrors the
// stats plus enough context (command, algo, n, workers) to replay the run.
struct RunRecord {
    std::string command;
    std::string algo;
    int n = 0;
    uint64_t count = 0;
    uint64_t calls = 0;
    uint64_t prunes_sum = 0;
    uint64_t prunes_cutoff = 0;
    uint64_t forced_moves = 0;
    uint64_t endgame_hits = 0;
    int64_t elapsed_ms = 0;
    int workers = 1;

    bool operator==(const RunRecord&) const = default;
};

RunRecord make_record(const std::string& command, const std::string& algo, int n,
                      const SearchStats& st, int64_t elapsed_ms, int workers);

// jsonl: one compact JSON object per line, keys in fixed (alphabetical)
// order so identical runs serialize identically.
std::string to_jsonl(const RunRecord& r);
RunRecord record_from_jsonl(const std::string& line);

// csv: the bench table layout
inline constexpr const char* kCsvHeader = "algo,n,count,calls,elapsed_ms";
std::string to_csv_row(const RunRecord& r);

}  // namespace sumtriples
