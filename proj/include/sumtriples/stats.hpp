#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumtriples {

// Algorithm tiers, weakest to strongest. Ordering is meaningful: each tier
// keeps everything the previous one does and adds more pruning.
enum class Tier : int { NAIVE = 0, BASIC = 1, THM2 = 2, THM2_3 = 3 };

inline const char* tier_name(Tier t) {
    switch (t) {
        case Tier::NAIVE: return "naive";
        case Tier::BASIC: return "basic";
        case Tier::THM2: return "thm2";
        case Tier::THM2_3: return "thm2+3";
    }
    return "?";
}

inline Tier tier_from_name(const std::string& s) {
    if (s == "naive") return Tier::NAIVE;
    if (s == "basic") return Tier::BASIC;
    if (s == "thm2") return Tier::THM2;
    if (s == "thm2+3" || s == "thm2_3") return Tier::THM2_3;
    throw std::invalid_argument("unknown algorithm tier: " + s);
}

// Everything a counting run reports besides the answer itself.
// calls counts every entry into a counting function, root included; a node
// that switches processing mode mid-invocation is still one call, and an
// m=2 endgame resolution is one call.
struct SearchStats {
    uint64_t solutions = 0;
    uint64_t calls = 0;
    uint64_t prunes_sum = 0;     // subtrees rejected by S1 > S2
    uint64_t prunes_cutoff = 0;  // scans stopped early by b_1 + b_i > b_{3m}
    uint64_t forced_moves = 0;   // commits of the mandatory {b_1, b_{2m}, b_{3m}}
    uint64_t endgame_hits = 0;   // m=2 closed-form resolutions

    SearchStats& operator+=(const SearchStats& o) {
        solutions += o.solutions;
        calls += o.calls;
        prunes_sum += o.prunes_sum;
        prunes_cutoff += o.prunes_cutoff;
        forced_moves += o.forced_moves;
        endgame_hits += o.endgame_hits;
        return *this;
    }

    friend SearchStats operator+(SearchStats a, const SearchStats& b) { return a += b; }
    bool operator==(const SearchStats&) const = default;
};

struct SolverConfig {
    Tier tier = Tier::THM2_3;
    bool endgame_enabled = true;  // only consulted by the thm2+3 tier
    bool enumerate = false;       // emit partitions (small runs only)
    int split_depth = 0;          // parallel frontier depth; 0 means adaptive
};

}  // namespace sumtriples
