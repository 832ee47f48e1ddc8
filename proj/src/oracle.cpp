#include "sumtriples/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumtriples/variant.hpp"

namespace sumtriples {

namespace {

uint64_t pair_rec(const std::vector<int>& v, std::vector<char>& used, int left) {
    if (left == 0) return 1;
    int a = 0;
    while (used[a]) ++a;
    used[a] = 1;
    const int n = static_cast<int>(v.size());
    uint64_t total = 0;
    for (int i = a + 1; i < n; ++i) {
        if (used[i]) continue;
        used[i] = 1;
        for (int j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            // block {v[a], v[i], v[j]} is complete; only now look at the sum
            if (v[a] + v[i] == v[j]) {
                used[j] = 1;
                total += pair_rec(v, used, left - 1);
                used[j] = 0;
            }
        }
        used[i] = 0;
    }
    used[a] = 0;
    return total;
}

}  // namespace

uint64_t oracle_count(const std::vector<int>& values) {
    if (values.size() % 3 != 0)
        throw std::invalid_argument("oracle_count: size must be a multiple of 3");
    if (values.size() > 15)
        throw std::invalid_argument("oracle_count: refusing m > 5 (enumeration too large)");
    if (values.empty()) return 1;
    std::vector<int> v = values;
    std::sort(v.begin(), v.end());
    std::vector<char> used(v.size(), 0);
    return pair_rec(v, used, static_cast<int>(v.size()) / 3);
}

namespace {

struct CollectCtx {
    std::vector<Triple> triples;  // all sum-triples in {1,...,n}, lex order
    std::vector<char> taken;      // value -> already used
    uint64_t count = 0;
    std::vector<std::vector<Triple>>* out = nullptr;
    std::vector<Triple> current;
};

void collect_rec(CollectCtx& c, size_t start, int need) {
    if (need == 0) {
        ++c.count;
        if (c.out) c.out->push_back(c.current);
        return;
    }
    for (size_t idx = start; idx < c.triples.size(); ++idx) {
        const Triple& t = c.triples[idx];
        if (c.taken[t.x] || c.taken[t.y] || c.taken[t.z]) continue;
        c.taken[t.x] = c.taken[t.y] = c.taken[t.z] = 1;
        if (c.out) c.current.push_back(t);
        collect_rec(c, idx + 1, need - 1);
        if (c.out) c.current.pop_back();
        c.taken[t.x] = c.taken[t.y] = c.taken[t.z] = 0;
    }
}

CollectCtx make_ctx(int n) {
    CollectCtx c;
    // ascending x, then ascending y: already lexicographic
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; x + y <= n; ++y) c.triples.emplace_back(x, y, x + y);
    c.taken.assign(n + 1, 0);
    return c;
}

}  // namespace

uint64_t oracle_count_collections(int n, int t) {
    if (n < 1 || n > 15)
        throw std::invalid_argument("oracle_count_collections: n must be in 1..15");
    if (t < 0) throw std::invalid_argument("oracle_count_collections: negative t");
    CollectCtx c = make_ctx(n);
    collect_rec(c, 0, t);
    return c.count;
}

uint64_t oracle_a002849(int n) {
    if (n < 3 || n > 15) throw std::invalid_argument("oracle_a002849: n must be in 3..15");
    return oracle_count_collections(n, variant_problem(n).t);
}

std::vector<std::vector<Triple>> oracle_a002849_collections(int n) {
    if (n < 3 || n > 15) throw std::invalid_argument("oracle_a002849: n must be in 3..15");
    CollectCtx c = make_ctx(n);
    std::vector<std::vector<Triple>> out;
    c.out = &out;
    collect_rec(c, 0, variant_problem(n).t);
    return out;
}

}  // namespace sumtriples
