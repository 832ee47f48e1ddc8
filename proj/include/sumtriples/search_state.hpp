#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sumtriples {

// A sum-triple {x,y,z} with x < y < z and x + y = z.
struct Triple {
    int x = 0, y = 0, z = 0;

    Triple() = default;
    Triple(int x_, int y_, int z_) : x(x_), y(y_), z(z_) {
        if (!(x < y && y < z) || x + y != z)
            throw std::invalid_argument("not a sum-triple");
    }

    bool operator==(const Triple&) const = default;
};

enum class Mode : uint8_t { GENERAL, REDUCED };

// The set still to be partitioned, kept sorted, with the two running sums
//   S1 = b_1 + ... + b_{2m}   (low block)
//   S2 = b_{2m+1} + ... + b_{3m}   (high block)
// maintained incrementally on every removal. Any partition must place, per
// triple, at least two elements in the low block, which is where the S1 <= S2
// pruning test comes from. REDUCED means S1 = S2 has been established on the
// way down, so every later triple takes two low elements and one high one.
class SearchState {
  public:
    SearchState() = default;

    // The full problem {1,...,3n}.
    static SearchState from_full(int n) {
        if (n < 1) throw std::invalid_argument("from_full: n must be >= 1");
        SearchState s;
        s.elems_.resize(static_cast<size_t>(3) * n);
        for (int v = 1; v <= 3 * n; ++v) s.elems_[v - 1] = v;
        s.bound_ = 3 * n;
        s.member_.assign(s.bound_ + 1, 1);
        s.member_[0] = 0;
        s.recompute_sums();
        s.full_problem_ = true;
        return s;
    }

    // An arbitrary subset; value_bound caps the membership table.
    static SearchState from_subset(const std::vector<int>& values, int value_bound) {
        if (values.empty() || values.size() % 3 != 0)
            throw std::invalid_argument("from_subset: size must be a positive multiple of 3");
        SearchState s;
        s.bound_ = value_bound;
        s.member_.assign(value_bound + 1, 0);
        s.elems_ = values;
        std::sort(s.elems_.begin(), s.elems_.end());
        for (int v : s.elems_) {
            if (v < 1 || v > value_bound)
                throw std::invalid_argument("from_subset: value out of range");
            if (s.member_[v])
                throw std::invalid_argument("from_subset: duplicate value");
            s.member_[v] = 1;
        }
        s.recompute_sums();
        s.full_problem_ = false;
        return s;
    }

    int m() const { return static_cast<int>(elems_.size()) / 3; }
    size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    int value_bound() const { return bound_; }
    int64_t low_sum() const { return s1_; }
    int64_t high_sum() const { return s2_; }
    Mode mode() const { return mode_; }
    void set_mode(Mode mo) { mode_ = mo; }
    bool full_problem() const { return full_problem_; }

    // b_{i+1} in the 1-based notation of the comments; indices here are 0-based.
    int at(int i) const { return elems_[static_cast<size_t>(i)]; }
    const std::vector<int>& elements() const { return elems_; }

    bool contains(int v) const {
        return v >= 1 && v <= bound_ && member_[static_cast<size_t>(v)] != 0;
    }

    // All (i,k), 0 < i < k, with b_0 + b_i = b_k, in increasing i. The k scan
    // resumes where the previous match left off (the target b_0+b_i only
    // grows), and stops for good once b_0 + b_i exceeds the largest element.
    // In REDUCED mode only low-low-high pairs survive: i < 2m, k >= 2m.
    std::vector<std::pair<int, int>> candidate_partners() const {
        std::vector<std::pair<int, int>> out;
        const int n3 = static_cast<int>(elems_.size());
        if (n3 < 3) return out;
        const int m2 = 2 * (n3 / 3);
        const int b0 = elems_[0];
        const int last = elems_[n3 - 1];
        const bool reduced = (mode_ == Mode::REDUCED);
        const int i_end = reduced ? m2 : n3;
        int k = reduced ? m2 : 2;
        for (int i = 1; i < i_end; ++i) {
            const int target = b0 + elems_[i];
            if (target > last) break;
            if (k <= i) k = i + 1;
            while (elems_[k] < target) ++k;
            if (elems_[k] == target) out.emplace_back(i, k);
        }
        return out;
    }

    // Removes {b_0, b_i, b_k} (requiring b_0 + b_i = b_k) into `out`,
    // updating the sums by whichever of the three shift formulas applies.
    // Removing three elements moves the low/high boundary down by two, so
    // the correction depends on where i and k sit relative to it:
    //   both high:      S1' = S1 - b_0 - b_{2m-1},  S2' = S2 - b_i - b_k + b_{2m-1}
    //   k high only:    S1' = S1 - b_0 - b_i,       S2' = S2 - b_k
    //   both low:       S1' = S1 - b_0 - b_i - b_k + b_{2m},  S2' = S2 - b_{2m}
    // (0-based; the old boundary sits between positions 2m-1 and 2m).
    void remove_triple_into(int i, int k, SearchState& out) const {
        const int n3 = static_cast<int>(elems_.size());
        if (n3 < 6) throw std::invalid_argument("remove_triple: need m >= 2");
        if (!(0 < i && i < k && k < n3)) throw std::out_of_range("remove_triple: bad indices");
        const int b0 = elems_[0], bi = elems_[i], bk = elems_[k];
        if (b0 + bi != bk) throw std::invalid_argument("remove_triple: b_0 + b_i != b_k");

        const int m2 = 2 * (n3 / 3);
        out.elems_.resize(static_cast<size_t>(n3) - 3);
        int w = 0;
        for (int j = 1; j < n3; ++j)
            if (j != i && j != k) out.elems_[w++] = elems_[j];

        out.member_ = member_;
        out.member_[static_cast<size_t>(b0)] = 0;
        out.member_[static_cast<size_t>(bi)] = 0;
        out.member_[static_cast<size_t>(bk)] = 0;

        if (i >= m2) {
            out.s1_ = s1_ - b0 - elems_[m2 - 1];
            out.s2_ = s2_ - bi - bk + elems_[m2 - 1];
        } else if (k >= m2) {
            out.s1_ = s1_ - b0 - bi;
            out.s2_ = s2_ - bk;
        } else {
            out.s1_ = s1_ - b0 - bi - bk + elems_[m2];
            out.s2_ = s2_ - elems_[m2];
        }
        out.bound_ = bound_;
        out.mode_ = mode_;
        out.full_problem_ = full_problem_;
    }

    SearchState remove_triple(int i, int k) const {
        SearchState out;
        remove_triple_into(i, k, out);
        return out;
    }

    // From-scratch recomputation, used by consistency checks.
    void recompute_sums() {
        const int n3 = static_cast<int>(elems_.size());
        const int m2 = 2 * (n3 / 3);
        s1_ = s2_ = 0;
        for (int j = 0; j < m2; ++j) s1_ += elems_[j];
        for (int j = m2; j < n3; ++j) s2_ += elems_[j];
    }

    bool operator==(const SearchState& o) const {
        return elems_ == o.elems_ && bound_ == o.bound_ && s1_ == o.s1_ && s2_ == o.s2_ &&
               mode_ == o.mode_ && full_problem_ == o.full_problem_;
    }

  private:
    std::vector<int> elems_;
    std::vector<uint8_t> member_;
    int bound_ = 0;
    int64_t s1_ = 0;
    int64_t s2_ = 0;
    Mode mode_ = Mode::GENERAL;
    bool full_problem_ = false;
};

}  // namespace sumtriples
