#include "gkflow/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace gkflow {

namespace {

struct NodeCounter {
    long long nodes = 0;
    long long limit;
    explicit NodeCounter(long long lim) : limit(lim) {}
    void tick() {
        if (++nodes > limit)
            throw BudgetExceededError("oracle search budget exceeded");
    }
};

void check_n(int n, const OracleBudget& budget) {
    if (n > budget.max_n)
        throw BudgetExceededError("instance too large for brute-force oracle: n = " +
                                  std::to_string(n));
}

void check_perm(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v])
            throw ParseError("not a permutation of 1..n");
        seen[v] = 1;
    }
}

} // namespace

int brute_A(const Instance& inst, int k, const OracleBudget& budget) {
    const int n = inst.size();
    check_n(n, budget);
    if (k <= 0 || n == 0) return 0;
    k = std::min(k, n);

    // Adjacentable sequences are h-increasing, so a family is an assignment
    // of elements (taken in h-rank order) to sequence slots or "unused".
    std::vector<ElementId> by_rank(n);
    for (int r = 1; r <= n; ++r) by_rank[r - 1] = inst.element_at_rank(r);

    NodeCounter counter(budget.max_nodes);
    int best = 0;
    std::vector<ElementId> last; // last element of each open slot
    std::function<void(int, int)> go = [&](int pos, int total) {
        counter.tick();
        best = std::max(best, total);
        if (pos == n) return;
        if (total + (n - pos) <= best) return; // each element adds at most 1
        ElementId e = by_rank[pos];
        go(pos + 1, total); // leave e unused
        for (size_t s = 0; s < last.size(); ++s) {
            if (!inst.compatible(last[s], e)) continue;
            ElementId saved = last[s];
            last[s] = e;
            go(pos + 1, total + (inst.less(saved, e) ? 1 : 0));
            last[s] = saved;
        }
        if (static_cast<int>(last.size()) < k) {
            last.push_back(e);
            go(pos + 1, total + 1);
            last.pop_back();
        }
    };
    go(0, 0);
    return best;
}

namespace {

// desc of the h-sorted sequence of every rank subset, by subset DP.
// Bit r-1 stands for the element of rank r.
std::vector<int> desc_by_rank_mask(const Instance& inst) {
    const int n = inst.size();
    std::vector<uint32_t> asc_below(n, 0); // ranks r' < r with element(r') < element(r)
    for (int r = 1; r <= n; ++r)
        for (int q = 1; q < r; ++q)
            if (inst.less(inst.element_at_rank(q), inst.element_at_rank(r)))
                asc_below[r - 1] |= uint32_t(1) << (q - 1);

    const size_t total = size_t(1) << n;
    std::vector<char> valid(total, 1);
    std::vector<int> best(total, 0);
    for (size_t m = 1; m < total; ++m) {
        int top = 31 - __builtin_clz(static_cast<uint32_t>(m));
        uint32_t rest = static_cast<uint32_t>(m) & ~(uint32_t(1) << top);
        valid[m] = valid[rest] && (asc_below[top] & rest) == 0;
        if (valid[m]) {
            best[m] = __builtin_popcount(static_cast<uint32_t>(m));
        } else {
            for (uint32_t bits = static_cast<uint32_t>(m); bits; bits &= bits - 1)
                best[m] = std::max(best[m], best[m & ~(bits & -bits)]);
        }
    }
    return best;
}

} // namespace

int brute_D(const Instance& inst, int k, const OracleBudget& budget) {
    const int n = inst.size();
    check_n(n, budget);
    if (k <= 0 || n == 0) return 0;
    k = std::min(k, n); // extra slots can only stay empty

    const std::vector<int> desc_of = desc_by_rank_mask(inst);
    std::vector<uint32_t> cp_out(n, 0), cp_in(n, 0); // by rank bit
    for (int r = 1; r <= n; ++r)
        for (int q = 1; q <= n; ++q) {
            if (inst.compatible(inst.element_at_rank(r), inst.element_at_rank(q)))
                cp_out[r - 1] |= uint32_t(1) << (q - 1);
            if (inst.compatible(inst.element_at_rank(q), inst.element_at_rank(r)))
                cp_in[r - 1] |= uint32_t(1) << (q - 1);
        }

    NodeCounter counter(budget.max_nodes);
    int best = 0;
    std::vector<uint32_t> slot;                  // rank mask per open slot
    std::vector<std::vector<char>> cross(k, std::vector<char>(k, 0)); // cross[i][j]: relation crosses slot i -> slot j
    std::function<void(int, int)> go = [&](int pos, int assigned) {
        counter.tick();
        if (pos == n) {
            int total = 0;
            for (uint32_t m : slot) total += desc_of[m];
            best = std::max(best, total);
            return;
        }
        if (assigned + (n - pos) <= best) return; // sum(desc) <= elements placed
        uint32_t bit = uint32_t(1) << pos;        // pos = rank - 1
        go(pos + 1, assigned); // unused

        auto try_slot = [&](size_t s) {
            // Update crossing flags; overlap in both directions is fatal and
            // stays fatal, so prune immediately.
            std::vector<std::pair<size_t, size_t>> touched;
            bool bad = false;
            for (size_t t = 0; t < slot.size() && !bad; ++t) {
                if (t == s) continue;
                if (!cross[s][t] && (cp_out[pos] & slot[t])) {
                    cross[s][t] = 1;
                    touched.emplace_back(s, t);
                }
                if (!cross[t][s] && (cp_in[pos] & slot[t])) {
                    cross[t][s] = 1;
                    touched.emplace_back(t, s);
                }
                if (cross[s][t] && cross[t][s]) bad = true;
            }
            if (!bad) {
                slot[s] |= bit;
                go(pos + 1, assigned + 1);
                slot[s] &= ~bit;
            }
            for (auto [a, b] : touched) cross[a][b] = 0;
        };

        for (size_t s = 0; s < slot.size(); ++s) try_slot(s);
        if (static_cast<int>(slot.size()) < k) {
            slot.push_back(0);
            try_slot(slot.size() - 1);
            slot.pop_back();
        }
    };
    go(0, 0);
    return best;
}

int brute_chain_antichain(const Poset& poset, int k, CoverMode mode,
                          const OracleBudget& budget) {
    const int n = poset.size();
    check_n(n, budget);
    if (k <= 0 || n == 0) return 0;
    k = std::min(k, n);

    std::vector<uint32_t> comp(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && poset.comparable(x, y)) comp[x] |= uint32_t(1) << y;

    NodeCounter counter(budget.max_nodes);
    int best = 0;
    std::vector<uint32_t> slot;
    std::function<void(int, int)> go = [&](int pos, int covered) {
        counter.tick();
        best = std::max(best, covered);
        if (pos == n) return;
        if (covered + (n - pos) <= best) return;
        uint32_t bit = uint32_t(1) << pos;
        go(pos + 1, covered);
        for (size_t s = 0; s < slot.size(); ++s) {
            bool fits = mode == CoverMode::Chains ? (slot[s] & ~comp[pos]) == 0
                                                  : (slot[s] & comp[pos]) == 0;
            if (!fits) continue;
            slot[s] |= bit;
            go(pos + 1, covered + 1);
            slot[s] &= ~bit;
        }
        if (static_cast<int>(slot.size()) < k) {
            slot.push_back(bit);
            go(pos + 1, covered + 1);
            slot.pop_back();
        }
    };
    go(0, 0);
    return best;
}

namespace {

int star_ascents(const std::vector<int>& perm, int k, const OracleBudget& budget) {
    const int n = static_cast<int>(perm.size());
    NodeCounter counter(budget.max_nodes);
    int best = 0;
    std::vector<int> last; // last value of each open subsequence
    std::function<void(int, int)> go = [&](int pos, int total) {
        counter.tick();
        best = std::max(best, total);
        if (pos == n) return;
        if (total + (n - pos) <= best) return;
        int v = perm[pos];
        go(pos + 1, total);
        for (size_t s = 0; s < last.size(); ++s) {
            int saved = last[s];
            last[s] = v;
            go(pos + 1, total + (v > saved ? 1 : 0));
            last[s] = saved;
        }
        if (static_cast<int>(last.size()) < k) {
            last.push_back(v);
            go(pos + 1, total + 1);
            last.pop_back();
        }
    };
    go(0, 0);
    return best;
}

int star_descents(const std::vector<int>& perm, int k) {
    const int n = static_cast<int>(perm.size());
    // lds[i][j]: longest strictly decreasing subsequence of perm[i..j)
    std::vector<std::vector<int>> lds(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i < n; ++i) {
        std::vector<int> at(n, 0); // at[t]: best ending at position t
        for (int j = i; j < n; ++j) {
            at[j] = 1;
            for (int t = i; t < j; ++t)
                if (perm[t] > perm[j]) at[j] = std::max(at[j], at[t] + 1);
            lds[i][j + 1] = std::max(lds[i][j], at[j]);
        }
    }
    // memo[start][blocks]: best split of perm[start..n) into `blocks` blocks
    std::vector<std::vector<int>> memo(n + 1, std::vector<int>(k + 1, -1));
    std::function<int(int, int)> go = [&](int start, int blocks) -> int {
        if (blocks == 1) return lds[start][n];
        int& m = memo[start][blocks];
        if (m >= 0) return m;
        int best = 0;
        for (int mid = start; mid <= n; ++mid)
            best = std::max(best, lds[start][mid] + go(mid, blocks - 1));
        return m = best;
    };
    return go(0, k);
}

} // namespace

int localized_star(const std::vector<int>& perm, int k, StarMode mode,
                   const OracleBudget& budget) {
    check_perm(perm);
    const int n = static_cast<int>(perm.size());
    check_n(n, budget);
    if (k <= 0 || n == 0) return 0;
    k = std::min(k, n);
    return mode == StarMode::Ascents ? star_ascents(perm, k, budget)
                                     : star_descents(perm, k);
}

Partition rsk_shape(const std::vector<int>& perm) {
    check_perm(perm);
    std::vector<std::vector<int>> rows;
    for (int x : perm) {
        int carry = x;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                carry = 0;
                break;
            }
            std::swap(*it, carry);
        }
        if (carry != 0) rows.push_back({carry});
    }
    std::vector<int> shape;
    shape.reserve(rows.size());
    for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
    return Partition(std::move(shape));
}

} // namespace gkflow
