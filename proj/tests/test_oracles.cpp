#include "doctest.h"

#include <functional>

#include "fixtures.hpp"
#include "gkflow/corollaries.hpp"
#include "gkflow/oracles.hpp"

using namespace gkflow;

TEST_CASE("ascent families on the sample instance") {
    Instance inst = fixtures::sample_instance();
    CHECK(brute_A(inst, 1) == 3);
    CHECK(brute_A(inst, 2) == 4);
    CHECK(brute_A(inst, 3) == 5);
    CHECK(brute_A(inst, 4) == 5);
    CHECK(brute_A(inst, 5) == 5);
    CHECK(brute_A(inst, 0) == 0);
}

TEST_CASE("descent families on the sample instance") {
    Instance inst = fixtures::sample_instance();
    CHECK(brute_D(inst, 1) == 3);
    CHECK(brute_D(inst, 2) == 4);
    CHECK(brute_D(inst, 3) == 5);
    CHECK(brute_D(inst, 5) == 5);
    CHECK(brute_D(inst, 6) == 5);
    CHECK(brute_D(inst, 0) == 0);
}

TEST_CASE("extreme posets") {
    Instance chain = build_classical_instance(fixtures::chain_poset(3));
    CHECK(brute_A(chain, 1) == 3);
    CHECK(brute_D(chain, 1) == 1);

    Instance anti = fixtures::antichain_instance(3);
    CHECK(brute_A(anti, 1) == 1);
    CHECK(brute_A(anti, 3) == 3);
    CHECK(brute_D(anti, 1) == 3); // the whole h order is one valid sequence
    CHECK(brute_D(anti, 3) == 3);
}

TEST_CASE("oracle values are monotone in k and settle at n") {
    for (const Instance& inst : fixtures::corpus(18, 5, 33)) {
        int n = inst.size();
        int prev_a = 0, prev_d = 0;
        for (int k = 1; k <= n + 1; ++k) {
            int a = brute_A(inst, k);
            int d = brute_D(inst, k);
            CHECK(a >= prev_a);
            CHECK(d >= prev_d);
            prev_a = a;
            prev_d = d;
        }
        CHECK(prev_a == n);
        CHECK(prev_d == n);
    }
}

TEST_CASE("chain and antichain covers") {
    Poset chain = fixtures::chain_poset(3);
    CHECK(brute_chain_antichain(chain, 1, CoverMode::Chains) == 3);
    CHECK(brute_chain_antichain(chain, 1, CoverMode::Antichains) == 1);
    CHECK(brute_chain_antichain(chain, 3, CoverMode::Antichains) == 3);

    Poset anti = fixtures::antichain_poset(3);
    CHECK(brute_chain_antichain(anti, 1, CoverMode::Chains) == 1);
    CHECK(brute_chain_antichain(anti, 3, CoverMode::Chains) == 3);
    CHECK(brute_chain_antichain(anti, 1, CoverMode::Antichains) == 3);

    Poset sample = fixtures::sample_poset();
    CHECK(brute_chain_antichain(sample, 1, CoverMode::Chains) == 4); // a<b<d<e
    CHECK(brute_chain_antichain(sample, 2, CoverMode::Chains) == 5);
    // Only {a,c} and {b,c} are 2-element antichains and they share c.
    CHECK(brute_chain_antichain(sample, 1, CoverMode::Antichains) == 2);
    CHECK(brute_chain_antichain(sample, 2, CoverMode::Antichains) == 3);
    CHECK(brute_chain_antichain(sample, 4, CoverMode::Antichains) == 5);
}

TEST_CASE("permutation-sequence quantities") {
    std::vector<int> sigma = {2, 4, 3, 1};
    CHECK(localized_star(sigma, 1, StarMode::Descents) == 3); // 4,3,1
    CHECK(localized_star(sigma, 2, StarMode::Descents) == 4);
    CHECK(localized_star(sigma, 1, StarMode::Ascents) == 2);
    CHECK(localized_star(sigma, 2, StarMode::Ascents) == 3);
    CHECK(localized_star(sigma, 3, StarMode::Ascents) == 4);

    std::vector<int> id5 = {1, 2, 3, 4, 5};
    CHECK(localized_star(id5, 1, StarMode::Ascents) == 5);
    CHECK(localized_star(id5, 1, StarMode::Descents) == 1);

    CHECK_THROWS_AS(localized_star({1, 1}, 1, StarMode::Ascents), ParseError);
}

TEST_CASE("insertion-tableau shapes") {
    CHECK(rsk_shape({1, 2, 3}) == Partition({3}));
    CHECK(rsk_shape({3, 2, 1}) == Partition({1, 1, 1}));
    CHECK(rsk_shape({2, 4, 3, 1}) == Partition({2, 1, 1}));
    CHECK(rsk_shape({}) == Partition{});
}

TEST_CASE("budget enforcement") {
    OracleBudget tight;
    tight.max_n = 3;
    Instance inst = fixtures::antichain_instance(4);
    CHECK_THROWS_AS(brute_A(inst, 1, tight), BudgetExceededError);
    CHECK_THROWS_AS(brute_D(inst, 1, tight), BudgetExceededError);
    CHECK_THROWS_AS(brute_chain_antichain(inst.poset(), 1, CoverMode::Chains, tight),
                    BudgetExceededError);
    tight.max_nodes = 4;
    Instance bigger = fixtures::antichain_instance(3);
    CHECK_THROWS_AS(brute_A(bigger, 2, tight), BudgetExceededError);
}

namespace {

// Definition-literal reference: enumerate every assignment of elements to k
// slots, keep the families the definitions allow, and take the best total
// using only the public sequence statistics. No pruning, no shared machinery.
int literal_best(const Instance& inst, int k, bool adjacentable_mode) {
    const int n = inst.size();
    std::vector<ElementId> by_rank(n);
    for (int r = 1; r <= n; ++r) by_rank[r - 1] = inst.element_at_rank(r);
    int best = 0;
    std::vector<int> choice(n, -1);
    auto evaluate = [&]() {
        std::vector<Sequence> slots(k);
        for (int pos = 0; pos < n; ++pos)
            if (choice[pos] >= 0) slots[choice[pos]].push_back(by_rank[pos]);
        int total = 0;
        if (adjacentable_mode) {
            for (const Sequence& s : slots) {
                if (classify_sequence(s, inst) != SeqClass::Adjacentable) return;
                total += asc(s, inst);
            }
        } else {
            for (size_t a = 0; a < slots.size(); ++a)
                for (size_t b = a + 1; b < slots.size(); ++b)
                    if (semi_overlapping(slots[a], slots[b], inst)) return;
            for (const Sequence& s : slots) total += desc(s, inst);
        }
        best = std::max(best, total);
    };
    std::function<void(int)> assign = [&](int pos) {
        if (pos == n) {
            evaluate();
            return;
        }
        for (int c = -1; c < k; ++c) {
            choice[pos] = c;
            assign(pos + 1);
        }
        choice[pos] = -1;
    };
    assign(0);
    return best;
}

} // namespace

TEST_CASE("optimized oracles agree with a definition-literal reference") {
    for (const Instance& inst : fixtures::corpus(24, 4, 55)) {
        for (int k = 1; k <= inst.size(); ++k) {
            CAPTURE(inst.size());
            CAPTURE(k);
            CHECK(brute_A(inst, k) == literal_best(inst, k, true));
            CHECK(brute_D(inst, k) == literal_best(inst, k, false));
        }
    }
    Instance sample = fixtures::sample_instance();
    for (int k = 1; k <= 5; ++k) {
        CHECK(brute_A(sample, k) == literal_best(sample, k, true));
        CHECK(brute_D(sample, k) == literal_best(sample, k, false));
    }
}
