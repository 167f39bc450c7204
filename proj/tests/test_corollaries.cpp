#include "doctest.h"

#include <functional>

#include "fixtures.hpp"
#include "gkflow/corollaries.hpp"
#include "gkflow/oracles.hpp"
#include "gkflow/solver.hpp"
#include "gkflow/verify.hpp"

using namespace gkflow;

TEST_CASE("localized instance construction") {
    Instance inst = build_localized_instance({2, 4, 3, 1});
    CHECK(inst.size() == 4);
    CHECK(inst.rank(inst.poset().id_of("2")) == 1);
    CHECK(inst.rank(inst.poset().id_of("4")) == 2);
    CHECK(inst.rank(inst.poset().id_of("3")) == 3);
    CHECK(inst.rank(inst.poset().id_of("1")) == 4);
    CHECK(inst.cp().size() == 6); // every h-increasing pair of 4 elements
    CHECK_THROWS_AS(build_localized_instance({1, 3}), ParseError);
}

TEST_CASE("localized runs at the extremes") {
    SUBCASE("identity permutation") {
        Instance inst = build_localized_instance({1, 2, 3, 4});
        SolverState st = run(build_network(inst));
        CHECK(extract_partitions(st.trace, 4).lambda == Partition({4}));
    }
    SUBCASE("reversal") {
        Instance inst = build_localized_instance({4, 3, 2, 1});
        SolverState st = run(build_network(inst));
        CHECK(extract_partitions(st.trace, 4).lambda == Partition({1, 1, 1, 1}));
    }
}

TEST_CASE("classical instance construction") {
    Poset poset = fixtures::sample_poset();
    std::vector<int> ranks(5);
    ranks[poset.id_of("a")] = 1;
    ranks[poset.id_of("b")] = 2;
    ranks[poset.id_of("c")] = 3;
    ranks[poset.id_of("d")] = 4;
    ranks[poset.id_of("e")] = 5;
    Instance inst = build_classical_instance(poset, Labeling(ranks));
    CHECK(inst.cp().size() == inst.poset().relation_pairs().size());

    // The sample labeling puts e before d, so it is no linear extension.
    CHECK_THROWS_AS(build_classical_instance(poset, fixtures::sample_labeling(poset)),
                    NotLinearExtensionError);

    Instance chain = build_classical_instance(fixtures::chain_poset(3));
    SolverState st = run(build_network(chain));
    DualityResult result = extract_partitions(st.trace, 3);
    CHECK(result.lambda == Partition({3}));
    CHECK(result.mu == Partition({1, 1, 1}));
}

TEST_CASE("classical duality on the five-element poset") {
    VerifyOutcome outcome = verify_classical(fixtures::sample_poset());
    CHECK(outcome.ok());
    CHECK(outcome.duality.lambda == Partition({4, 1}));
    CHECK(outcome.duality.mu == Partition({2, 1, 1, 1}));
    CHECK(outcome.oracle_d == std::vector<int>{2, 3, 4, 5, 5});
}

TEST_CASE("linear extensions") {
    CHECK(linear_extensions(fixtures::chain_poset(3), 10).size() == 1);
    CHECK(linear_extensions(fixtures::antichain_poset(3), 10).size() == 6);
    for (const Instance& inst : fixtures::corpus(12, 5, 7)) {
        Labeling ext = default_linear_extension(inst.poset());
        for (int x = 0; x < inst.size(); ++x)
            for (int y = 0; y < inst.size(); ++y)
                if (inst.less(x, y)) CHECK(ext.rank(x) < ext.rank(y));
    }
}

TEST_CASE("antichain exchange") {
    // two elements with a < b, labeled in order
    Poset poset = transitive_closure({"a", "b"}, {{"a", "b"}});
    Instance inst = build_classical_instance(poset);
    ElementId a = poset.id_of("a"), b = poset.id_of("b");

    SUBCASE("inverted singletons swap") {
        AntichainFamily family = make_antichain_family(inst, {{b}, {a}});
        AntichainFamily swapped = antichain_exchange(family, 0, 1, inst);
        CHECK(swapped.members[0] == Sequence{a});
        CHECK(swapped.members[1] == Sequence{b});
        CHECK(family_key(swapped, inst.labeling()) < family_key(family, inst.labeling()));
    }
    SUBCASE("already ordered families stay put") {
        AntichainFamily family = make_antichain_family(inst, {{a}, {b}});
        CHECK(antichain_exchange(family, 0, 1, inst) == family);
    }
}

TEST_CASE("exchange example from the five-element poset") {
    Poset poset = fixtures::sample_poset();
    Instance inst = build_classical_instance(poset);
    ElementId a = poset.id_of("a"), b = poset.id_of("b"), c = poset.id_of("c");
    AntichainFamily family = make_antichain_family(inst, {{a, c}, {b}});
    // nothing in {b} lies below anything in {a, c}
    CHECK(antichain_exchange(family, 0, 1, inst) == family);
    CHECK(family_key(family, inst.labeling()) == std::vector<int>{1, 3, 2});
}

TEST_CASE("family validation") {
    Poset poset = fixtures::sample_poset();
    Instance inst = build_classical_instance(poset);
    ElementId a = poset.id_of("a"), b = poset.id_of("b"), c = poset.id_of("c");
    CHECK_THROWS_AS(make_antichain_family(inst, {{a, b}}), Error); // a < b
    CHECK_THROWS_AS(make_antichain_family(inst, {{a}, {a}}), OverlapError);
    AntichainFamily sorted = make_antichain_family(inst, {{c, b}});
    CHECK(sorted.members[0] == Sequence{b, c}); // re-ordered by rank
}

TEST_CASE("normalization") {
    Poset two = transitive_closure({"a", "b"}, {{"a", "b"}});
    Instance inst = build_classical_instance(two);
    ElementId a = two.id_of("a"), b = two.id_of("b");

    AntichainFamily inverted = make_antichain_family(inst, {{b}, {a}});
    NormalizeStats stats;
    AntichainFamily fixed = normalize_antichains(inverted, inst, &stats);
    CHECK(fixed.members[0] == Sequence{a});
    CHECK(fixed.members[1] == Sequence{b});
    CHECK(stats.productive_exchanges == 1);

    AntichainFamily already = make_antichain_family(inst, {{a}, {b}});
    CHECK(normalize_antichains(already, inst) == already);
}

namespace {

// Test-side search for k disjoint antichains covering a target element count.
bool find_antichain_cover(const Poset& poset, int k, int target,
                          std::vector<Sequence>& members) {
    const int n = poset.size();
    members.assign(k, {});
    std::function<bool(int, int)> place = [&](int pos, int covered) -> bool {
        if (covered + (n - pos) < target) return false;
        if (covered == target) return true;
        if (pos == n) return false;
        for (int s = 0; s < k; ++s) {
            bool fits = true;
            for (ElementId other : members[s])
                if (poset.comparable(pos, other)) fits = false;
            if (!fits) continue;
            members[s].push_back(pos);
            if (place(pos + 1, covered + 1)) return true;
            members[s].pop_back();
        }
        return place(pos + 1, covered);
    };
    return place(0, 0);
}

} // namespace

TEST_CASE("normalized maximal families realize the descent oracle") {
    for (const Instance& base : fixtures::corpus(12, 5, 71)) {
        const Poset& poset = base.poset();
        Instance classical = build_classical_instance(poset);
        int n = poset.size();
        for (int k = 1; k <= std::min(3, n); ++k) {
            int target = brute_chain_antichain(poset, k, CoverMode::Antichains);
            std::vector<Sequence> members;
            REQUIRE(find_antichain_cover(poset, k, target, members));
            AntichainFamily family = make_antichain_family(classical, members);
            AntichainFamily normal = normalize_antichains(family, classical);
            CHECK(family_size(normal) == target);
            CHECK(target == brute_D(classical, k));
        }
    }
}

TEST_CASE("random family normalization keeps sizes and members valid") {
    int families_checked = 0;
    for (const Instance& base : fixtures::corpus(20, 6, 202)) {
        Instance classical = build_classical_instance(base.poset());
        Rng rng(500 + families_checked);
        AntichainFamily family = random_antichain_family(classical, rng);
        AntichainFamily normal = normalize_antichains(family, classical);
        CHECK(family_size(normal) == family_size(family));
        CHECK_NOTHROW(make_antichain_family(classical, normal.members));
        ++families_checked;
    }
    CHECK(families_checked == 20);
}
