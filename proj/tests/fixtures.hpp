#pragma once

#include <string>
#include <vector>

#include "gkflow/corollaries.hpp"
#include "gkflow/generator.hpp"
#include "gkflow/poset.hpp"

namespace fixtures {

using namespace gkflow;

// Five elements a..e with covers a<b, b<d, c<d, d<e.
inline Poset sample_poset() {
    return transitive_closure({"a", "b", "c", "d", "e"},
                              {{"a", "b"}, {"b", "d"}, {"c", "d"}, {"d", "e"}});
}

// The labeling a:1 e:2 b:3 d:4 c:5.
inline Labeling sample_labeling(const Poset& poset) {
    std::vector<int> ranks(5, 0);
    ranks[poset.id_of("a")] = 1;
    ranks[poset.id_of("e")] = 2;
    ranks[poset.id_of("b")] = 3;
    ranks[poset.id_of("d")] = 4;
    ranks[poset.id_of("c")] = 5;
    return Labeling(ranks);
}

inline std::vector<IdPair> sample_cp_pairs(const Poset& poset) {
    std::vector<std::pair<std::string, std::string>> names = {
        {"a", "e"}, {"a", "b"}, {"a", "d"}, {"e", "b"},
        {"e", "d"}, {"b", "d"}, {"a", "c"}};
    std::vector<IdPair> pairs;
    for (const auto& [x, y] : names)
        pairs.emplace_back(poset.id_of(x), poset.id_of(y));
    return pairs;
}

// The worked 5-element instance: the compatibility relation is every
// h-increasing pair within {a, b, d, e} plus (a, c).
inline Instance sample_instance() {
    Poset poset = sample_poset();
    Labeling h = sample_labeling(poset);
    auto pairs = sample_cp_pairs(poset);
    return validate_instance(poset, h, CompatRelation(5, pairs));
}

inline Sequence seq(const Instance& inst, std::initializer_list<const char*> names) {
    std::vector<std::string> list;
    for (const char* name : names) list.emplace_back(name);
    return sequence_of(inst, list);
}

inline Poset chain_poset(int n) {
    std::vector<std::string> elements;
    std::vector<NamePair> covers;
    for (int i = 1; i <= n; ++i) elements.push_back("c" + std::to_string(i));
    for (int i = 1; i < n; ++i) covers.emplace_back(elements[i - 1], elements[i]);
    return transitive_closure(elements, covers);
}

inline Poset antichain_poset(int n) {
    std::vector<std::string> elements;
    for (int i = 1; i <= n; ++i) elements.push_back("x" + std::to_string(i));
    return transitive_closure(elements, {});
}

// Antichain poset with the forced relation, which is empty.
inline Instance antichain_instance(int n) {
    Poset poset = antichain_poset(n);
    std::vector<int> ranks(n);
    for (int i = 0; i < n; ++i) ranks[i] = i + 1;
    return validate_instance(poset, Labeling(ranks), CompatRelation(n, {}));
}

// A small seeded corpus spanning the three relation modes.
inline std::vector<Instance> corpus(int count, int max_n, uint64_t seed) {
    std::vector<Instance> out;
    for (int i = 0; i < count; ++i) {
        Rng rng(seed + static_cast<uint64_t>(i));
        int n = 1 + i % max_n;
        out.push_back(random_instance(n, static_cast<CpMode>(i % 3), rng));
    }
    return out;
}

} // namespace fixtures
