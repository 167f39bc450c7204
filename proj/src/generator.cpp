#include "gkflow/generator.hpp"

#include <algorithm>

namespace gkflow {

Poset random_poset(int n, Rng& rng) {
    static const double densities[] = {0.0, 0.15, 0.3, 0.5, 0.75, 1.0};
    double density = densities[rng.uniform(0, 5)];

    std::vector<std::string> elements;
    elements.reserve(n);
    for (int i = 1; i <= n; ++i) elements.push_back("e" + std::to_string(i));

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<NamePair> covers;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.chance(density))
                covers.emplace_back(elements[order[a]], elements[order[b]]);
    return transitive_closure(elements, covers);
}

Labeling random_labeling(int n, Rng& rng) {
    std::vector<int> ranks(n);
    for (int i = 0; i < n; ++i) ranks[i] = i + 1;
    rng.shuffle(ranks);
    return Labeling(std::move(ranks));
}

namespace {

std::vector<IdPair> close_pairs(int n, std::vector<IdPair> pairs) {
    std::vector<char> mat(static_cast<size_t>(n) * n, 0);
    for (auto [x, y] : pairs) mat[x * n + y] = 1;
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x) {
            if (!mat[x * n + k]) continue;
            for (int y = 0; y < n; ++y)
                if (mat[k * n + y]) mat[x * n + y] = 1;
        }
    std::vector<IdPair> out;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (mat[x * n + y]) out.emplace_back(x, y);
    return out;
}

} // namespace

Instance random_instance(int n, CpMode mode, Rng& rng) {
    Poset poset = random_poset(n, rng);
    Labeling h = random_labeling(n, rng);
    std::vector<IdPair> pairs = forced_pairs(poset, h);
    switch (mode) {
    case CpMode::Minimal:
        break;
    case CpMode::Full:
        pairs.clear();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && h.rank(x) < h.rank(y)) pairs.emplace_back(x, y);
        break;
    case CpMode::Intermediate:
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && h.rank(x) < h.rank(y) && rng.chance(0.3))
                    pairs.emplace_back(x, y);
        pairs = close_pairs(n, std::move(pairs));
        break;
    }
    return validate_instance(std::move(poset), std::move(h), CompatRelation(n, std::move(pairs)));
}

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    rng.shuffle(perm);
    return perm;
}

AntichainFamily random_antichain_family(const Instance& inst, Rng& rng) {
    const int n = inst.size();
    int k = n == 0 ? 1 : rng.uniform(1, n);
    std::vector<ElementId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<Sequence> members(k);
    for (ElementId e : order) {
        if (rng.chance(0.15)) continue; // leave some elements uncovered
        std::vector<int> slots(k);
        for (int s = 0; s < k; ++s) slots[s] = s;
        rng.shuffle(slots);
        for (int s : slots) {
            bool fits = true;
            for (ElementId other : members[s])
                if (inst.poset().comparable(e, other)) fits = false;
            if (fits) {
                members[s].push_back(e);
                break;
            }
        }
    }
    members.erase(std::remove_if(members.begin(), members.end(),
                                 [](const Sequence& s) { return s.empty(); }),
                  members.end());
    return make_antichain_family(inst, std::move(members));
}

} // namespace gkflow
