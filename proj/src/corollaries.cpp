#include "gkflow/corollaries.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gkflow {

Instance build_localized_instance(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v]) throw ParseError("not a permutation of 1..n");
        seen[v] = 1;
    }

    std::vector<std::string> elements;
    elements.reserve(n);
    for (int v = 1; v <= n; ++v) elements.push_back(std::to_string(v));
    std::vector<char> lt(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) lt[x * n + y] = 1; // element ids follow values
    Poset poset(std::move(elements), std::move(lt));

    std::vector<int> ranks(n, 0); // h(value) = position of value in the permutation
    for (int pos = 0; pos < n; ++pos) ranks[perm[pos] - 1] = pos + 1;
    Labeling h(std::move(ranks));

    std::vector<IdPair> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && h.rank(x) < h.rank(y)) pairs.emplace_back(x, y);
    return validate_instance(std::move(poset), std::move(h), CompatRelation(n, std::move(pairs)));
}

Labeling default_linear_extension(const Poset& poset) {
    const int n = poset.size();
    std::vector<int> indegree(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (poset.less(x, y)) ++indegree[y];
    std::vector<int> ranks(n, 0);
    std::vector<char> placed(n, 0);
    for (int r = 1; r <= n; ++r) {
        int pick = -1;
        for (int x = 0; x < n; ++x)
            if (!placed[x] && indegree[x] == 0) {
                pick = x;
                break;
            }
        if (pick == -1) throw InvariantViolation("poset has no topological order");
        placed[pick] = 1;
        ranks[pick] = r;
        for (int y = 0; y < n; ++y)
            if (poset.less(pick, y)) --indegree[y];
    }
    return Labeling(std::move(ranks));
}

std::vector<Labeling> linear_extensions(const Poset& poset, int limit) {
    const int n = poset.size();
    std::vector<Labeling> out;
    std::vector<int> ranks(n, 0);
    std::vector<char> placed(n, 0);
    std::function<void(int)> place = [&](int r) {
        if (static_cast<int>(out.size()) >= limit) return;
        if (r > n) {
            out.emplace_back(ranks);
            return;
        }
        for (int x = 0; x < n && static_cast<int>(out.size()) < limit; ++x) {
            if (placed[x]) continue;
            bool ready = true;
            for (int y = 0; y < n && ready; ++y)
                if (poset.less(y, x) && !placed[y]) ready = false;
            if (!ready) continue;
            placed[x] = 1;
            ranks[x] = r;
            place(r + 1);
            placed[x] = 0;
        }
    };
    place(1);
    return out;
}

Instance build_classical_instance(const Poset& poset, const std::optional<Labeling>& h) {
    const int n = poset.size();
    Labeling labeling = h ? *h : default_linear_extension(poset);
    if (labeling.size() != n)
        throw Error("labeling size does not match the poset");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (poset.less(x, y) && labeling.rank(x) >= labeling.rank(y))
                throw NotLinearExtensionError("labeling is not a linear extension: " +
                                              poset.name(x) + " < " + poset.name(y) +
                                              " but ranks disagree");
    std::vector<IdPair> pairs = poset.relation_pairs();
    return validate_instance(poset, std::move(labeling), CompatRelation(n, std::move(pairs)));
}

AntichainFamily make_antichain_family(const Instance& inst, std::vector<Sequence> members) {
    std::set<ElementId> used;
    for (auto& member : members) {
        for (ElementId e : member) {
            if (e < 0 || e >= inst.size())
                throw UnknownElementError("antichain element id out of range");
            if (!used.insert(e).second)
                throw OverlapError("antichains share element " + inst.name(e));
        }
        for (size_t a = 0; a < member.size(); ++a)
            for (size_t b = a + 1; b < member.size(); ++b)
                if (inst.poset().comparable(member[a], member[b]))
                    throw Error("member is not an antichain: " + inst.name(member[a]) +
                                " and " + inst.name(member[b]) + " are comparable");
        std::sort(member.begin(), member.end(), [&](ElementId a, ElementId b) {
            return inst.rank(a) < inst.rank(b);
        });
    }
    return AntichainFamily{std::move(members)};
}

int family_size(const AntichainFamily& family) {
    int total = 0;
    for (const auto& member : family.members) total += static_cast<int>(member.size());
    return total;
}

std::vector<int> family_key(const AntichainFamily& family, const Labeling& h) {
    std::vector<int> key;
    for (const auto& member : family.members)
        for (ElementId e : member) key.push_back(h.rank(e));
    return key;
}

AntichainFamily antichain_exchange(const AntichainFamily& family, int i, int j,
                                   const Instance& inst) {
    if (i < 0 || j < 0 || i >= static_cast<int>(family.members.size()) ||
        j >= static_cast<int>(family.members.size()) || i >= j)
        throw Error("exchange indices must satisfy 0 <= i < j < member count");
    const Sequence& di = family.members[i];
    const Sequence& dj = family.members[j];

    auto above_some = [&](ElementId x, const Sequence& seq) {
        for (ElementId y : seq)
            if (inst.less(y, x)) return true;
        return false;
    };
    auto below_some = [&](ElementId y, const Sequence& seq) {
        for (ElementId x : seq)
            if (inst.less(y, x)) return true;
        return false;
    };

    Sequence move_down, move_up; // A: leaves d_i, B: leaves d_j
    for (ElementId x : di)
        if (above_some(x, dj)) move_down.push_back(x);
    for (ElementId y : dj)
        if (below_some(y, di)) move_up.push_back(y);
    if (move_down.empty() && move_up.empty()) return family;

    auto without = [](const Sequence& seq, const Sequence& gone) {
        Sequence out;
        for (ElementId e : seq)
            if (std::find(gone.begin(), gone.end(), e) == gone.end()) out.push_back(e);
        return out;
    };
    AntichainFamily next = family;
    Sequence new_i = without(di, move_down);
    new_i.insert(new_i.end(), move_up.begin(), move_up.end());
    Sequence new_j = without(dj, move_up);
    new_j.insert(new_j.end(), move_down.begin(), move_down.end());
    auto by_rank = [&](ElementId a, ElementId b) { return inst.rank(a) < inst.rank(b); };
    std::sort(new_i.begin(), new_i.end(), by_rank);
    std::sort(new_j.begin(), new_j.end(), by_rank);
    next.members[i] = std::move(new_i);
    next.members[j] = std::move(new_j);

    for (int m : {i, j})
        for (size_t a = 0; a < next.members[m].size(); ++a)
            for (size_t b = a + 1; b < next.members[m].size(); ++b)
                if (inst.poset().comparable(next.members[m][a], next.members[m][b]))
                    throw InvariantViolation("exchange produced a comparable pair");
    if (family_size(next) != family_size(family))
        throw InvariantViolation("exchange changed the family size");
    if (family_key(next, inst.labeling()) >= family_key(family, inst.labeling()))
        throw InvariantViolation("productive exchange did not lower the family key");
    return next;
}

AntichainFamily normalize_antichains(const AntichainFamily& family, const Instance& inst,
                                     NormalizeStats* stats) {
    AntichainFamily current = family;
    const int m = static_cast<int>(current.members.size());
    NormalizeStats local;
    // The key strictly decreases with every productive exchange, so the loop
    // is finite; the guard turns a bug into an error rather than a hang.
    const long long guard = 2'000'000;
    bool changed = true;
    while (changed) {
        changed = false;
        ++local.rounds;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                AntichainFamily next = antichain_exchange(current, i, j, inst);
                if (next != current) {
                    current = std::move(next);
                    changed = true;
                    ++local.productive_exchanges;
                    if (local.productive_exchanges > guard)
                        throw InvariantViolation("normalization failed to terminate");
                }
            }
    }
    for (size_t a = 0; a < current.members.size(); ++a)
        for (size_t b = a + 1; b < current.members.size(); ++b) {
            if (current.members[a].empty() || current.members[b].empty()) continue;
            if (semi_overlapping(current.members[a], current.members[b], inst))
                throw InvariantViolation("normalized family is still semi-overlapping");
        }
    if (stats) *stats = local;
    return current;
}

} // namespace gkflow
