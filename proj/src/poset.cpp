#include "gkflow/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace gkflow {

Poset::Poset(std::vector<std::string> elements, std::vector<char> lt_matrix)
    : n_(static_cast<int>(elements.size())), elements_(std::move(elements)),
      lt_(std::move(lt_matrix)) {
    if (lt_.size() != static_cast<size_t>(n_) * n_)
        throw Error("order matrix size does not match element count");
    for (int i = 0; i < n_; ++i) {
        if (!index_.emplace(elements_[i], i).second)
            throw Error("duplicate element name: " + elements_[i]);
    }
    for (int x = 0; x < n_; ++x) {
        if (less(x, x))
            throw CycleError("order is not irreflexive at " + elements_[x]);
        for (int y = 0; y < n_; ++y) {
            if (x != y && less(x, y) && less(y, x))
                throw CycleError("order is not antisymmetric on (" + elements_[x] +
                                 ", " + elements_[y] + ")");
        }
    }
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (!less(x, y)) continue;
            for (int z = 0; z < n_; ++z)
                if (less(y, z) && !less(x, z))
                    throw Error("order is not transitive on (" + elements_[x] + ", " +
                                elements_[y] + ", " + elements_[z] + ")");
        }
}

ElementId Poset::id_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw UnknownElementError("unknown element: " + name);
    return it->second;
}

std::vector<IdPair> Poset::relation_pairs() const {
    std::vector<IdPair> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (less(x, y)) out.emplace_back(x, y);
    return out;
}

std::vector<IdPair> Poset::cover_pairs() const {
    std::vector<IdPair> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (!less(x, y)) continue;
            bool direct = true;
            for (int z = 0; z < n_ && direct; ++z)
                if (less(x, z) && less(z, y)) direct = false;
            if (direct) out.emplace_back(x, y);
        }
    return out;
}

Poset transitive_closure(const std::vector<std::string>& elements,
                         const std::vector<NamePair>& covers) {
    const int n = static_cast<int>(elements.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        if (!index.emplace(elements[i], i).second)
            throw Error("duplicate element name: " + elements[i]);
    }
    std::vector<char> lt(static_cast<size_t>(n) * n, 0);
    auto at = [&](int x, int y) -> char& { return lt[x * n + y]; };
    for (const auto& [a, b] : covers) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
            throw UnknownElementError("unknown element in covers: " + a);
        if (ib == index.end())
            throw UnknownElementError("unknown element in covers: " + b);
        at(ia->second, ib->second) = 1;
    }
    // Floyd-Warshall closure
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x) {
            if (!at(x, k)) continue;
            for (int y = 0; y < n; ++y)
                if (at(k, y)) at(x, y) = 1;
        }
    for (int x = 0; x < n; ++x)
        if (at(x, x))
            throw CycleError("covers contain a cycle through " + elements[x]);
    return Poset(elements, std::move(lt));
}

Labeling::Labeling(std::vector<int> ranks) : rank_(std::move(ranks)) {
    const int n = static_cast<int>(rank_.size());
    at_rank_.assign(n, -1);
    for (int e = 0; e < n; ++e) {
        int r = rank_[e];
        if (r < 1 || r > n)
            throw Error("labeling rank out of range: " + std::to_string(r));
        if (at_rank_[r - 1] != -1)
            throw Error("labeling is not a bijection: rank " + std::to_string(r) +
                        " used twice");
        at_rank_[r - 1] = e;
    }
}

CompatRelation::CompatRelation(int n, std::vector<IdPair> pairs) : n_(n) {
    mat_.assign(static_cast<size_t>(n) * n, 0);
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw UnknownElementError("relation pair out of range");
        if (x == y)
            throw Error("relation pair relates an element to itself");
        mat_[x * n + y] = 1;
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    pairs_ = std::move(pairs);
}

std::vector<IdPair> forced_pairs(const Poset& poset, const Labeling& h) {
    std::vector<IdPair> out;
    const int n = poset.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (poset.less(x, y) && h.rank(x) < h.rank(y)) out.emplace_back(x, y);
    return out;
}

Instance validate_instance(Poset poset, Labeling h, CompatRelation cp) {
    const int n = poset.size();
    if (h.size() != n || cp.element_count() != n)
        throw Error("poset, labeling and relation sizes disagree");

    std::vector<AxiomViolation> violations;
    auto forced = forced_pairs(poset, h);
    for (auto [x, y] : forced)
        if (!cp.contains(x, y))
            violations.push_back({1, poset.name(x), poset.name(y)});
    for (auto [x, y] : cp.pairs())
        if (h.rank(x) >= h.rank(y))
            violations.push_back({2, poset.name(x), poset.name(y)});
    for (auto [x, y] : cp.pairs())
        for (int z = 0; z < n; ++z)
            if (cp.contains(y, z) && !cp.contains(x, z))
                violations.push_back({3, poset.name(x), poset.name(z)});

    if (!violations.empty()) {
        std::string msg = "compatibility relation violates axiom(s):";
        for (const auto& v : violations)
            msg += " [axiom " + std::to_string(v.axiom) + ": (" + v.x + ", " + v.y + ")]";
        throw ValidationError(msg, std::move(violations));
    }
    return Instance(std::move(poset), std::move(h), std::move(cp), std::move(forced));
}

namespace {

void check_ids(const Sequence& seq, int n) {
    for (ElementId e : seq)
        if (e < 0 || e >= n)
            throw UnknownElementError("sequence element id out of range: " +
                                      std::to_string(e));
}

} // namespace

SeqClass classify_sequence(const Sequence& seq, const Instance& inst) {
    check_ids(seq, inst.size());
    bool adjacentable = true;
    bool h_ordered = true;
    for (size_t j = 0; j + 1 < seq.size(); ++j) {
        if (!inst.compatible(seq[j], seq[j + 1])) adjacentable = false;
        if (inst.rank(seq[j]) >= inst.rank(seq[j + 1])) h_ordered = false;
    }
    if (adjacentable) return SeqClass::Adjacentable;
    return h_ordered ? SeqClass::HOrderedOnly : SeqClass::Neither;
}

int asc(const Sequence& seq, const Instance& inst) {
    if (classify_sequence(seq, inst) != SeqClass::Adjacentable)
        throw NotAdjacentableError("sequence is not adjacentable");
    if (seq.empty()) return 0;
    int ascents = 0;
    for (size_t j = 0; j + 1 < seq.size(); ++j)
        if (inst.less(seq[j], seq[j + 1])) ++ascents;
    return ascents + 1;
}

int desc(const Sequence& seq, const Instance& inst) {
    SeqClass cls = classify_sequence(seq, inst);
    if (cls == SeqClass::Neither)
        throw NotHOrderedError("sequence is not h-ordered");
    const int m = static_cast<int>(seq.size());
    if (m == 0) return 0;
    if (m > 63) throw BudgetExceededError("sequence too long for exact search");

    // Positions i < j may both be kept iff seq[i] is not below seq[j];
    // the answer is a maximum clique of that compatibility graph.
    std::vector<uint64_t> ok(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!inst.less(seq[i], seq[j])) {
                ok[i] |= uint64_t(1) << j;
                ok[j] |= uint64_t(1) << i;
            }
    int best = 0;
    std::function<void(uint64_t, int)> grow = [&](uint64_t cand, int size) {
        if (size > best) best = size;
        while (cand) {
            if (size + __builtin_popcountll(cand) <= best) return;
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            grow(cand & ok[v], size + 1);
        }
    };
    grow(~uint64_t(0) >> (64 - m), 0);
    return best;
}

bool semi_overlapping(const Sequence& a, const Sequence& b, const Instance& inst) {
    check_ids(a, inst.size());
    check_ids(b, inst.size());
    for (ElementId x : a)
        for (ElementId y : b)
            if (x == y)
                throw OverlapError("sequences share element " + inst.name(x));
    bool b_to_a = false;
    bool a_to_b = false;
    for (ElementId s : a)
        for (ElementId t : b) {
            if (inst.compatible(t, s)) b_to_a = true;
            if (inst.compatible(s, t)) a_to_b = true;
        }
    return b_to_a && a_to_b;
}

Sequence sequence_of(const Instance& inst, const std::vector<std::string>& names) {
    Sequence seq;
    seq.reserve(names.size());
    for (const auto& name : names) seq.push_back(inst.poset().id_of(name));
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j])
                throw Error("repeated element in sequence: " + names[i]);
    return seq;
}

} // namespace gkflow
