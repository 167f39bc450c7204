#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gkflow/errors.hpp"

namespace gkflow {

using ElementId = int;
using IdPair = std::pair<ElementId, ElementId>;
using NamePair = std::pair<std::string, std::string>;

// A sequence of distinct poset elements, by internal id.
using Sequence = std::vector<ElementId>;

// Finite strict partial order. lt must be irreflexive, transitive and
// antisymmetric; the constructor rejects anything else.
class Poset {
public:
    Poset(std::vector<std::string> elements, std::vector<char> lt_matrix);

    int size() const { return n_; }
    bool less(ElementId x, ElementId y) const { return lt_[x * n_ + y] != 0; }
    bool comparable(ElementId x, ElementId y) const { return less(x, y) || less(y, x); }

    const std::vector<std::string>& element_names() const { return elements_; }
    const std::string& name(ElementId x) const { return elements_[x]; }
    ElementId id_of(const std::string& name) const;

    // All (x, y) with x < y, sorted by id.
    std::vector<IdPair> relation_pairs() const;
    // Transitive reduction: (x, y) with x < y and no z between them.
    std::vector<IdPair> cover_pairs() const;

    bool operator==(const Poset&) const = default;

private:
    int n_ = 0;
    std::vector<std::string> elements_;
    std::vector<char> lt_; // row-major n x n
    std::map<std::string, ElementId> index_;
};

// Smallest strict order containing the given generating relation.
// Throws CycleError if the closure would force x < x, UnknownElementError for
// names outside the element list.
Poset transitive_closure(const std::vector<std::string>& elements,
                         const std::vector<NamePair>& covers);

// Bijection from elements to ranks 1..n.
class Labeling {
public:
    explicit Labeling(std::vector<int> ranks);

    int size() const { return static_cast<int>(rank_.size()); }
    int rank(ElementId x) const { return rank_[x]; }
    ElementId element_at_rank(int r) const { return at_rank_[r - 1]; }
    const std::vector<int>& ranks() const { return rank_; }

    bool operator==(const Labeling&) const = default;

private:
    std::vector<int> rank_;           // rank_[element] in 1..n
    std::vector<ElementId> at_rank_;  // at_rank_[r-1] = element
};

// Set of ordered element pairs; the three axioms are checked against a poset
// and labeling by validate_instance, not here.
class CompatRelation {
public:
    CompatRelation(int n, std::vector<IdPair> pairs);

    int element_count() const { return n_; }
    int size() const { return static_cast<int>(pairs_.size()); }
    bool contains(ElementId x, ElementId y) const { return mat_[x * n_ + y] != 0; }
    const std::vector<IdPair>& pairs() const { return pairs_; }

    bool operator==(const CompatRelation&) const = default;

private:
    int n_;
    std::vector<char> mat_;
    std::vector<IdPair> pairs_; // sorted, unique
};

// Pairs (x, y) with x < y in the poset and h(x) < h(y); the relation every
// compatibility relation must contain.
std::vector<IdPair> forced_pairs(const Poset& poset, const Labeling& h);

// Validated triple (poset, labeling, compatibility relation).
class Instance {
public:
    const Poset& poset() const { return poset_; }
    const Labeling& labeling() const { return labeling_; }
    const CompatRelation& cp() const { return cp_; }
    const std::vector<IdPair>& forced() const { return forced_; }

    int size() const { return poset_.size(); }
    bool less(ElementId x, ElementId y) const { return poset_.less(x, y); }
    bool compatible(ElementId x, ElementId y) const { return cp_.contains(x, y); }
    int rank(ElementId x) const { return labeling_.rank(x); }
    ElementId element_at_rank(int r) const { return labeling_.element_at_rank(r); }
    const std::string& name(ElementId x) const { return poset_.name(x); }

    bool operator==(const Instance&) const = default;

    friend Instance validate_instance(Poset poset, Labeling h, CompatRelation cp);

private:
    Instance(Poset poset, Labeling h, CompatRelation cp, std::vector<IdPair> forced)
        : poset_(std::move(poset)), labeling_(std::move(h)), cp_(std::move(cp)),
          forced_(std::move(forced)) {}

    Poset poset_;
    Labeling labeling_;
    CompatRelation cp_;
    std::vector<IdPair> forced_;
};

// Checks the three axioms jointly and reports every violation found.
Instance validate_instance(Poset poset, Labeling h, CompatRelation cp);

enum class SeqClass { Adjacentable, HOrderedOnly, Neither };

// Adjacentable: every adjacent pair lies in the relation. Empty and singleton
// sequences are adjacentable.
SeqClass classify_sequence(const Sequence& seq, const Instance& inst);

// Number of poset-ascending adjacent pairs plus one; 0 for the empty sequence.
// Requires an adjacentable sequence.
int asc(const Sequence& seq, const Instance& inst);

// Length of the longest subsequence with no poset ascent between any earlier
// and later entry. Requires an h-ordered sequence; exact computation.
int desc(const Sequence& seq, const Instance& inst);

// True iff the relation crosses between the two disjoint sequences in both
// directions.
bool semi_overlapping(const Sequence& a, const Sequence& b, const Instance& inst);

// Resolve names to ids, rejecting unknown names and duplicates.
Sequence sequence_of(const Instance& inst, const std::vector<std::string>& names);

} // namespace gkflow
