#pragma once

#include <optional>
#include <vector>

#include "gkflow/poset.hpp"

namespace gkflow {

// Natural total order on {1..n}, labeling = inverse of the permutation,
// relation = every label-increasing pair.
Instance build_localized_instance(const std::vector<int>& perm);

// Relation = the order itself; h must be a linear extension (one is computed
// deterministically when absent).
Instance build_classical_instance(const Poset& poset,
                                  const std::optional<Labeling>& h = std::nullopt);

// Topological order breaking ties by element-list position.
Labeling default_linear_extension(const Poset& poset);

// Up to `limit` linear extensions in lexicographic element order.
std::vector<Labeling> linear_extensions(const Poset& poset, int limit);

// Disjoint antichains, each listed in h-rank order.
struct AntichainFamily {
    std::vector<Sequence> members;

    bool operator==(const AntichainFamily&) const = default;
};

// Validates antichain-ness and disjointness and sorts each member by rank.
AntichainFamily make_antichain_family(const Instance& inst,
                                      std::vector<Sequence> members);

int family_size(const AntichainFamily& family);

// Concatenated h-ranks of the members in order; strictly decreases
// lexicographically under every productive exchange.
std::vector<int> family_key(const AntichainFamily& family, const Labeling& h);

// Moves the members of d_i lying above something in d_j over to d_j, and the
// members of d_j lying below something in d_i over to d_i. Antichain-ness and
// the total size are preserved; an unproductive call returns the family
// unchanged.
AntichainFamily antichain_exchange(const AntichainFamily& family, int i, int j,
                                   const Instance& inst);

struct NormalizeStats {
    int productive_exchanges = 0;
    int rounds = 0;
};

// Applies exchanges over all pairs i < j until none is productive. The result
// is pairwise non-semi-overlapping with the same total size.
AntichainFamily normalize_antichains(const AntichainFamily& family, const Instance& inst,
                                     NormalizeStats* stats = nullptr);

} // namespace gkflow
