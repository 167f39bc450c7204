#pragma once

#include <vector>

#include "gkflow/partition.hpp"
#include "gkflow/poset.hpp"

namespace gkflow {

// Exhaustive-search ceilings. The oracles are exact or they throw; there is
// no approximate fallback.
struct OracleBudget {
    int max_n = 7;
    long long max_nodes = 200'000'000;
};

// Maximum of sum(asc) over families of at most k pairwise-disjoint
// adjacentable sequences. k = 0 gives 0.
int brute_A(const Instance& inst, int k, const OracleBudget& budget = {});

// Maximum of sum(desc) over families of at most k pairwise-disjoint,
// pairwise-non-semi-overlapping h-ordered sequences. k = 0 gives 0.
int brute_D(const Instance& inst, int k, const OracleBudget& budget = {});

enum class CoverMode { Chains, Antichains };

// Classical quantities: most elements covered by k disjoint chains, or by
// k disjoint antichains.
int brute_chain_antichain(const Poset& poset, int k, CoverMode mode,
                          const OracleBudget& budget = {});

enum class StarMode { Ascents, Descents };

// Permutation-sequence quantities. Ascents: best sum of (ascent count + 1)
// over k disjoint subsequences. Descents: best sum of longest strictly
// decreasing subsequence lengths over k consecutive blocks.
int localized_star(const std::vector<int>& perm, int k, StarMode mode,
                   const OracleBudget& budget = {});

// Shape of the row-insertion tableau of the permutation.
Partition rsk_shape(const std::vector<int>& perm);

} // namespace gkflow
