#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkflow/oracles.hpp"
#include "gkflow/solver.hpp"

namespace gkflow {

struct VerifyOptions {
    OracleBudget budget;
    // Run the per-state duality identity (needs the descent oracle at every
    // attained potential) only up to this size.
    int duality_identity_max_n = 5;
};

struct Mismatch {
    std::string kind; // table_a, table_d, cost, duality_identity, level_count, invariant
    std::string detail;
};

// One visited solver state, recorded after initialization and after every
// event.
struct StateSample {
    int value;
    int p_abs;
    long long cost;
    int level_pairs;
};

struct VerifyOutcome {
    int n = 0;
    DualityResult duality;
    std::vector<Event> trace;
    std::vector<StateSample> states;
    std::vector<int> solver_a, oracle_a; // entry k-1 holds the value for k
    std::vector<int> solver_d, oracle_d;
    std::vector<Mismatch> mismatches;
    bool duality_identity_checked = false;

    bool ok() const { return mismatches.empty(); }
};

// Runs the solver with all internal invariant checks active, then compares
// every prefix table, the cost at every intermediate value, and (on small
// instances) the duality identity at every attained (potential, value) pair
// against the brute-force oracles.
VerifyOutcome verify_general(const Instance& inst, const VerifyOptions& options = {});

// Solver against the permutation-sequence oracles on the localized instance.
VerifyOutcome verify_localized(const std::vector<int>& perm,
                               const VerifyOptions& options = {});

// Solver against the chain/antichain oracles on the classical instance.
VerifyOutcome verify_classical(const Poset& poset,
                               const std::optional<Labeling>& h = std::nullopt,
                               const VerifyOptions& options = {});

// Comparison core, split out so mismatch reporting is testable on its own:
// checks solver prefix tables against oracle tables for k = 1..n.
std::vector<Mismatch> compare_tables(const DualityResult& duality, int n,
                                     const std::vector<int>& oracle_a,
                                     const std::vector<int>& oracle_d);

} // namespace gkflow
