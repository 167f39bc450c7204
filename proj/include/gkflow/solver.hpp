#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkflow/network.hpp"
#include "gkflow/partition.hpp"

namespace gkflow {

enum class EventKind { Augment, Relabel };

// One solver event. v_after is the flow value once the event is applied;
// p_abs is |potential of the sink| once the event is applied.
struct Event {
    EventKind kind;
    int v_after;
    int p_abs;
};

struct SolverState {
    std::vector<int> flow;      // by edge id, 0 or 1
    std::vector<int> potential; // by vertex id
    int value = 0;
    std::vector<Event> trace;
};

int sink_p_abs(const FlowNetwork& net, const SolverState& st);
long long flow_cost(const FlowNetwork& net, std::span<const int> flow);

// Zero flow, potential -i on both vertices of pair i, 0 at the source and
// -(n+1) at the sink. The maintained invariants hold on this state.
SolverState initialize(const FlowNetwork& net);

// One round: augment along the deterministic BFS path if the sink is
// reachable, otherwise raise the potential of every unreached vertex by 1.
// Re-asserts all maintained invariants afterwards.
Event step(const FlowNetwork& net, SolverState& st);

// Steps until the flow value reaches n, with an iteration guard that turns a
// hypothetical non-termination bug into an error.
SolverState run(const FlowNetwork& net);

struct DualityResult {
    Partition lambda;
    Partition mu;
    std::vector<int> a_table; // prefix sums of lambda, one per part
    std::vector<int> d_table; // prefix sums of mu, one per part

    // Optional witness material, filled by solve_instance on request.
    std::vector<std::vector<Sequence>> witnesses_a; // index v-1: family realizing value v
    struct LevelWitness {
        int p_abs;
        int pair_count;
        std::vector<Sequence> families;
    };
    std::vector<LevelWitness> witnesses_d;
};

// Reads lambda off the augment events and mu off the relabel events, then
// checks they are conjugate with sum n.
DualityResult extract_partitions(const std::vector<Event>& trace, int n);

// Splits the flow into value-many source-to-sink paths and returns them as
// element sequences; each is adjacentable and their asc values sum to the
// negated flow cost.
std::vector<Sequence> flow_witnesses(const FlowNetwork& net, const SolverState& st);

struct LevelFamilies {
    int pair_count = 0;                  // pairs with equal potentials inside the window
    std::vector<Sequence> families;      // grouped by shared level, each in h order
};

// Groups indices whose top and bottom potentials coincide within
// {-p+1, ..., 0} by their shared level. The families are pairwise
// non-semi-overlapping and each is free of internal poset ascents.
LevelFamilies potential_witnesses(const FlowNetwork& net, const SolverState& st);

struct InvariantReport {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;

    bool all_pass() const;
    std::string summary() const;
};

// Evaluates every maintained invariant: conservation, integrality bounds,
// complementary slackness, tightness of flowing bottom-to-top edges, the
// top/bottom potential gap, and the level-count lower bound.
InvariantReport check_invariants(const FlowNetwork& net, const SolverState& st);

// Throws InvariantViolation with the failing checks listed.
void assert_invariants(const FlowNetwork& net, const SolverState& st);

} // namespace gkflow
