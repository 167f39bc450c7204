#include "gkflow/verify.hpp"

#include <algorithm>

#include "gkflow/corollaries.hpp"

namespace gkflow {

namespace {

// Runs the solver step by step, sampling every visited state.
VerifyOutcome run_sampled(const FlowNetwork& net) {
    VerifyOutcome out;
    out.n = net.n();
    SolverState st = initialize(net);
    auto sample = [&]() {
        LevelFamilies levels = potential_witnesses(net, st);
        out.states.push_back({st.value, sink_p_abs(net, st),
                              flow_cost(net, st.flow), levels.pair_count});
    };
    sample();
    const long long budget = static_cast<long long>(out.n + 2) * (out.n + 2) + out.n;
    long long steps = 0;
    while (st.value < out.n) {
        if (++steps > budget)
            throw InvariantViolation("iteration budget exceeded; solver failed to terminate");
        step(net, st);
        sample();
    }
    flow_witnesses(net, st); // exercises the decomposition checks
    out.trace = st.trace;
    out.duality = extract_partitions(st.trace, out.n);
    return out;
}

} // namespace

std::vector<Mismatch> compare_tables(const DualityResult& duality, int n,
                                     const std::vector<int>& oracle_a,
                                     const std::vector<int>& oracle_d) {
    std::vector<Mismatch> mismatches;
    for (int k = 1; k <= n; ++k) {
        int sa = prefix_sum(duality.lambda, k);
        int sd = prefix_sum(duality.mu, k);
        if (sa != oracle_a[k - 1])
            mismatches.push_back({"table_a", "k=" + std::to_string(k) + ": solver " +
                                                 std::to_string(sa) + " vs oracle " +
                                                 std::to_string(oracle_a[k - 1])});
        if (sd != oracle_d[k - 1])
            mismatches.push_back({"table_d", "k=" + std::to_string(k) + ": solver " +
                                                 std::to_string(sd) + " vs oracle " +
                                                 std::to_string(oracle_d[k - 1])});
    }
    return mismatches;
}

VerifyOutcome verify_general(const Instance& inst, const VerifyOptions& options) {
    const int n = inst.size();
    FlowNetwork net = build_network(inst);
    VerifyOutcome out = run_sampled(net);

    const bool with_identity = n <= options.duality_identity_max_n;
    out.duality_identity_checked = with_identity;

    // Oracle tables, cached once: ascent values for 0..n, descent values for
    // 0..n+1 when the identity check needs the initial potential.
    std::vector<int> a_of(n + 1, 0);
    for (int k = 1; k <= n; ++k) a_of[k] = brute_A(inst, k, options.budget);
    std::vector<int> d_of(n + 2, 0);
    int d_top = with_identity ? n + 1 : n;
    for (int k = 1; k <= d_top; ++k) d_of[k] = brute_D(inst, k, options.budget);

    out.oracle_a.assign(a_of.begin() + 1, a_of.begin() + 1 + n);
    out.oracle_d.assign(d_of.begin() + 1, d_of.begin() + 1 + n);
    out.solver_a.clear();
    out.solver_d.clear();
    for (int k = 1; k <= n; ++k) {
        out.solver_a.push_back(prefix_sum(out.duality.lambda, k));
        out.solver_d.push_back(prefix_sum(out.duality.mu, k));
    }

    auto table = compare_tables(out.duality, n, out.oracle_a, out.oracle_d);
    out.mismatches.insert(out.mismatches.end(), table.begin(), table.end());

    for (const StateSample& s : out.states) {
        if (-s.cost != a_of[s.value])
            out.mismatches.push_back(
                {"cost", "value " + std::to_string(s.value) + ": flow cost " +
                             std::to_string(s.cost) + " vs oracle -" +
                             std::to_string(a_of[s.value])});
        if (!with_identity) continue;
        long long lhs = d_of[s.p_abs] + a_of[s.value];
        long long rhs = static_cast<long long>(n) +
                        static_cast<long long>(s.value) * s.p_abs;
        if (lhs != rhs)
            out.mismatches.push_back(
                {"duality_identity", "(p=" + std::to_string(s.p_abs) +
                                         ", v=" + std::to_string(s.value) + "): " +
                                         std::to_string(lhs) + " != " + std::to_string(rhs)});
        // Sandwiched between the two bounds, the level pair count is exact.
        long long expect_pairs = rhs - a_of[s.value];
        if (s.level_pairs != expect_pairs)
            out.mismatches.push_back(
                {"level_count", "(p=" + std::to_string(s.p_abs) +
                                    ", v=" + std::to_string(s.value) + "): pairs " +
                                    std::to_string(s.level_pairs) + " vs " +
                                    std::to_string(expect_pairs)});
        if (d_of[s.p_abs] < s.level_pairs)
            out.mismatches.push_back(
                {"level_count", "descent value " + std::to_string(d_of[s.p_abs]) +
                                    " below pair count " + std::to_string(s.level_pairs)});
    }
    return out;
}

VerifyOutcome verify_localized(const std::vector<int>& perm, const VerifyOptions& options) {
    Instance inst = build_localized_instance(perm);
    const int n = inst.size();
    FlowNetwork net = build_network(inst);
    VerifyOutcome out = run_sampled(net);

    out.oracle_a.clear();
    out.oracle_d.clear();
    for (int k = 1; k <= n; ++k) {
        out.oracle_a.push_back(localized_star(perm, k, StarMode::Ascents, options.budget));
        out.oracle_d.push_back(localized_star(perm, k, StarMode::Descents, options.budget));
        out.solver_a.push_back(prefix_sum(out.duality.lambda, k));
        out.solver_d.push_back(prefix_sum(out.duality.mu, k));
    }
    auto table = compare_tables(out.duality, n, out.oracle_a, out.oracle_d);
    out.mismatches.insert(out.mismatches.end(), table.begin(), table.end());
    return out;
}

VerifyOutcome verify_classical(const Poset& poset, const std::optional<Labeling>& h,
                               const VerifyOptions& options) {
    Instance inst = build_classical_instance(poset, h);
    const int n = inst.size();
    FlowNetwork net = build_network(inst);
    VerifyOutcome out = run_sampled(net);

    out.oracle_a.clear();
    out.oracle_d.clear();
    for (int k = 1; k <= n; ++k) {
        out.oracle_a.push_back(
            brute_chain_antichain(poset, k, CoverMode::Chains, options.budget));
        out.oracle_d.push_back(
            brute_chain_antichain(poset, k, CoverMode::Antichains, options.budget));
        out.solver_a.push_back(prefix_sum(out.duality.lambda, k));
        out.solver_d.push_back(prefix_sum(out.duality.mu, k));
    }
    auto table = compare_tables(out.duality, n, out.oracle_a, out.oracle_d);
    out.mismatches.insert(out.mismatches.end(), table.begin(), table.end());
    return out;
}

} // namespace gkflow
