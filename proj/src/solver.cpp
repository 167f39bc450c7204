#include "gkflow/solver.hpp"

#include <algorithm>
#include <cstdlib>

namespace gkflow {

int sink_p_abs(const FlowNetwork& net, const SolverState& st) {
    return std::abs(st.potential[net.sink()]);
}

long long flow_cost(const FlowNetwork& net, std::span<const int> flow) {
    long long cost = 0;
    for (const Edge& e : net.edges()) cost += static_cast<long long>(e.cost) * flow[e.id];
    return cost;
}

SolverState initialize(const FlowNetwork& net) {
    SolverState st;
    st.flow.assign(net.edge_count(), 0);
    st.potential.assign(net.vertex_count(), 0);
    for (int i = 1; i <= net.n(); ++i) {
        st.potential[net.top(i)] = -i;
        st.potential[net.bottom(i)] = -i;
    }
    st.potential[net.sink()] = -(net.n() + 1);
    assert_invariants(net, st);
    return st;
}

Event step(const FlowNetwork& net, SolverState& st) {
    if (st.value >= net.n())
        throw InvariantViolation("step called on a maximal flow");

    const int before_p_abs = sink_p_abs(net, st);
    Reachability reach = reachable_set(net, st.flow, st.potential);

    Event ev;
    if (reach.reaches(net.sink())) {
        for (int v = net.sink(); v != net.source(); v = reach.parent_vertex[v]) {
            int e = reach.parent_edge[v];
            if (reach.parent_reverse[v]) {
                if (st.flow[e] != 1)
                    throw InvariantViolation("reverse arc without flow on path");
                st.flow[e] = 0;
            } else {
                if (st.flow[e] != 0)
                    throw InvariantViolation("forward arc already saturated on path");
                st.flow[e] = 1;
            }
        }
        st.value += 1;
        ev = {EventKind::Augment, st.value, sink_p_abs(net, st)};
        if (ev.p_abs != before_p_abs)
            throw InvariantViolation("augment changed the sink potential");
    } else {
        for (int v = 0; v < net.vertex_count(); ++v)
            if (!reach.reachable[v]) st.potential[v] += 1;
        ev = {EventKind::Relabel, st.value, sink_p_abs(net, st)};
        if (ev.p_abs != before_p_abs - 1)
            throw InvariantViolation("relabel did not lower |p(sink)| by exactly 1");
    }
    st.trace.push_back(ev);
    assert_invariants(net, st);
    return ev;
}

SolverState run(const FlowNetwork& net) {
    SolverState st = initialize(net);
    const int n = net.n();
    const long long budget = static_cast<long long>(n + 2) * (n + 2) + n;
    long long steps = 0;
    while (st.value < n) {
        if (++steps > budget)
            throw InvariantViolation("iteration budget exceeded; solver failed to terminate");
        step(net, st);
    }

    // At maximal flow every source edge is saturated and every unit exits
    // straight through its own pair, so relation edges carry nothing and the
    // cost is exactly -n.
    for (const Edge& e : net.edges())
        if (e.family == 4 && st.flow[e.id] != 0)
            throw InvariantViolation("relation edge still carries flow at maximal value");
    if (flow_cost(net, st.flow) != -static_cast<long long>(n))
        throw InvariantViolation("final cost differs from the saturated-edge account");
    return st;
}

DualityResult extract_partitions(const std::vector<Event>& trace, int n) {
    std::vector<int> lambda_raw;
    std::map<int, int> value_at_drop; // p_abs after a relabel -> flow value there
    int last_p_abs = n + 1;
    for (const Event& ev : trace) {
        if (ev.p_abs > last_p_abs)
            throw InvariantViolation("sink potential magnitude increased along the trace");
        last_p_abs = ev.p_abs;
        if (ev.kind == EventKind::Augment) {
            lambda_raw.push_back(ev.p_abs);
        } else {
            if (!value_at_drop.emplace(ev.p_abs, ev.v_after).second)
                throw InvariantViolation("two relabels reached the same potential");
        }
    }
    if (static_cast<int>(lambda_raw.size()) != n)
        throw InvariantViolation("trace does not contain exactly n augments");
    for (size_t i = 0; i + 1 < lambda_raw.size(); ++i)
        if (lambda_raw[i] < lambda_raw[i + 1])
            throw InvariantViolation("augment potentials are not weakly decreasing");
    if (!lambda_raw.empty() && lambda_raw.front() > n)
        throw InvariantViolation("leading part exceeds the element count");

    DualityResult result;
    result.lambda = Partition(lambda_raw);

    // mu_p is the flow value when |p(sink)| first drops below p. If the run
    // finishes while |p(sink)| is still 1 that drop never happens and the
    // final value n stands in.
    const int lambda1 = result.lambda.first();
    std::vector<int> mu_raw; // mu_1 first; the values shrink as p grows
    for (int p = 1; p <= lambda1; ++p) {
        auto it = value_at_drop.find(p - 1);
        mu_raw.push_back(it != value_at_drop.end() ? it->second : n);
    }
    for (size_t i = 0; i + 1 < mu_raw.size(); ++i)
        if (mu_raw[i] < mu_raw[i + 1])
            throw ConjugacyViolation("relabel-extracted parts are not weakly decreasing");
    result.mu = Partition(mu_raw);

    if (result.mu != conjugate(result.lambda))
        throw ConjugacyViolation("relabel-extracted partition " + to_string(result.mu) +
                                 " is not the conjugate of " + to_string(result.lambda));
    if (result.lambda.sum() != n)
        throw InvariantViolation("partition sum differs from the element count");

    result.a_table = prefix_table(result.lambda);
    result.d_table = prefix_table(result.mu);
    return result;
}

std::vector<Sequence> flow_witnesses(const FlowNetwork& net, const SolverState& st) {
    const Instance& inst = net.instance();
    for (int v = 1; v < net.vertex_count() - 1; ++v) {
        int in = 0, out = 0;
        for (int e : net.in_edges(v)) in += st.flow[e];
        for (int e : net.out_edges(v)) out += st.flow[e];
        if (in != out)
            throw DecompositionError("flow is not conserved at " + net.vertex_name(v));
    }

    std::vector<Sequence> witnesses;
    for (int i = 1; i <= net.n(); ++i) {
        int source_edge = net.out_edges(net.source())[i - 1];
        if (st.flow[source_edge] == 0) continue;
        Sequence seq;
        int at = net.edge(source_edge).to;
        while (at != net.sink()) {
            VertexInfo info = net.vertex_info(at);
            if (info.kind == VertexInfo::Kind::Top)
                seq.push_back(inst.element_at_rank(info.index));
            int next_edge = -1;
            for (int e : net.out_edges(at)) {
                if (st.flow[e] == 0) continue;
                if (next_edge != -1)
                    throw DecompositionError("two flowing edges leave " + net.vertex_name(at));
                next_edge = e;
            }
            if (next_edge == -1)
                throw DecompositionError("flow line stops at " + net.vertex_name(at));
            at = net.edge(next_edge).to;
        }
        if (classify_sequence(seq, inst) != SeqClass::Adjacentable)
            throw InvariantViolation("flow line is not an adjacentable sequence");
        witnesses.push_back(std::move(seq));
    }
    if (static_cast<int>(witnesses.size()) != st.value)
        throw DecompositionError("flow line count differs from the flow value");

    long long total_asc = 0;
    for (const Sequence& seq : witnesses) total_asc += asc(seq, inst);
    if (total_asc != -flow_cost(net, st.flow))
        throw InvariantViolation("witness asc total differs from the negated flow cost");
    return witnesses;
}

LevelFamilies potential_witnesses(const FlowNetwork& net, const SolverState& st) {
    const Instance& inst = net.instance();
    const int p = sink_p_abs(net, st);

    LevelFamilies out;
    std::map<int, Sequence> by_level;
    for (int i = 1; i <= net.n(); ++i) {
        int pt = st.potential[net.top(i)];
        int pb = st.potential[net.bottom(i)];
        if (pt != pb) continue;
        if (pt < -p + 1 || pt > 0) continue;
        ++out.pair_count;
        by_level[-pt].push_back(inst.element_at_rank(i)); // grouped by level, ranks ascend
    }
    for (auto& [level, family] : by_level) {
        for (size_t a = 0; a < family.size(); ++a)
            for (size_t b = a + 1; b < family.size(); ++b)
                if (inst.less(family[a], family[b]))
                    throw InvariantViolation("potential family contains a poset ascent");
        out.families.push_back(std::move(family));
    }
    for (size_t a = 0; a < out.families.size(); ++a)
        for (size_t b = a + 1; b < out.families.size(); ++b)
            if (semi_overlapping(out.families[a], out.families[b], inst))
                throw InvariantViolation("potential families are semi-overlapping");
    return out;
}

bool InvariantReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string InvariantReport::summary() const {
    std::string out;
    for (const auto& c : checks) {
        out += c.name;
        out += c.pass ? ": pass" : ": FAIL";
        if (!c.pass && !c.detail.empty()) out += " (" + c.detail + ")";
        out += "\n";
    }
    return out;
}

InvariantReport check_invariants(const FlowNetwork& net, const SolverState& st) {
    InvariantReport report;
    auto add = [&](std::string name, bool pass, std::string detail = {}) {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    auto edge_name = [&](const Edge& e) {
        return net.vertex_name(e.from) + "->" + net.vertex_name(e.to);
    };

    {
        std::string bad;
        for (const Edge& e : net.edges())
            if (st.flow[e.id] < 0 || st.flow[e.id] > 1) bad += " " + edge_name(e);
        add("capacity_bounds", bad.empty(), "flow outside [0,1] on" + bad);
    }
    {
        std::string bad;
        for (int v = 1; v < net.vertex_count() - 1; ++v) {
            int in = 0, out = 0;
            for (int e : net.in_edges(v)) in += st.flow[e];
            for (int e : net.out_edges(v)) out += st.flow[e];
            if (in != out) bad += " " + net.vertex_name(v);
        }
        add("flow_conservation", bad.empty(), "imbalanced at" + bad);
    }
    {
        int value = 0;
        for (int e : net.out_edges(net.source())) value += st.flow[e];
        add("flow_value", value == st.value,
            "stored value " + std::to_string(st.value) + " vs source outflow " +
                std::to_string(value));
    }
    {
        std::string bad;
        for (const Edge& e : net.edges()) {
            int gap = st.potential[e.to] - st.potential[e.from];
            if (gap < e.cost && st.flow[e.id] != 0) bad += " " + edge_name(e);
            if (gap > e.cost && st.flow[e.id] != 1) bad += " " + edge_name(e);
        }
        add("complementary_slackness", bad.empty(), "violated on" + bad);
    }
    {
        // Every flowing bottom-to-top edge must have potential gap equal to
        // its cost, not just on the admissible side.
        std::string bad;
        for (const Edge& e : net.edges()) {
            if (e.family != 2 && e.family != 4) continue;
            if (st.flow[e.id] != 1) continue;
            if (st.potential[e.to] - st.potential[e.from] != e.cost)
                bad += " " + edge_name(e);
        }
        add("flowing_edge_tightness", bad.empty(), "loose flowing edge on" + bad);
    }
    {
        std::string bad;
        for (int i = 1; i <= net.n(); ++i)
            if (st.potential[net.top(i)] < st.potential[net.bottom(i)] - 1)
                bad += " " + std::to_string(i);
        add("pair_potential_gap", bad.empty(), "top below bottom-1 at index" + bad);
    }
    {
        // Count of coincident pairs within the window plus the negated cost
        // must reach n + value * |p(sink)|; the maintained flow is cost
        // minimal, so the negated cost stands in for the best asc total.
        int p = sink_p_abs(net, st);
        int pairs = 0;
        for (int i = 1; i <= net.n(); ++i) {
            int pt = st.potential[net.top(i)];
            if (pt == st.potential[net.bottom(i)] && pt >= -p + 1 && pt <= 0) ++pairs;
        }
        long long lhs = pairs - flow_cost(net, st.flow);
        long long rhs = static_cast<long long>(net.n()) + static_cast<long long>(st.value) * p;
        add("level_count_bound", lhs >= rhs,
            std::to_string(lhs) + " < " + std::to_string(rhs));
    }
    return report;
}

void assert_invariants(const FlowNetwork& net, const SolverState& st) {
    InvariantReport report = check_invariants(net, st);
    if (!report.all_pass())
        throw InvariantViolation("invariant check failed:\n" + report.summary());
}

} // namespace gkflow
