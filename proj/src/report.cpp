#include "gkflow/report.hpp"

#include <map>

#include "json.hpp"

namespace gkflow {

namespace {

using json = nlohmann::ordered_json;

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(values[i]);
    }
    return out;
}

std::string sequence_names(const Sequence& seq, const Instance& inst) {
    std::string out;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) out += " ";
        out += inst.name(seq[i]);
    }
    return out;
}

json sequence_json(const Sequence& seq, const Instance& inst) {
    json arr = json::array();
    for (ElementId e : seq) arr.push_back(inst.name(e));
    return arr;
}

} // namespace

ResultReport solve_instance(const Instance& inst, const SolveOptions& options) {
    FlowNetwork net = build_network(inst);
    ResultReport report;
    report.n = net.n();

    SolverState st = initialize(net);
    std::map<int, DualityResult::LevelWitness> level_last;
    std::vector<std::vector<Sequence>> per_value;
    auto capture = [&]() {
        if (!options.witnesses) return;
        LevelFamilies levels = potential_witnesses(net, st);
        level_last[sink_p_abs(net, st)] = {sink_p_abs(net, st), levels.pair_count,
                                           std::move(levels.families)};
    };
    capture();
    const long long budget = static_cast<long long>(report.n + 2) * (report.n + 2) + report.n;
    long long steps = 0;
    while (st.value < report.n) {
        if (++steps > budget)
            throw InvariantViolation("iteration budget exceeded; solver failed to terminate");
        Event ev = step(net, st);
        if (ev.kind == EventKind::Augment && options.witnesses)
            per_value.push_back(flow_witnesses(net, st));
        capture();
    }
    for (const Edge& e : net.edges())
        if (e.family == 4 && st.flow[e.id] != 0)
            throw InvariantViolation("relation edge still carries flow at maximal value");

    report.trace = st.trace;
    for (const Event& ev : report.trace)
        (ev.kind == EventKind::Augment ? report.augments : report.relabels) += 1;
    report.duality = extract_partitions(st.trace, report.n);
    if (options.witnesses) {
        report.duality.witnesses_a = std::move(per_value);
        for (auto& [p, witness] : level_last)
            report.duality.witnesses_d.push_back(std::move(witness));
    }
    return report;
}

std::string trace_lines(const std::vector<Event>& trace) {
    std::string out;
    for (const Event& ev : trace) {
        out += "event=";
        out += ev.kind == EventKind::Augment ? "augment" : "relabel";
        out += " v=" + std::to_string(ev.v_after);
        out += " p_abs=" + std::to_string(ev.p_abs);
        out += "\n";
    }
    return out;
}

std::string report_text(const ResultReport& report, const Instance& inst,
                        const SolveOptions& options) {
    std::string out;
    out += "n: " + std::to_string(report.n) + "\n";
    out += "lambda: " + join_ints(report.duality.lambda.parts()) + "\n";
    out += "mu: " + join_ints(report.duality.mu.parts()) + "\n";
    out += "A': " + join_ints(report.duality.a_table) + "\n";
    out += "D': " + join_ints(report.duality.d_table) + "\n";
    out += "augments: " + std::to_string(report.augments) +
           "  relabels: " + std::to_string(report.relabels) + "\n";
    if (options.witnesses) {
        for (size_t v = 0; v < report.duality.witnesses_a.size(); ++v) {
            for (const Sequence& seq : report.duality.witnesses_a[v])
                out += "witness v=" + std::to_string(v + 1) + ": " +
                       sequence_names(seq, inst) +
                       " (asc=" + std::to_string(asc(seq, inst)) + ")\n";
        }
        for (const auto& lw : report.duality.witnesses_d) {
            out += "levels p_abs=" + std::to_string(lw.p_abs) +
                   " pairs=" + std::to_string(lw.pair_count) + ":";
            for (const Sequence& fam : lw.families)
                out += " [" + sequence_names(fam, inst) + "]";
            out += "\n";
        }
    }
    if (options.trace) out += trace_lines(report.trace);
    return out;
}

std::string report_json(const ResultReport& report, const Instance& inst,
                        const SolveOptions& options) {
    json doc;
    doc["n"] = report.n;
    doc["lambda"] = report.duality.lambda.parts();
    doc["mu"] = report.duality.mu.parts();
    doc["a_table"] = report.duality.a_table;
    doc["d_table"] = report.duality.d_table;
    doc["augments"] = report.augments;
    doc["relabels"] = report.relabels;
    if (options.witnesses) {
        json wa = json::array();
        for (size_t v = 0; v < report.duality.witnesses_a.size(); ++v) {
            json fam = json::array();
            for (const Sequence& seq : report.duality.witnesses_a[v])
                fam.push_back(sequence_json(seq, inst));
            wa.push_back({{"v", v + 1}, {"sequences", fam}});
        }
        doc["witnesses_a"] = std::move(wa);
        json wd = json::array();
        for (const auto& lw : report.duality.witnesses_d) {
            json fams = json::array();
            for (const Sequence& fam : lw.families) fams.push_back(sequence_json(fam, inst));
            wd.push_back({{"p_abs", lw.p_abs}, {"pairs", lw.pair_count}, {"families", fams}});
        }
        doc["witnesses_d"] = std::move(wd);
    }
    if (options.trace) {
        json tr = json::array();
        for (const Event& ev : report.trace)
            tr.push_back({{"event", ev.kind == EventKind::Augment ? "augment" : "relabel"},
                          {"v", ev.v_after},
                          {"p_abs", ev.p_abs}});
        doc["trace"] = std::move(tr);
    }
    return doc.dump(2) + "\n";
}

std::string verify_text(const VerifyOutcome& outcome) {
    std::string out;
    out += "n: " + std::to_string(outcome.n) + "\n";
    out += "lambda: " + join_ints(outcome.duality.lambda.parts()) + "\n";
    out += "mu: " + join_ints(outcome.duality.mu.parts()) + "\n";
    out += "A' solver: " + join_ints(outcome.solver_a) + "\n";
    out += "A' oracle: " + join_ints(outcome.oracle_a) + "\n";
    out += "D' solver: " + join_ints(outcome.solver_d) + "\n";
    out += "D' oracle: " + join_ints(outcome.oracle_d) + "\n";
    out += "states checked: " + std::to_string(outcome.states.size()) + "\n";
    out += "duality identity checked: ";
    out += outcome.duality_identity_checked ? "yes" : "no";
    out += "\n";
    for (const Mismatch& m : outcome.mismatches)
        out += "MISMATCH " + m.kind + ": " + m.detail + "\n";
    out += outcome.ok() ? "result: ok\n" : "result: mismatch\n";
    return out;
}

std::string verify_json(const VerifyOutcome& outcome) {
    json doc;
    doc["n"] = outcome.n;
    doc["lambda"] = outcome.duality.lambda.parts();
    doc["mu"] = outcome.duality.mu.parts();
    doc["a_solver"] = outcome.solver_a;
    doc["a_oracle"] = outcome.oracle_a;
    doc["d_solver"] = outcome.solver_d;
    doc["d_oracle"] = outcome.oracle_d;
    doc["states_checked"] = outcome.states.size();
    doc["duality_identity_checked"] = outcome.duality_identity_checked;
    json mm = json::array();
    for (const Mismatch& m : outcome.mismatches)
        mm.push_back({{"kind", m.kind}, {"detail", m.detail}});
    doc["mismatches"] = std::move(mm);
    doc["ok"] = outcome.ok();
    return doc.dump(2) + "\n";
}

} // namespace gkflow
