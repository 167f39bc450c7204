#pragma once

#include <string>
#include <vector>

#include "gkflow/solver.hpp"
#include "gkflow/verify.hpp"

namespace gkflow {

struct SolveOptions {
    bool witnesses = false;
    bool trace = false;
};

struct ResultReport {
    int n = 0;
    DualityResult duality;
    std::vector<Event> trace;
    int augments = 0;
    int relabels = 0;
};

// Full solve; on request captures flow witnesses after every augment and the
// level families at the last state of every attained potential.
ResultReport solve_instance(const Instance& inst, const SolveOptions& options = {});

// One line per event: event=<augment|relabel> v=<int> p_abs=<int>
std::string trace_lines(const std::vector<Event>& trace);

std::string report_text(const ResultReport& report, const Instance& inst,
                        const SolveOptions& options);
std::string report_json(const ResultReport& report, const Instance& inst,
                        const SolveOptions& options);

std::string verify_text(const VerifyOutcome& outcome);
std::string verify_json(const VerifyOutcome& outcome);

} // namespace gkflow
