// gkflow: conjugate chain/antichain duality tables for labeled posets with a
// compatibility relation, computed by a potential-based min-cost-flow solver
// and cross-checked against brute-force oracles.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gkflow/generator.hpp"
#include "gkflow/instance_io.hpp"
#include "gkflow/report.hpp"

namespace {

using namespace gkflow;

std::vector<int> parse_perm(const std::string& text) {
    std::vector<int> perm;
    std::string token;
    for (char c : text + ",") {
        if (c == ',') {
            if (token.empty()) throw ParseError("empty entry in permutation");
            try {
                perm.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw ParseError("bad permutation entry: " + token);
            }
            token.clear();
        } else {
            token += c;
        }
    }
    return perm;
}

struct GenerateSpec {
    int n = 4;
    uint64_t seed = 1;
    int count = 20;
};

GenerateSpec parse_generate(const std::vector<std::string>& tokens) {
    GenerateSpec spec;
    for (const std::string& token : tokens) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ParseError("generate arguments look like key=value, got: " + token);
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        try {
            if (key == "n")
                spec.n = std::stoi(value);
            else if (key == "seed")
                spec.seed = std::stoull(value);
            else if (key == "count")
                spec.count = std::stoi(value);
            else
                throw ParseError("unknown generate key: " + key);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad generate value: " + token);
        } catch (const std::out_of_range&) {
            throw ParseError("generate value out of range: " + token);
        }
        if (spec.n < 0 || spec.count < 1)
            throw ParseError("generate needs n >= 0 and count >= 1");
    }
    return spec;
}

int cmd_solve(const std::string& path, bool witnesses, bool trace, bool as_json) {
    Instance inst = parse_instance(read_file(path));
    SolveOptions options{witnesses, trace};
    ResultReport report = solve_instance(inst, options);
    std::cout << (as_json ? report_json(report, inst, options)
                          : report_text(report, inst, options));
    return 0;
}

int cmd_dot(const std::string& path) {
    Instance inst = parse_instance(read_file(path));
    std::cout << render_dot(build_network(inst));
    return 0;
}

VerifyOutcome dispatch_verify(const std::string& mode, const Instance& inst) {
    if (mode == "classical")
        return verify_classical(inst.poset(), inst.labeling());
    return verify_general(inst);
}

int cmd_verify(const std::string& path, const std::vector<std::string>& gen_tokens,
               const std::string& mode, const std::string& perm_text, bool as_json) {
    if (!perm_text.empty()) {
        if (mode == "classical" || mode == "general")
            throw ParseError("--perm is for --mode localized");
        VerifyOutcome outcome = verify_localized(parse_perm(perm_text));
        std::cout << (as_json ? verify_json(outcome) : verify_text(outcome));
        return outcome.ok() ? 0 : 3;
    }
    if (!gen_tokens.empty()) {
        GenerateSpec spec = parse_generate(gen_tokens);
        int failures = 0;
        for (int i = 0; i < spec.count; ++i) {
            Rng rng(spec.seed + static_cast<uint64_t>(i));
            VerifyOutcome outcome;
            std::string label;
            if (mode == "localized") {
                std::vector<int> perm = random_permutation(spec.n, rng);
                outcome = verify_localized(perm);
                label = "perm";
            } else if (mode == "classical") {
                Poset poset = random_poset(spec.n, rng);
                outcome = verify_classical(poset);
                label = "poset";
            } else {
                CpMode cp = static_cast<CpMode>(i % 3);
                outcome = verify_general(random_instance(spec.n, cp, rng));
                label = "instance";
            }
            if (!outcome.ok()) ++failures;
            std::cout << label << " " << (i + 1) << "/" << spec.count
                      << ": n=" << outcome.n
                      << " lambda=" << to_string(outcome.duality.lambda)
                      << (outcome.ok() ? " ok" : " MISMATCH") << "\n";
            for (const Mismatch& m : outcome.mismatches)
                std::cout << "  " << m.kind << ": " << m.detail << "\n";
        }
        std::cout << (failures == 0 ? "all instances verified\n"
                                    : std::to_string(failures) + " instances failed\n");
        return failures == 0 ? 0 : 3;
    }
    if (path.empty()) throw ParseError("verify needs a file, --generate or --perm");
    if (mode == "classical") {
        InstanceFile file = parse_instance_file(read_file(path));
        VerifyOutcome outcome = verify_classical(file.poset, file.labeling);
        std::cout << (as_json ? verify_json(outcome) : verify_text(outcome));
        return outcome.ok() ? 0 : 3;
    }
    if (mode == "localized")
        throw ParseError("localized mode verifies a permutation; pass --perm");
    VerifyOutcome outcome = dispatch_verify(mode, parse_instance(read_file(path)));
    std::cout << (as_json ? verify_json(outcome) : verify_text(outcome));
    return outcome.ok() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conjugate duality tables for labeled posets via min-cost flow"};
    app.require_subcommand(1);

    std::string solve_file, dot_file, verify_file;
    bool witnesses = false, want_trace = false, solve_json = false, verify_as_json = false;
    std::vector<std::string> gen_tokens;
    std::string mode = "general", perm_text;

    CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("file", solve_file, "instance file")->required();
    solve->add_flag("--witnesses", witnesses, "include witness sequences");
    solve->add_flag("--trace", want_trace, "append the event trace");
    solve->add_flag("--json", solve_json, "structured output");

    CLI::App* verify = app.add_subcommand("verify", "solve and compare against oracles");
    verify->add_option("file", verify_file, "instance file");
    verify->add_option("--generate", gen_tokens,
                       "generate instances: n=<int> seed=<int> count=<int>")
        ->expected(1, 3);
    verify->add_option("--mode", mode, "general|localized|classical")
        ->check(CLI::IsMember({"general", "localized", "classical"}));
    verify->add_option("--perm", perm_text, "permutation, e.g. 2,4,3,1");
    verify->add_flag("--json", verify_as_json, "structured output");

    CLI::App* dot = app.add_subcommand("dot", "emit the flow network as Graphviz");
    dot->add_option("file", dot_file, "instance file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_file, witnesses, want_trace, solve_json);
        if (dot->parsed()) return cmd_dot(dot_file);
        return cmd_verify(verify_file, gen_tokens, mode, perm_text, verify_as_json);
    } catch (const gkflow::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const gkflow::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
