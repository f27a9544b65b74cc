// Command-line front end: satisfiability, validity, trace evaluation,
// proof-graph export, and the brute-force oracle.
//
// Exit codes: 0 sat/valid/success, 1 unsat/invalid, 2 error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ltlf/oracle.hpp"
#include "ltlf/tableau.hpp"

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

json trace_json(const ltlf::Trace& trace) { return json::parse(ltlf::trace_to_json(trace)); }

json stats_json(const ltlf::SearchStats& stats) {
    return json{{"nodes", stats.nodes}, {"expansions", stats.expansions}};
}

struct Options {
    bool as_json = false;
    std::size_t max_closure = 0;
    std::size_t graph_warn_closure = 16;
};

ltlf::Formula parse_or_exit(const std::string& text) {
    try {
        return ltlf::parse(text);
    } catch (const ltlf::ParseError& err) {
        std::ostringstream expected;
        for (std::size_t i = 0; i < err.expected().size(); ++i) {
            if (i > 0) expected << ", ";
            expected << err.expected()[i];
        }
        std::cerr << "error: cannot parse formula: " << err.what()
                  << " (expected: " << expected.str() << ")\n";
        std::exit(kExitError);
    }
}

ltlf::Trace load_trace_or_exit(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open trace file '" << path << "'\n";
        std::exit(kExitError);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return ltlf::trace_from_json(buffer.str());
    } catch (const ltlf::TraceFormatError& err) {
        std::cerr << "error: " << path << ": " << err.what() << "\n";
        std::exit(kExitError);
    }
}

int run_sat(const std::string& formula_text, const Options& options) {
    ltlf::Formula f = parse_or_exit(formula_text);
    ltlf::SatResult result = ltlf::decide_sat(f, {options.max_closure});
    if (options.as_json) {
        json out{{"verdict", result.sat() ? "sat" : "unsat"}, {"stats", stats_json(result.stats)}};
        if (result.sat()) out["witness"] = trace_json(*result.witness);
        std::cout << out.dump() << "\n";
    } else if (result.sat()) {
        std::cout << "sat\n" << ltlf::trace_to_json(*result.witness) << "\n";
    } else {
        std::cout << "unsat\n";
    }
    return result.sat() ? kExitYes : kExitNo;
}

int run_valid(const std::string& formula_text, bool at_root, const Options& options) {
    ltlf::Formula f = parse_or_exit(formula_text);
    ltlf::ValidityResult result = at_root ? ltlf::decide_valid_at_root(f, {options.max_closure})
                                          : ltlf::decide_valid(f, {options.max_closure});
    if (options.as_json) {
        json out{{"verdict", result.valid() ? "valid" : "invalid"},
                 {"stats", stats_json(result.stats)}};
        if (!result.valid()) out["countermodel"] = trace_json(*result.countermodel);
        std::cout << out.dump() << "\n";
    } else if (result.valid()) {
        std::cout << "valid\n";
    } else {
        std::cout << "invalid\n" << ltlf::trace_to_json(*result.countermodel) << "\n";
    }
    return result.valid() ? kExitYes : kExitNo;
}

int run_eval(const std::string& formula_text, const std::string& trace_path,
             std::size_t position, const Options& options) {
    ltlf::Formula f = parse_or_exit(formula_text);
    ltlf::Trace trace = load_trace_or_exit(trace_path);
    if (position < 1 || position > trace.length()) {
        std::cerr << "error: position " << position << " out of range 1.." << trace.length()
                  << "\n";
        return kExitError;
    }
    bool at_position = ltlf::eval(trace, position, f);
    bool all_positions = ltlf::satisfies(trace, f);
    if (options.as_json) {
        json out{{"formula", ltlf::render(f)},
                 {"position", position},
                 {"at_position", at_position},
                 {"all_positions", all_positions}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "position " << position << ": " << (at_position ? "true" : "false") << "\n"
                  << "all positions: " << (all_positions ? "true" : "false") << "\n";
    }
    return kExitYes;
}

int run_graph(const std::string& formula_text, const std::string& dot_path,
              const Options& options) {
    ltlf::Formula f = parse_or_exit(formula_text);
    std::size_t closure_size =
        ltlf::closure(ltlf::inject_finiteness(ltlf::Pnp({f}, {}))).size();
    if (closure_size > options.graph_warn_closure) {
        std::cerr << "warning: closure has " << closure_size
                  << " formulae; the full graph may be large\n";
    }
    ltlf::ProofGraph graph = ltlf::build_proof_graph(f, {options.max_closure});
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << dot_path << "'\n";
        return kExitError;
    }
    out << ltlf::to_dot(graph, /*annotate_terminal=*/true);
    std::size_t edge_count = 0;
    for (const auto& outgoing : graph.successors) edge_count += outgoing.size();
    if (options.as_json) {
        json summary{{"file", dot_path},
                     {"nodes", graph.nodes.size()},
                     {"edges", edge_count},
                     {"roots", graph.roots.size()}};
        std::cout << summary.dump() << "\n";
    } else {
        std::cout << "wrote " << dot_path << ": " << graph.nodes.size() << " nodes, "
                  << edge_count << " edges\n";
    }
    return kExitYes;
}

int run_oracle_sat(const std::string& formula_text, std::size_t max_len,
                   const Options& options) {
    ltlf::Formula f = parse_or_exit(formula_text);
    std::optional<ltlf::Trace> witness = ltlf::brute_force_sat(f, max_len);
    if (options.as_json) {
        json out{{"verdict", witness ? "sat" : "unsat"}, {"max_len", max_len}};
        if (witness) out["witness"] = trace_json(*witness);
        std::cout << out.dump() << "\n";
    } else if (witness) {
        std::cout << "sat\n" << ltlf::trace_to_json(*witness) << "\n";
    } else {
        std::cout << "unsat (no model up to length " << max_len << ")\n";
    }
    return witness ? kExitYes : kExitNo;
}

int run_oracle_valid(const std::string& formula_text, std::size_t max_len,
                     const Options& options) {
    ltlf::Formula f = parse_or_exit(formula_text);
    std::optional<ltlf::Trace> counter = ltlf::brute_force_valid(f, max_len);
    if (options.as_json) {
        json out{{"verdict", counter ? "invalid" : "valid"}, {"max_len", max_len}};
        if (counter) out["countermodel"] = trace_json(*counter);
        std::cout << out.dump() << "\n";
    } else if (counter) {
        std::cout << "invalid\n" << ltlf::trace_to_json(*counter) << "\n";
    } else {
        std::cout << "valid (no counter-trace up to length " << max_len << ")\n";
    }
    return counter ? kExitNo : kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Satisfiability, validity, and trace evaluation for linear temporal "
                 "logic over finite traces"};
    app.require_subcommand(1);

    Options options;
    app.add_flag("--json", options.as_json, "Print results as a single JSON object");
    app.add_option("--max-closure", options.max_closure,
                   "Refuse sat/valid searches whose root closure exceeds this many "
                   "formulae (0 = no limit)")
        ->capture_default_str();

    std::string formula_text;
    std::string trace_path;
    std::string dot_path;
    std::size_t position = 1;
    std::size_t max_len = 0;
    bool at_root = false;

    CLI::App* sat = app.add_subcommand("sat", "Decide satisfiability; prints a witness trace");
    sat->add_option("formula", formula_text, "Formula text")->required();

    CLI::App* valid = app.add_subcommand("valid", "Decide validity (at every position)");
    valid->add_option("formula", formula_text, "Formula text")->required();
    valid->add_flag("--at-root", at_root, "Check only the first position of every trace");

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a formula over a trace file");
    eval_cmd->add_option("formula", formula_text, "Formula text")->required();
    eval_cmd->add_option("--trace", trace_path, "Trace file (JSON array of arrays)")
        ->required();
    eval_cmd->add_option("--pos", position, "Position to evaluate at (1-based)")
        ->capture_default_str();

    CLI::App* graph = app.add_subcommand("graph", "Write the proof graph as Graphviz DOT");
    graph->add_option("formula", formula_text, "Formula text")->required();
    graph->add_option("--dot", dot_path, "Output DOT file")->required();
    graph
        ->add_option("--warn-closure", options.graph_warn_closure,
                     "Warn when the root closure exceeds this many formulae")
        ->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force enumeration for cross-checks");
    oracle->require_subcommand(1);
    CLI::App* oracle_sat = oracle->add_subcommand("sat", "Search for a model by enumeration");
    oracle_sat->add_option("formula", formula_text, "Formula text")->required();
    oracle_sat->add_option("--max-len", max_len, "Maximum trace length")->required();
    CLI::App* oracle_valid =
        oracle->add_subcommand("valid", "Search for a counter-trace by enumeration");
    oracle_valid->add_option("formula", formula_text, "Formula text")->required();
    oracle_valid->add_option("--max-len", max_len, "Maximum trace length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (sat->parsed()) return run_sat(formula_text, options);
        if (valid->parsed()) return run_valid(formula_text, at_root, options);
        if (eval_cmd->parsed()) return run_eval(formula_text, trace_path, position, options);
        if (graph->parsed()) return run_graph(formula_text, dot_path, options);
        if (oracle->parsed()) {
            if (max_len < 1) {
                std::cerr << "error: --max-len must be at least 1\n";
                return kExitError;
            }
            if (oracle_sat->parsed()) return run_oracle_sat(formula_text, max_len, options);
            if (oracle_valid->parsed()) return run_oracle_valid(formula_text, max_len, options);
        }
    } catch (const ltlf::ClosureLimitError& err) {
        std::cerr << "error: " << err.what() << " (raise --max-closure to proceed)\n";
        return kExitError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
