#pragma once

// Satisfiability and validity decisions by graph search over complete,
// locally consistent PNPs.  The search seeds the root with the finiteness
// formula `diamond_end`, so every path through the graph describes a
// finite trace and a node with X true in neg is a legal final instant.
// Reaching such a terminal node yields a witness trace directly.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltlf/pnp.hpp"
#include "ltlf/semantics.hpp"

namespace ltlf {

struct SearchStats {
    std::size_t nodes = 0;       // distinct PNPs discovered
    std::size_t expansions = 0;  // successor computations performed
};

struct SatResult {
    std::optional<Trace> witness;  // engaged iff satisfiable
    SearchStats stats;

    bool sat() const { return witness.has_value(); }
};

struct ValidityResult {
    std::optional<Trace> countermodel;  // engaged iff not valid
    SearchStats stats;

    bool valid() const { return !countermodel.has_value(); }
};

struct DecideOptions {
    // Refuse to search when the injected root closure exceeds this many
    // formulae; 0 means no limit.
    std::size_t max_closure = 0;
};

class ClosureLimitError : public std::runtime_error {
public:
    ClosureLimitError(std::size_t size, std::size_t limit);

    std::size_t closure_size() const { return size_; }
    std::size_t limit() const { return limit_; }

private:
    std::size_t size_;
    std::size_t limit_;
};

// Adds diamond_end to the positive set.  Idempotent.
Pnp inject_finiteness(const Pnp& p);

// X true in neg: the node describes the last instant of a trace.
bool is_terminal(const Pnp& p);

// Successors in the proof graph: consistent completions of the stepped
// node, with the finiteness formula re-injected so that every reachable
// node keeps diamond_end in pos and X true in its closure.
std::vector<Pnp> graph_successors(const Pnp& p);

// Breadth-first search from the completions of the injected root
// ({f, diamond_end}, {}) to the first terminal node.  Deterministic:
// roots and successors are visited in canonical order, so a satisfiable
// formula always yields the same shortest witness.
SatResult decide_sat(Formula f, const DecideOptions& options = {});

// Validity at every position: f is valid iff `F !f` is unsatisfiable.
// On failure the countermodel falsifies f at some position.
ValidityResult decide_valid(Formula f, const DecideOptions& options = {});

// Validity at the first position only: f holds at position 1 of every
// trace iff !f is unsatisfiable.
ValidityResult decide_valid_at_root(Formula f, const DecideOptions& options = {});

// Reads a witness trace off a root-to-terminal path: state i is true
// exactly on the variables in pos of the i-th node.  Throws
// std::invalid_argument on an empty path.
Trace extract_trace(std::span<const Pnp> path);

// Fully materialized proof graph, for inspection and DOT output.
struct ProofGraph {
    std::vector<Pnp> nodes;
    std::vector<std::vector<std::size_t>> successors;  // parallel to nodes
    std::vector<std::size_t> roots;
    SearchStats stats;
};

ProofGraph build_proof_graph(Formula f, const DecideOptions& options = {});

// Graphviz rendering: one node per PNP labeled with its pos/neg sets,
// roots in bold, terminal nodes double-circled when annotate_terminal.
std::string to_dot(const ProofGraph& graph, bool annotate_terminal);

}  // namespace ltlf
