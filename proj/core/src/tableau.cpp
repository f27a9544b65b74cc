#include "ltlf/tableau.hpp"

#include <algorithm>
#include <unordered_map>

namespace ltlf {

ClosureLimitError::ClosureLimitError(std::size_t size, std::size_t limit)
    : std::runtime_error("closure has " + std::to_string(size) +
                         " formulae, over the limit of " + std::to_string(limit)),
      size_(size),
      limit_(limit) {}

Pnp inject_finiteness(const Pnp& p) {
    FormulaSet pos = p.pos();
    pos.insert(diamond_end());
    return Pnp(std::move(pos), p.neg());
}

bool is_terminal(const Pnp& p) { return p.neg().contains(Formula::next(top())); }

std::vector<Pnp> graph_successors(const Pnp& p) {
    return completions(inject_finiteness(step(p)));
}

namespace {

// Incremental breadth-first exploration with a visited set keyed by PNP
// identity.  Discovery order is deterministic, so the first terminal node
// found is the canonical shortest witness.
class Search {
public:
    explicit Search(Formula f, const DecideOptions& options) {
        Pnp root_seed = inject_finiteness(Pnp(FormulaSet{f}, FormulaSet{}));
        if (options.max_closure != 0) {
            std::size_t size = closure(root_seed).size();
            if (size > options.max_closure) {
                throw ClosureLimitError(size, options.max_closure);
            }
        }
        for (const Pnp& root : completions(root_seed)) {
            std::size_t id = discover(root, kNoParent);
            roots_.push_back(id);
        }
    }

    // Runs until a terminal node is found (returns its id) or the graph is
    // exhausted (returns nullopt).  With stop_at_terminal false, explores
    // the whole reachable graph.
    std::optional<std::size_t> run(bool stop_at_terminal) {
        std::optional<std::size_t> first_terminal = scan_new_for_terminal();
        if (stop_at_terminal && first_terminal) return first_terminal;
        while (next_to_expand_ < nodes_.size()) {
            std::size_t current = next_to_expand_++;
            ++stats_.expansions;
            std::vector<std::size_t>& edge_list = edges_.emplace_back();
            for (const Pnp& successor : graph_successors(nodes_[current])) {
                edge_list.push_back(discover(successor, static_cast<std::ptrdiff_t>(current)));
            }
            std::optional<std::size_t> terminal = scan_new_for_terminal();
            if (!first_terminal) first_terminal = terminal;
            if (stop_at_terminal && first_terminal) return first_terminal;
        }
        return first_terminal;
    }

    std::vector<Pnp> path_to(std::size_t id) const {
        std::vector<Pnp> path;
        for (std::ptrdiff_t at = static_cast<std::ptrdiff_t>(id); at != kNoParent;
             at = parent_[static_cast<std::size_t>(at)]) {
            path.push_back(nodes_[static_cast<std::size_t>(at)]);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    const std::vector<Pnp>& nodes() const { return nodes_; }
    const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& roots() const { return roots_; }
    const SearchStats& stats() const { return stats_; }

private:
    static constexpr std::ptrdiff_t kNoParent = -1;

    std::size_t discover(const Pnp& q, std::ptrdiff_t parent) {
        auto it = index_.find(q);
        if (it != index_.end()) return it->second;
        std::size_t id = nodes_.size();
        nodes_.push_back(q);
        parent_.push_back(parent);
        index_.emplace(q, id);
        ++stats_.nodes;
        return id;
    }

    // Terminal check over nodes discovered since the last scan; BFS order
    // makes the first hit the shallowest one.
    std::optional<std::size_t> scan_new_for_terminal() {
        while (next_terminal_scan_ < nodes_.size()) {
            std::size_t id = next_terminal_scan_++;
            if (is_terminal(nodes_[id])) return id;
        }
        return std::nullopt;
    }

    std::vector<Pnp> nodes_;
    std::vector<std::ptrdiff_t> parent_;
    std::vector<std::vector<std::size_t>> edges_;
    std::vector<std::size_t> roots_;
    std::unordered_map<Pnp, std::size_t, PnpHash> index_;
    std::size_t next_to_expand_ = 0;
    std::size_t next_terminal_scan_ = 0;
    SearchStats stats_;
};

}  // namespace

SatResult decide_sat(Formula f, const DecideOptions& options) {
    Search search(f, options);
    std::optional<std::size_t> terminal = search.run(/*stop_at_terminal=*/true);
    SatResult result;
    result.stats = search.stats();
    if (terminal) {
        std::vector<Pnp> path = search.path_to(*terminal);
        result.witness = extract_trace(path);
    }
    return result;
}

ValidityResult decide_valid(Formula f, const DecideOptions& options) {
    SatResult violation = decide_sat(eventually(neg(f)), options);
    return ValidityResult{std::move(violation.witness), violation.stats};
}

ValidityResult decide_valid_at_root(Formula f, const DecideOptions& options) {
    SatResult violation = decide_sat(neg(f), options);
    return ValidityResult{std::move(violation.witness), violation.stats};
}

Trace extract_trace(std::span<const Pnp> path) {
    if (path.empty()) {
        throw std::invalid_argument("extract_trace: path must be non-empty");
    }
    std::vector<Valuation> states;
    states.reserve(path.size());
    for (const Pnp& node : path) {
        std::set<std::string> true_vars;
        for (Formula f : node.pos()) {
            if (f.kind() == Kind::Var) true_vars.insert(f.name());
        }
        states.emplace_back(std::move(true_vars));
    }
    return Trace(std::move(states));
}

ProofGraph build_proof_graph(Formula f, const DecideOptions& options) {
    Search search(f, options);
    search.run(/*stop_at_terminal=*/false);
    ProofGraph graph;
    graph.nodes = search.nodes();
    graph.successors = search.edges();
    graph.roots = search.roots();
    graph.stats = search.stats();
    return graph;
}

namespace {

std::string dot_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Label text with DOT escaping already applied; \n is a DOT line break.
std::string node_label(const Pnp& node) {
    std::string label = "pos: {";
    bool first = true;
    for (Formula f : node.pos()) {
        if (!first) label += ", ";
        label += dot_escape(render(f));
        first = false;
    }
    label += "}\\nneg: {";
    first = true;
    for (Formula f : node.neg()) {
        if (!first) label += ", ";
        label += dot_escape(render(f));
        first = false;
    }
    label += "}";
    return label;
}

}  // namespace

std::string to_dot(const ProofGraph& graph, bool annotate_terminal) {
    std::string out = "digraph G {\n";
    std::vector<bool> is_root(graph.nodes.size(), false);
    for (std::size_t r : graph.roots) is_root[r] = true;
    for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
        out += "  n" + std::to_string(id) + " [label=\"" + node_label(graph.nodes[id]) + "\"";
        if (is_root[id]) out += ", style=bold";
        if (annotate_terminal && is_terminal(graph.nodes[id])) out += ", shape=doublecircle";
        out += "];\n";
    }
    for (std::size_t id = 0; id < graph.successors.size(); ++id) {
        for (std::size_t succ : graph.successors[id]) {
            out += "  n" + std::to_string(id) + " -> n" + std::to_string(succ) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace ltlf
