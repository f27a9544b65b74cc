#pragma once

// Internal: flattens formulae into a child-before-parent node list so a
// truth table (node x position) can be filled in one backward pass per
// trace.  Shared by the public evaluator and the brute-force search.

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "ltlf/formula.hpp"

namespace ltlf::detail {

struct EvalNode {
    Kind kind;
    std::size_t a = 0;  // child row indices
    std::size_t b = 0;
    const std::string* name = nullptr;  // Var only
};

struct CompiledFormulas {
    std::vector<EvalNode> nodes;
    std::unordered_map<Formula, std::size_t, FormulaHash> row;

    std::size_t add(Formula f) {
        auto it = row.find(f);
        if (it != row.end()) return it->second;
        EvalNode node{f.kind()};
        switch (f.kind()) {
            case Kind::Var:
                node.name = &f.name();
                break;
            case Kind::Bottom:
                break;
            case Kind::Next:
                node.a = add(f.body());
                break;
            case Kind::Implies:
            case Kind::WeakUntil:
                node.a = add(f.lhs());
                node.b = add(f.rhs());
                break;
        }
        std::size_t id = nodes.size();
        nodes.push_back(node);
        row.emplace(f, id);
        return id;
    }
};

// Truth table with 1-based positions; column 0 is unused padding.
using TruthTable = std::vector<std::vector<char>>;

// var_at(name, position) supplies variable truth for the trace at hand.
template <typename VarAt>
void fill_table(const CompiledFormulas& compiled, std::size_t length, VarAt&& var_at,
                TruthTable& table) {
    const std::size_t n = length;
    table.assign(compiled.nodes.size(), std::vector<char>(n + 1, 0));
    for (std::size_t id = 0; id < compiled.nodes.size(); ++id) {
        const EvalNode& node = compiled.nodes[id];
        std::vector<char>& out = table[id];
        switch (node.kind) {
            case Kind::Var:
                for (std::size_t i = 1; i <= n; ++i) out[i] = var_at(*node.name, i);
                break;
            case Kind::Bottom:
                break;
            case Kind::Implies: {
                const std::vector<char>& lhs = table[node.a];
                const std::vector<char>& rhs = table[node.b];
                for (std::size_t i = 1; i <= n; ++i) out[i] = !lhs[i] || rhs[i];
                break;
            }
            case Kind::Next: {
                const std::vector<char>& body = table[node.a];
                for (std::size_t i = 1; i < n; ++i) out[i] = body[i + 1];
                out[n] = 0;
                break;
            }
            case Kind::WeakUntil: {
                // Either the left side holds to the end of the trace, or the
                // right side holds somewhere with the left holding before it.
                const std::vector<char>& lhs = table[node.a];
                const std::vector<char>& rhs = table[node.b];
                for (std::size_t i = 1; i <= n; ++i) {
                    char value = 1;  // left held through position n
                    for (std::size_t k = i; k <= n; ++k) {
                        if (rhs[k]) {
                            value = 1;
                            break;
                        }
                        if (!lhs[k]) {
                            value = 0;
                            break;
                        }
                    }
                    out[i] = value;
                }
                break;
            }
        }
    }
}

}  // namespace ltlf::detail
