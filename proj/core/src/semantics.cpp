#include "ltlf/semantics.hpp"

#include "compiled_eval.hpp"

namespace ltlf {

Trace::Trace(std::vector<Valuation> states) : states_(std::move(states)) {
    if (states_.empty()) {
        throw std::invalid_argument("Trace: a trace must have at least one state");
    }
}

const Valuation& Trace::state(std::size_t position) const {
    if (position < 1 || position > states_.size()) {
        throw std::out_of_range("Trace::state: position " + std::to_string(position) +
                                " not in 1.." + std::to_string(states_.size()));
    }
    return states_[position - 1];
}

namespace {

detail::TruthTable evaluate_over(const Trace& trace, Formula f, std::size_t& root) {
    detail::CompiledFormulas compiled;
    root = compiled.add(f);
    detail::TruthTable table;
    detail::fill_table(
        compiled, trace.length(),
        [&](const std::string& name, std::size_t i) -> char {
            return trace.states()[i - 1].holds(name);
        },
        table);
    return table;
}

}  // namespace

bool eval(const Trace& trace, std::size_t position, Formula f) {
    if (position < 1 || position > trace.length()) {
        throw std::out_of_range("eval: position " + std::to_string(position) + " not in 1.." +
                                std::to_string(trace.length()));
    }
    std::size_t root = 0;
    detail::TruthTable table = evaluate_over(trace, f, root);
    return table[root][position];
}

bool models(const Trace& trace, Formula f) {
    std::size_t root = 0;
    detail::TruthTable table = evaluate_over(trace, f, root);
    return table[root][1];
}

bool satisfies(const Trace& trace, Formula f) {
    std::size_t root = 0;
    detail::TruthTable table = evaluate_over(trace, f, root);
    for (std::size_t i = 1; i <= trace.length(); ++i) {
        if (!table[root][i]) return false;
    }
    return true;
}

}  // namespace ltlf
