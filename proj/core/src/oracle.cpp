#include "ltlf/oracle.hpp"

#include <limits>

#include "compiled_eval.hpp"

namespace ltlf {

namespace {

// Valuations as bitmasks over a sorted variable list; bit i is vars[i].
Valuation valuation_from_mask(const std::vector<std::string>& vars, std::uint64_t mask) {
    std::set<std::string> true_vars;
    for (std::size_t b = 0; b < vars.size(); ++b) {
        if (mask & (std::uint64_t{1} << b)) true_vars.insert(vars[b]);
    }
    return Valuation(std::move(true_vars));
}

Trace trace_from_masks(const std::vector<std::string>& vars,
                       const std::vector<std::uint64_t>& masks) {
    std::vector<Valuation> states;
    states.reserve(masks.size());
    for (std::uint64_t mask : masks) states.push_back(valuation_from_mask(vars, mask));
    return Trace(std::move(states));
}

// Advances `masks` like a number with the last state least significant.
// Returns false when the sequence wraps around to all zeros.
bool advance(std::vector<std::uint64_t>& masks, std::uint64_t valuation_count) {
    for (std::size_t i = masks.size(); i-- > 0;) {
        if (++masks[i] < valuation_count) return true;
        masks[i] = 0;
    }
    return false;
}

// Walks all traces over `vars` in enumeration order and hands each one to
// visit(masks) until it returns true; returns the accepted trace.
template <typename Visit>
std::optional<Trace> scan_traces(const std::vector<std::string>& vars, std::size_t max_len,
                                 Visit&& visit) {
    const std::uint64_t valuation_count = std::uint64_t{1} << vars.size();
    std::vector<std::uint64_t> masks;
    for (std::size_t n = 1; n <= max_len; ++n) {
        masks.assign(n, 0);
        do {
            if (visit(masks)) return trace_from_masks(vars, masks);
        } while (advance(masks, valuation_count));
    }
    return std::nullopt;
}

std::vector<std::string> sorted_vars(const std::set<std::string>& vars) {
    return std::vector<std::string>(vars.begin(), vars.end());
}

void require_positive(std::size_t max_len) {
    if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
}

void require_enumerable(const std::vector<std::string>& vars) {
    if (vars.size() >= 62) {
        throw std::invalid_argument("too many variables for exhaustive enumeration");
    }
}

// Fills the truth table for one mask trace.
void fill_for_masks(const detail::CompiledFormulas& compiled,
                    const std::vector<std::string>& vars,
                    const std::vector<std::uint64_t>& masks, detail::TruthTable& table) {
    detail::fill_table(
        compiled, masks.size(),
        [&](const std::string& name, std::size_t i) -> char {
            for (std::size_t b = 0; b < vars.size(); ++b) {
                if (vars[b] == name) return (masks[i - 1] >> b) & 1;
            }
            return 0;
        },
        table);
}

}  // namespace

TraceEnumerator::TraceEnumerator(const std::set<std::string>& vars, std::size_t max_len)
    : vars_(sorted_vars(vars)), max_len_(max_len) {
    require_positive(max_len);
    require_enumerable(vars_);
}

std::optional<Trace> TraceEnumerator::next() {
    const std::uint64_t valuation_count = std::uint64_t{1} << vars_.size();
    while (length_ <= max_len_) {
        if (fresh_length_) {
            odometer_.assign(length_, 0);
            fresh_length_ = false;
            return trace_from_masks(vars_, odometer_);
        }
        if (advance(odometer_, valuation_count)) {
            return trace_from_masks(vars_, odometer_);
        }
        ++length_;
        fresh_length_ = true;
    }
    return std::nullopt;
}

std::optional<Trace> brute_force_sat(Formula f, std::size_t max_len) {
    require_positive(max_len);
    std::vector<std::string> vars = sorted_vars(free_vars(f));
    require_enumerable(vars);
    detail::CompiledFormulas compiled;
    std::size_t root = compiled.add(f);
    detail::TruthTable table;
    return scan_traces(vars, max_len, [&](const std::vector<std::uint64_t>& masks) {
        fill_for_masks(compiled, vars, masks, table);
        return static_cast<bool>(table[root][1]);
    });
}

std::optional<Trace> brute_force_valid(Formula f, std::size_t max_len) {
    require_positive(max_len);
    std::vector<std::string> vars = sorted_vars(free_vars(f));
    require_enumerable(vars);
    detail::CompiledFormulas compiled;
    std::size_t root = compiled.add(f);
    detail::TruthTable table;
    return scan_traces(vars, max_len, [&](const std::vector<std::uint64_t>& masks) {
        fill_for_masks(compiled, vars, masks, table);
        for (std::size_t i = 1; i <= masks.size(); ++i) {
            if (!table[root][i]) return true;  // counter-trace
        }
        return false;
    });
}

std::optional<Trace> entailment_counterexample(std::span<const Formula> premises,
                                               Formula conclusion,
                                               const std::set<std::string>& vars,
                                               std::size_t max_len) {
    require_positive(max_len);
    std::vector<std::string> var_list = sorted_vars(vars);
    require_enumerable(var_list);
    detail::CompiledFormulas compiled;
    std::vector<std::size_t> premise_rows;
    premise_rows.reserve(premises.size());
    for (Formula f : premises) premise_rows.push_back(compiled.add(f));
    std::size_t conclusion_row = compiled.add(conclusion);
    detail::TruthTable table;
    return scan_traces(var_list, max_len, [&](const std::vector<std::uint64_t>& masks) {
        fill_for_masks(compiled, var_list, masks, table);
        for (std::size_t row : premise_rows) {
            for (std::size_t i = 1; i <= masks.size(); ++i) {
                if (!table[row][i]) return false;  // premise not satisfied
            }
        }
        for (std::size_t i = 1; i <= masks.size(); ++i) {
            if (!table[conclusion_row][i]) return true;
        }
        return false;
    });
}

std::size_t finiteness_closure_size(Formula f) {
    return closure(conj(f, diamond_end())).size();
}

std::size_t sound_trace_bound(Formula f) {
    std::size_t exponent = finiteness_closure_size(f);
    if (exponent >= std::numeric_limits<std::size_t>::digits) {
        return std::numeric_limits<std::size_t>::max();
    }
    return std::size_t{1} << exponent;
}

}  // namespace ltlf
