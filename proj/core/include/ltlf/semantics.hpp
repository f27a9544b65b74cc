#pragma once

// Finite, non-empty traces and the three-way interpretation of formulae
// over them: at one position, at the first position, and at every
// position.  Positions are 1-based in the public interface.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ltlf/formula.hpp"

namespace ltlf {

// Truth assignment for one instant.  Only the true variables are stored;
// every other identifier is false.
class Valuation {
public:
    Valuation() = default;
    explicit Valuation(std::set<std::string> true_vars) : true_vars_(std::move(true_vars)) {}
    Valuation(std::initializer_list<std::string> true_vars) : true_vars_(true_vars) {}

    bool holds(std::string_view var) const {
        return true_vars_.find(std::string(var)) != true_vars_.end();
    }
    const std::set<std::string>& true_vars() const { return true_vars_; }

    bool operator==(const Valuation&) const = default;

private:
    std::set<std::string> true_vars_;
};

// A finite, non-empty sequence of valuations.
class Trace {
public:
    explicit Trace(std::vector<Valuation> states);

    std::size_t length() const { return states_.size(); }
    const std::vector<Valuation>& states() const { return states_; }

    // 1-based access; throws std::out_of_range.
    const Valuation& state(std::size_t position) const;

    bool operator==(const Trace&) const = default;

private:
    std::vector<Valuation> states_;
};

// Truth of f at position i (1-based).  Throws std::out_of_range unless
// 1 <= i <= length.  Internally evaluates each distinct subformula once
// per position, which keeps weak until linear-ish instead of quadratic.
bool eval(const Trace& trace, std::size_t position, Formula f);

// Truth at the first position.
bool models(const Trace& trace, Formula f);

// Truth at every position.
bool satisfies(const Trace& trace, Formula f);

// --------------------------------------------------------------------------
// Trace files: a JSON array of arrays of variable-name strings, one inner
// array per state in order, e.g. [["x"],["x","y"],[],["x","y","z"]].
// The outer array must be non-empty; duplicate names within a state are
// deduplicated.
// --------------------------------------------------------------------------

class TraceFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Trace trace_from_json(std::string_view text);
std::string trace_to_json(const Trace& trace);

}  // namespace ltlf
