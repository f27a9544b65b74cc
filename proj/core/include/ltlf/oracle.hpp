#pragma once

// Brute-force ground truth: exhaustive enumeration of traces up to a
// length bound.  Everything else in the library is cross-checked
// against it.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "ltlf/semantics.hpp"

namespace ltlf {

// Streams every trace whose valuations draw from `vars`, lengths
// 1..max_len, in length-lexicographic order: shorter traces first, and
// within one length the first state is most significant, with the empty
// valuation ordered before any nonempty one.
class TraceEnumerator {
public:
    TraceEnumerator(const std::set<std::string>& vars, std::size_t max_len);

    // The next trace, or nullopt when the stream is exhausted.
    std::optional<Trace> next();

private:
    std::vector<std::string> vars_;
    std::size_t max_len_;
    std::size_t length_ = 1;
    bool fresh_length_ = true;
    std::vector<std::uint64_t> odometer_;
};

// First enumerated trace (over free_vars(f)) that models f, or nullopt if
// none exists up to max_len.  A returned witness has minimal length.
std::optional<Trace> brute_force_sat(Formula f, std::size_t max_len);

// Nullopt when every enumerated trace satisfies f at every position;
// otherwise the first trace with some position where f is false.
std::optional<Trace> brute_force_valid(Formula f, std::size_t max_len);

// Bounded entailment check: the first trace over `vars` (up to max_len)
// that satisfies every premise at every position yet fails the conclusion
// at some position, or nullopt.
std::optional<Trace> entailment_counterexample(std::span<const Formula> premises,
                                               Formula conclusion,
                                               const std::set<std::string>& vars,
                                               std::size_t max_len);

// |closure(f & diamond_end)|: the exponent of the node-count bound for the
// satisfiability search seeded with f.
std::size_t finiteness_closure_size(Formula f);

// 2^finiteness_closure_size(f), saturating.  A sound trace-length bound
// for confirming unsatisfiability by enumeration.
std::size_t sound_trace_bound(Formula f);

}  // namespace ltlf
