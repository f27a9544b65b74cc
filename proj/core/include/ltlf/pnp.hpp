#pragma once

// Positive-negative pairs: the nodes of the satisfiability search.  A PNP
// assigns each relevant formula either to `pos` (holds at this instant) or
// to `neg` (fails at this instant).  A PNP is *complete* when its formula
// set is closed under the instant-level closure; completion enumerates the
// consistent ways to finish a partial assignment.

#include <cstddef>
#include <vector>

#include "ltlf/formula.hpp"

namespace ltlf {

class Pnp {
public:
    Pnp() = default;
    Pnp(FormulaSet pos, FormulaSet neg) : pos_(std::move(pos)), neg_(std::move(neg)) {}

    const FormulaSet& pos() const { return pos_; }
    const FormulaSet& neg() const { return neg_; }

    // pos ∪ neg.
    FormulaSet formulas() const;

    std::size_t hash() const;
    bool operator==(const Pnp&) const = default;

private:
    FormulaSet pos_;
    FormulaSet neg_;
};

struct PnpHash {
    std::size_t operator()(const Pnp& p) const { return p.hash(); }
};

// Canonical total order (pos first, then neg, elementwise structural).
int compare(const Pnp& a, const Pnp& b);

struct PnpLess {
    bool operator()(const Pnp& a, const Pnp& b) const { return compare(a, b) < 0; }
};

// Closure of pos ∪ neg.
FormulaSet closure(const Pnp& p);

// pos ∪ neg equals its own closure.
bool is_complete(const Pnp& p);

// Conjunction of all pos members and the negations of all neg members,
// folded right in canonical order; the empty PNP yields true.
Formula literal_interpretation(const Pnp& p);

// Obligations this instant imposes on the next one:
//   new pos:  b           for each X b in pos
//             a W b       for each a W b in pos with b in neg
//   new neg:  b           for each X b in neg
//             a W b       for each a W b in neg with a in pos
Pnp step(const Pnp& p);

// true iff q extends p: pos(p) ⊆ pos(q) and neg(p) ⊆ neg(q).
bool extends(const Pnp& p, const Pnp& q);

// Decidable instant-level consistency of a complete PNP.  Requires
// completeness (throws std::invalid_argument otherwise) and checks:
//
//   (a) pos and neg are disjoint;
//   (b) false is not in pos;
//   (c) each implication a -> b is in pos exactly when a is in neg or
//       b is in pos;
//   (d) each a W b in pos with b in neg has a in pos;
//   (e) each a W b in neg has b in neg;
//   (f) when X true is in neg (the node describes a final instant),
//       every next formula is in neg, and each a W b is in pos exactly
//       when a or b is in pos.
bool locally_consistent(const Pnp& p);

// All complete, locally consistent PNPs over closure(p) that extend p,
// in canonical order.  Equals enumerate-all-assignments-then-filter.
std::vector<Pnp> completions(const Pnp& p);

}  // namespace ltlf
