#pragma once

// Core syntax for linear temporal logic over finite, non-empty traces.
//
// The AST has exactly five constructors: variables, falsum, implication,
// strong next, and weak until.  Every other connective (negation,
// conjunction, always, eventually, until, ...) is an encoding that
// expands into these five at construction time, so downstream code only
// ever handles five cases.
//
// Formulae are interned: structurally equal formulae share one node.
// Handles are cheap value types, equality is pointer equality, and all
// operations here are pure and safe to call concurrently.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ltlf {

enum class Kind : unsigned char { Var, Bottom, Implies, Next, WeakUntil };

class Formula {
public:
    // Core constructors.
    static Formula var(std::string_view name);
    static Formula bottom();
    static Formula implies(Formula lhs, Formula rhs);
    static Formula next(Formula body);
    static Formula weak_until(Formula lhs, Formula rhs);

    Kind kind() const;

    // Var only.
    const std::string& name() const;
    // Implies and WeakUntil only.
    Formula lhs() const;
    Formula rhs() const;
    // Next only.
    Formula body() const;

    // Number of nodes in the syntax tree (shared subtrees counted per use).
    std::uint64_t tree_size() const;

    // Structural hash; stable across runs.
    std::size_t hash() const;

    bool operator==(const Formula&) const = default;

    struct Node;

private:
    explicit Formula(const Node* node) : node_(node) {}
    const Node* node_;

    friend int compare(Formula a, Formula b);
};

// Total structural order: -1, 0, +1.  Used wherever a deterministic
// canonical ordering of formulae is needed.
int compare(Formula a, Formula b);

struct FormulaLess {
    bool operator()(Formula a, Formula b) const { return compare(a, b) < 0; }
};

struct FormulaHash {
    std::size_t operator()(Formula f) const { return f.hash(); }
};

// --------------------------------------------------------------------------
// Encodings.  These expand mechanically; no simplification is performed.
//
//   !f        = f -> false             true      = !false
//   a | b     = !a -> b                a & b     = !(!a | !b)
//   end       = !(X true)              N f       = !(X !f)
//   G f       = f W false              F f       = !G !f
//   a U b     = (a W b) & F b          a <-> b   = (a -> b) & (b -> a)
// --------------------------------------------------------------------------

Formula neg(Formula f);
Formula top();
Formula disj(Formula a, Formula b);
Formula conj(Formula a, Formula b);
Formula end_of_time();
Formula weak_next(Formula f);
Formula always(Formula f);
Formula eventually(Formula f);
Formula until(Formula a, Formula b);
Formula iff(Formula a, Formula b);

// The finiteness formula the tableau injects: (X true W false) -> false.
// This is `F end` with the doubly negated X true collapsed, so that
// X true itself appears in the closure and end-of-trace nodes are
// recognizable syntactically.
Formula diamond_end();

// Tag-dispatched encoding: neg/1, top/0, or/2, and/2, end/0, wknext/1,
// always/1, eventually/1, until/2.  Throws std::invalid_argument on an
// unknown tag or an arity mismatch.
Formula encode(std::string_view tag, std::span<const Formula> args);

// --------------------------------------------------------------------------
// Canonical formula sets: sorted by the structural order, duplicate-free.
// --------------------------------------------------------------------------

class FormulaSet {
public:
    FormulaSet() = default;
    FormulaSet(std::initializer_list<Formula> items);

    void insert(Formula f);
    void insert_all(const FormulaSet& other);
    bool contains(Formula f) const;
    bool subset_of(const FormulaSet& other) const;

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    std::vector<Formula>::const_iterator begin() const { return items_.begin(); }
    std::vector<Formula>::const_iterator end() const { return items_.end(); }
    const std::vector<Formula>& items() const { return items_; }

    std::size_t hash() const;
    bool operator==(const FormulaSet&) const = default;

private:
    std::vector<Formula> items_;  // sorted, unique
};

// Subformulae relevant at the current instant.  Unfolds implications and
// weak untils, keeps variables and falsum, and does not descend under a
// next modality.
FormulaSet closure(Formula f);
FormulaSet closure(const FormulaSet& fs);

// All variable names occurring anywhere in the tree, including under next.
std::set<std::string> free_vars(Formula f);

// --------------------------------------------------------------------------
// Concrete syntax.
// --------------------------------------------------------------------------

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position,
               std::vector<std::string> expected);

    // Byte offset into the input at which parsing failed.
    std::size_t position() const { return position_; }
    // Tokens that would have been accepted at that point.
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

// Parses the concrete syntax into the core AST, expanding all sugar.
//
//   atoms       identifiers [A-Za-z_][A-Za-z0-9_]*, true, false, end
//   unary       X (next), N (weak next), G (always), F (eventually), !
//   binary      W, U, &, |, ->, <->
//   precedence  unary > {W, U} > & > | > -> > <->
//   While & and | associate to the left, W, U, -> and <-> to the right.
//
// X, N, G, F, W and U are reserved words, not identifiers.
Formula parse(std::string_view text);

// Renders the core constructors only (no re-sugaring) with minimal
// parentheses; parse(render(f)) == f.
std::string render(Formula f);

// --------------------------------------------------------------------------
// Axiom and consequence schemes, instantiated over caller-chosen formulae.
// Rule-form entries are not included; every returned formula is valid.
// --------------------------------------------------------------------------

struct NamedFormula {
    std::string name;
    Formula formula;
};

// Instantiates each scheme at every choice (with repetition) of the given
// formulae for its metavariables.  Throws std::invalid_argument when
// instantiation_vars is empty.
std::vector<NamedFormula> axiom_corpus(std::span<const Formula> instantiation_vars);

}  // namespace ltlf
