#include "ltlf/formula.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace ltlf {

struct Formula::Node {
    Kind kind;
    const Node* a = nullptr;  // Implies/WeakUntil lhs, Next body
    const Node* b = nullptr;  // Implies/WeakUntil rhs
    std::string name;         // Var only
    std::size_t hash = 0;
    std::uint64_t tree_size = 1;
};

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b9 + (seed << 6) + (seed >> 2));
}

struct CompositeKey {
    Kind kind;
    const Formula::Node* a;
    const Formula::Node* b;
    bool operator==(const CompositeKey&) const = default;
};

struct CompositeKeyHash {
    std::size_t operator()(const CompositeKey& k) const {
        std::size_t h = static_cast<std::size_t>(k.kind);
        h = hash_combine(h, reinterpret_cast<std::size_t>(k.a));
        h = hash_combine(h, reinterpret_cast<std::size_t>(k.b));
        return h;
    }
};

// Global intern table.  Nodes live for the duration of the process; the
// deque keeps addresses stable as the table grows.
struct Interner {
    std::mutex mu;
    std::deque<Formula::Node> arena;
    std::unordered_map<std::string, const Formula::Node*> vars;
    std::unordered_map<CompositeKey, const Formula::Node*, CompositeKeyHash> composites;
    const Formula::Node* bottom = nullptr;
};

Interner& interner() {
    static Interner table;
    return table;
}

std::size_t structural_hash(Kind kind, const Formula::Node* a, const Formula::Node* b,
                            std::string_view name) {
    std::size_t h = hash_combine(0x517cc1b7, static_cast<std::size_t>(kind));
    if (a != nullptr) h = hash_combine(h, a->hash);
    if (b != nullptr) h = hash_combine(h, b->hash);
    if (!name.empty()) h = hash_combine(h, std::hash<std::string_view>{}(name));
    return h;
}

const Formula::Node* intern_composite(Kind kind, const Formula::Node* a,
                                      const Formula::Node* b) {
    Interner& table = interner();
    std::scoped_lock lock(table.mu);
    CompositeKey key{kind, a, b};
    auto it = table.composites.find(key);
    if (it != table.composites.end()) return it->second;
    Formula::Node node;
    node.kind = kind;
    node.a = a;
    node.b = b;
    node.hash = structural_hash(kind, a, b, {});
    node.tree_size = 1 + (a != nullptr ? a->tree_size : 0) + (b != nullptr ? b->tree_size : 0);
    table.arena.push_back(std::move(node));
    const Formula::Node* stored = &table.arena.back();
    table.composites.emplace(key, stored);
    return stored;
}

int kind_rank(Kind k) {
    switch (k) {
        case Kind::Bottom: return 0;
        case Kind::Var: return 1;
        case Kind::Implies: return 2;
        case Kind::Next: return 3;
        case Kind::WeakUntil: return 4;
    }
    return 5;
}

}  // namespace

Formula Formula::var(std::string_view name) {
    Interner& table = interner();
    std::scoped_lock lock(table.mu);
    auto it = table.vars.find(std::string(name));
    if (it != table.vars.end()) return Formula(it->second);
    Formula::Node node;
    node.kind = Kind::Var;
    node.name = std::string(name);
    node.hash = structural_hash(Kind::Var, nullptr, nullptr, name);
    table.arena.push_back(std::move(node));
    const Formula::Node* stored = &table.arena.back();
    table.vars.emplace(stored->name, stored);
    return Formula(stored);
}

Formula Formula::bottom() {
    Interner& table = interner();
    std::scoped_lock lock(table.mu);
    if (table.bottom == nullptr) {
        Formula::Node node;
        node.kind = Kind::Bottom;
        node.hash = structural_hash(Kind::Bottom, nullptr, nullptr, {});
        table.arena.push_back(std::move(node));
        table.bottom = &table.arena.back();
    }
    return Formula(table.bottom);
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    return Formula(intern_composite(Kind::Implies, lhs.node_, rhs.node_));
}

Formula Formula::next(Formula body) {
    return Formula(intern_composite(Kind::Next, body.node_, nullptr));
}

Formula Formula::weak_until(Formula lhs, Formula rhs) {
    return Formula(intern_composite(Kind::WeakUntil, lhs.node_, rhs.node_));
}

Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const { return node_->name; }

Formula Formula::lhs() const { return Formula(node_->a); }

Formula Formula::rhs() const { return Formula(node_->b); }

Formula Formula::body() const { return Formula(node_->a); }

std::uint64_t Formula::tree_size() const { return node_->tree_size; }

std::size_t Formula::hash() const { return node_->hash; }

int compare(Formula a, Formula b) {
    if (a.node_ == b.node_) return 0;
    int ra = kind_rank(a.kind());
    int rb = kind_rank(b.kind());
    if (ra != rb) return ra < rb ? -1 : 1;
    switch (a.kind()) {
        case Kind::Bottom:
            return 0;
        case Kind::Var: {
            int c = a.name().compare(b.name());
            return c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
        case Kind::Next:
            return compare(a.body(), b.body());
        case Kind::Implies:
        case Kind::WeakUntil: {
            int c = compare(a.lhs(), b.lhs());
            if (c != 0) return c;
            return compare(a.rhs(), b.rhs());
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Encodings
// ---------------------------------------------------------------------------

Formula neg(Formula f) { return Formula::implies(f, Formula::bottom()); }

Formula top() { return neg(Formula::bottom()); }

Formula disj(Formula a, Formula b) { return Formula::implies(neg(a), b); }

Formula conj(Formula a, Formula b) { return neg(disj(neg(a), neg(b))); }

Formula end_of_time() { return neg(Formula::next(top())); }

Formula weak_next(Formula f) { return neg(Formula::next(neg(f))); }

Formula always(Formula f) { return Formula::weak_until(f, Formula::bottom()); }

Formula eventually(Formula f) { return neg(always(neg(f))); }

Formula until(Formula a, Formula b) {
    return conj(Formula::weak_until(a, b), eventually(b));
}

Formula iff(Formula a, Formula b) {
    return conj(Formula::implies(a, b), Formula::implies(b, a));
}

Formula diamond_end() { return neg(always(Formula::next(top()))); }

Formula encode(std::string_view tag, std::span<const Formula> args) {
    auto want = [&](std::size_t n) {
        if (args.size() != n) {
            throw std::invalid_argument("encode: tag '" + std::string(tag) + "' takes " +
                                        std::to_string(n) + " argument(s), got " +
                                        std::to_string(args.size()));
        }
    };
    if (tag == "neg") { want(1); return neg(args[0]); }
    if (tag == "top") { want(0); return top(); }
    if (tag == "or") { want(2); return disj(args[0], args[1]); }
    if (tag == "and") { want(2); return conj(args[0], args[1]); }
    if (tag == "end") { want(0); return end_of_time(); }
    if (tag == "wknext") { want(1); return weak_next(args[0]); }
    if (tag == "always") { want(1); return always(args[0]); }
    if (tag == "eventually") { want(1); return eventually(args[0]); }
    if (tag == "until") { want(2); return until(args[0], args[1]); }
    throw std::invalid_argument("encode: unknown tag '" + std::string(tag) + "'");
}

// ---------------------------------------------------------------------------
// Formula sets and the closure function
// ---------------------------------------------------------------------------

FormulaSet::FormulaSet(std::initializer_list<Formula> items) {
    for (Formula f : items) insert(f);
}

void FormulaSet::insert(Formula f) {
    auto pos = std::lower_bound(items_.begin(), items_.end(), f, FormulaLess{});
    if (pos == items_.end() || !(*pos == f)) items_.insert(pos, f);
}

void FormulaSet::insert_all(const FormulaSet& other) {
    for (Formula f : other) insert(f);
}

bool FormulaSet::contains(Formula f) const {
    return std::binary_search(items_.begin(), items_.end(), f, FormulaLess{});
}

bool FormulaSet::subset_of(const FormulaSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(),
                         items_.end(), FormulaLess{});
}

std::size_t FormulaSet::hash() const {
    std::size_t h = items_.size();
    for (Formula f : items_) h = hash_combine(h, f.hash());
    return h;
}

namespace {

void closure_into(Formula f, FormulaSet& out) {
    if (out.contains(f)) return;
    out.insert(f);
    switch (f.kind()) {
        case Kind::Var:
        case Kind::Bottom:
        case Kind::Next:
            // Stops at the next modality: the body belongs to a later instant.
            return;
        case Kind::Implies:
        case Kind::WeakUntil:
            closure_into(f.lhs(), out);
            closure_into(f.rhs(), out);
            return;
    }
}

}  // namespace

FormulaSet closure(Formula f) {
    FormulaSet out;
    closure_into(f, out);
    return out;
}

FormulaSet closure(const FormulaSet& fs) {
    FormulaSet out;
    for (Formula f : fs) closure_into(f, out);
    return out;
}

std::set<std::string> free_vars(Formula f) {
    std::set<std::string> out;
    std::vector<Formula> work{f};
    FormulaSet seen;
    while (!work.empty()) {
        Formula g = work.back();
        work.pop_back();
        if (seen.contains(g)) continue;
        seen.insert(g);
        switch (g.kind()) {
            case Kind::Var:
                out.insert(g.name());
                break;
            case Kind::Bottom:
                break;
            case Kind::Next:
                work.push_back(g.body());
                break;
            case Kind::Implies:
            case Kind::WeakUntil:
                work.push_back(g.lhs());
                work.push_back(g.rhs());
                break;
        }
    }
    return out;
}

}  // namespace ltlf
