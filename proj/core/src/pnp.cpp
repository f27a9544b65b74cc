#include "ltlf/pnp.hpp"

#include <algorithm>
#include <unordered_map>

namespace ltlf {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b9 + (seed << 6) + (seed >> 2));
}

}  // namespace

FormulaSet Pnp::formulas() const {
    FormulaSet all = pos_;
    all.insert_all(neg_);
    return all;
}

std::size_t Pnp::hash() const {
    return hash_combine(hash_combine(0x7e113a5, pos_.hash()), neg_.hash());
}

int compare(const Pnp& a, const Pnp& b) {
    auto compare_sets = [](const FormulaSet& x, const FormulaSet& y) {
        const auto& xs = x.items();
        const auto& ys = y.items();
        for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
            int c = compare(xs[i], ys[i]);
            if (c != 0) return c;
        }
        if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
        return 0;
    };
    int c = compare_sets(a.pos(), b.pos());
    if (c != 0) return c;
    return compare_sets(a.neg(), b.neg());
}

FormulaSet closure(const Pnp& p) { return closure(p.formulas()); }

bool is_complete(const Pnp& p) {
    FormulaSet all = p.formulas();
    return closure(all) == all;
}

Formula literal_interpretation(const Pnp& p) {
    std::vector<Formula> parts;
    for (Formula f : p.pos()) parts.push_back(f);
    for (Formula f : p.neg()) parts.push_back(neg(f));
    if (parts.empty()) return top();
    Formula acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = conj(parts[i], acc);
    return acc;
}

Pnp step(const Pnp& p) {
    FormulaSet pos;
    FormulaSet neg;
    for (Formula f : p.pos()) {
        if (f.kind() == Kind::Next) {
            pos.insert(f.body());
        } else if (f.kind() == Kind::WeakUntil && p.neg().contains(f.rhs())) {
            pos.insert(f);
        }
    }
    for (Formula f : p.neg()) {
        if (f.kind() == Kind::Next) {
            neg.insert(f.body());
        } else if (f.kind() == Kind::WeakUntil && p.pos().contains(f.lhs())) {
            neg.insert(f);
        }
    }
    return Pnp(std::move(pos), std::move(neg));
}

bool extends(const Pnp& p, const Pnp& q) {
    return p.pos().subset_of(q.pos()) && p.neg().subset_of(q.neg());
}

bool locally_consistent(const Pnp& p) {
    if (!is_complete(p)) {
        throw std::invalid_argument("locally_consistent: PNP is not complete");
    }
    const FormulaSet& pos = p.pos();
    const FormulaSet& neg = p.neg();

    for (Formula f : pos) {
        if (neg.contains(f)) return false;  // (a)
    }
    if (pos.contains(Formula::bottom())) return false;  // (b)

    FormulaSet all = p.formulas();
    for (Formula f : all) {
        switch (f.kind()) {
            case Kind::Implies: {
                bool in_pos = pos.contains(f);
                bool holds = neg.contains(f.lhs()) || pos.contains(f.rhs());
                if (in_pos != holds) return false;  // (c)
                break;
            }
            case Kind::WeakUntil: {
                if (pos.contains(f) && neg.contains(f.rhs()) && !pos.contains(f.lhs())) {
                    return false;  // (d)
                }
                if (neg.contains(f) && !neg.contains(f.rhs())) return false;  // (e)
                break;
            }
            default:
                break;
        }
    }

    // (f): a node with X true in neg is a final instant.  No next formula
    // can hold there, and weak until degenerates into a disjunction.
    if (neg.contains(Formula::next(top()))) {
        for (Formula f : all) {
            if (f.kind() == Kind::Next && !neg.contains(f)) return false;
            if (f.kind() == Kind::WeakUntil) {
                bool in_pos = pos.contains(f);
                bool holds = pos.contains(f.lhs()) || pos.contains(f.rhs());
                if (in_pos != holds) return false;
            }
        }
    }
    return true;
}

namespace {

enum : signed char { kUnset = 0, kPos = 1, kNeg = 2 };

struct Assignment {
    std::vector<Formula> order;  // closure in canonical order
    std::vector<signed char> value;
    std::unordered_map<Formula, std::size_t, FormulaHash> index;
    bool has_xtop = false;
    std::size_t xtop = 0;

    signed char of(Formula f) const { return value[index.at(f)]; }
};

// Definite-violation check over a partial assignment; unknowns pass.
bool partial_ok(const Assignment& asg) {
    for (std::size_t i = 0; i < asg.order.size(); ++i) {
        Formula f = asg.order[i];
        signed char vf = asg.value[i];
        switch (f.kind()) {
            case Kind::Bottom:
                if (vf == kPos) return false;
                break;
            case Kind::Implies: {
                signed char va = asg.of(f.lhs());
                signed char vb = asg.of(f.rhs());
                if (vf == kPos && va == kPos && vb == kNeg) return false;
                if (vf == kNeg && (va == kNeg || vb == kPos)) return false;
                break;
            }
            case Kind::WeakUntil: {
                signed char va = asg.of(f.lhs());
                signed char vb = asg.of(f.rhs());
                if (vf == kPos && vb == kNeg && va == kNeg) return false;
                if (vf == kNeg && vb == kPos) return false;
                break;
            }
            default:
                break;
        }
    }
    if (asg.has_xtop && asg.value[asg.xtop] == kNeg) {
        for (std::size_t i = 0; i < asg.order.size(); ++i) {
            Formula f = asg.order[i];
            signed char vf = asg.value[i];
            if (f.kind() == Kind::Next && vf == kPos) return false;
            if (f.kind() == Kind::WeakUntil) {
                signed char va = asg.of(f.lhs());
                signed char vb = asg.of(f.rhs());
                if (vf == kPos && va == kNeg && vb == kNeg) return false;
                if (vf == kNeg && (va == kPos || vb == kPos)) return false;
            }
        }
    }
    return true;
}

void enumerate(Assignment& asg, std::size_t from, std::vector<Pnp>& out) {
    if (!partial_ok(asg)) return;
    while (from < asg.order.size() && asg.value[from] != kUnset) ++from;
    if (from == asg.order.size()) {
        FormulaSet pos;
        FormulaSet neg;
        for (std::size_t i = 0; i < asg.order.size(); ++i) {
            (asg.value[i] == kPos ? pos : neg).insert(asg.order[i]);
        }
        Pnp candidate(std::move(pos), std::move(neg));
        if (locally_consistent(candidate)) out.push_back(std::move(candidate));
        return;
    }
    asg.value[from] = kPos;
    enumerate(asg, from + 1, out);
    asg.value[from] = kNeg;
    enumerate(asg, from + 1, out);
    asg.value[from] = kUnset;
}

}  // namespace

std::vector<Pnp> completions(const Pnp& p) {
    FormulaSet cls = closure(p);

    Assignment asg;
    asg.order.assign(cls.begin(), cls.end());
    asg.value.assign(asg.order.size(), kUnset);
    for (std::size_t i = 0; i < asg.order.size(); ++i) asg.index.emplace(asg.order[i], i);

    Formula xtop = Formula::next(top());
    if (cls.contains(xtop)) {
        asg.has_xtop = true;
        asg.xtop = asg.index.at(xtop);
    }

    for (Formula f : p.pos()) asg.value[asg.index.at(f)] = kPos;
    for (Formula f : p.neg()) {
        std::size_t i = asg.index.at(f);
        if (asg.value[i] == kPos) return {};  // pos ∩ neg nonempty: nothing extends p
        asg.value[i] = kNeg;
    }

    std::vector<Pnp> out;
    enumerate(asg, 0, out);
    std::sort(out.begin(), out.end(), PnpLess{});
    return out;
}

}  // namespace ltlf
