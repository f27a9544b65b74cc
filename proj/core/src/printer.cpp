#include "ltlf/formula.hpp"

namespace ltlf {

namespace {

// Binding strength within the full grammar; higher binds tighter.  The
// printer emits only core constructors but must parenthesize against the
// whole operator table so output re-parses unchanged.
constexpr int kImplies = 1;
constexpr int kWeakUntil = 4;
constexpr int kUnary = 5;
constexpr int kAtom = 6;

int level(Formula f) {
    switch (f.kind()) {
        case Kind::Implies: return kImplies;
        case Kind::WeakUntil: return kWeakUntil;
        case Kind::Next: return kUnary;
        case Kind::Var:
        case Kind::Bottom: return kAtom;
    }
    return kAtom;
}

void render_into(Formula f, int min_level, std::string& out) {
    if (level(f) < min_level) {
        out += '(';
        render_into(f, 0, out);
        out += ')';
        return;
    }
    switch (f.kind()) {
        case Kind::Var:
            out += f.name();
            return;
        case Kind::Bottom:
            out += "false";
            return;
        case Kind::Next:
            out += "X ";
            render_into(f.body(), kUnary, out);
            return;
        case Kind::WeakUntil:
            render_into(f.lhs(), kWeakUntil + 1, out);
            out += " W ";
            render_into(f.rhs(), kWeakUntil, out);
            return;
        case Kind::Implies:
            render_into(f.lhs(), kImplies + 1, out);
            out += " -> ";
            render_into(f.rhs(), kImplies, out);
            return;
    }
}

}  // namespace

std::string render(Formula f) {
    std::string out;
    render_into(f, 0, out);
    return out;
}

}  // namespace ltlf
