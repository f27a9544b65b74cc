#include "ltlf/formula.hpp"

namespace ltlf {

// Every scheme below is a plain formula scheme; inference rules have no
// formula to emit and are left out.
std::vector<NamedFormula> axiom_corpus(std::span<const Formula> instantiation_vars) {
    if (instantiation_vars.empty()) {
        throw std::invalid_argument("axiom_corpus: instantiation_vars must be non-empty");
    }
    std::vector<NamedFormula> out;

    auto emit0 = [&](const char* name, Formula f) { out.push_back({name, f}); };
    auto emit1 = [&](const char* name, auto make) {
        for (Formula a : instantiation_vars) out.push_back({name, make(a)});
    };
    auto emit2 = [&](const char* name, auto make) {
        for (Formula a : instantiation_vars)
            for (Formula b : instantiation_vars) out.push_back({name, make(a, b)});
    };

    emit2("WkNextDistr", [](Formula a, Formula b) {
        return iff(weak_next(Formula::implies(a, b)),
                   Formula::implies(weak_next(a), weak_next(b)));
    });
    emit1("EndNextContra",
          [](Formula a) { return Formula::implies(end_of_time(), neg(Formula::next(a))); });
    emit0("Finite", eventually(end_of_time()));
    emit2("WkUntilUnroll", [](Formula a, Formula b) {
        return iff(Formula::weak_until(a, b),
                   disj(b, conj(a, weak_next(Formula::weak_until(a, b)))));
    });
    emit0("ModalConsistency", neg(conj(Formula::next(top()), Formula::next(Formula::bottom()))));
    emit1("NegNext", [](Formula a) {
        return iff(neg(Formula::next(a)), disj(end_of_time(), Formula::next(neg(a))));
    });
    emit1("WkNextEquiv", [](Formula a) {
        return iff(weak_next(a), disj(Formula::next(a), end_of_time()));
    });
    emit1("WkNextNegBeforeEnd", [](Formula a) {
        return Formula::implies(conj(neg(end_of_time()), weak_next(neg(a))),
                                neg(weak_next(a)));
    });
    emit2("WkNextDistConj", [](Formula a, Formula b) {
        return iff(weak_next(conj(a, b)), conj(weak_next(a), weak_next(b)));
    });
    emit1("WkNextNeg",
          [](Formula a) { return Formula::implies(neg(weak_next(a)), weak_next(neg(a))); });
    emit1("AlwaysUnroll", [](Formula a) {
        return iff(always(a), conj(a, weak_next(always(a))));
    });

    return out;
}

}  // namespace ltlf
