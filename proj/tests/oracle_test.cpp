#include <doctest.h>

#include <random>

#include "ltlf/oracle.hpp"
#include "support/generators.hpp"

using namespace ltlf;

namespace {

std::vector<Trace> collect(TraceEnumerator enumerator) {
    std::vector<Trace> out;
    while (auto t = enumerator.next()) out.push_back(*t);
    return out;
}

}  // namespace

TEST_CASE("enumeration: counts and order") {
    auto none = collect(TraceEnumerator({}, 2));
    REQUIRE(none.size() == 2);
    CHECK(none[0] == Trace({Valuation({})}));
    CHECK(none[1] == Trace({Valuation({}), Valuation({})}));

    auto one_var = collect(TraceEnumerator({"p"}, 1));
    REQUIRE(one_var.size() == 2);
    CHECK(one_var[0] == Trace({Valuation({})}));
    CHECK(one_var[1] == Trace({Valuation({{"p"}})}));

    auto two_vars = collect(TraceEnumerator({"p", "q"}, 2));
    CHECK(two_vars.size() == 4 + 16);

    CHECK_THROWS_AS(TraceEnumerator({}, 0), std::invalid_argument);
}

TEST_CASE("enumeration: length-lexicographic, first state most significant") {
    auto traces = collect(TraceEnumerator({"p"}, 2));
    REQUIRE(traces.size() == 6);
    CHECK(traces[2] == Trace({Valuation({}), Valuation({})}));
    CHECK(traces[3] == Trace({Valuation({}), Valuation({{"p"}})}));
    CHECK(traces[4] == Trace({Valuation({{"p"}}), Valuation({})}));
    CHECK(traces[5] == Trace({Valuation({{"p"}}), Valuation({{"p"}})}));
}

TEST_CASE("brute_force_sat: pinned") {
    auto witness = brute_force_sat(parse("X X X true"), 8);
    REQUIRE(witness.has_value());
    CHECK(witness->length() == 4);
    CHECK(trace_to_json(*witness) == "[[],[],[],[]]");

    CHECK_FALSE(brute_force_sat(parse("p & !p"), 4).has_value());

    // One direction of next-distribution fails on finite traces: at a
    // one-state trace X p and X q are both false, so the inner implication
    // holds while X (p -> q) does not.
    auto asym = brute_force_sat(parse("!((X p -> X q) -> X (p -> q))"), 4);
    REQUIRE(asym.has_value());
    CHECK(asym->length() == 1);
}

TEST_CASE("brute_force_valid: pinned") {
    CHECK_FALSE(brute_force_valid(parse("F end"), 6).has_value());
    CHECK_FALSE(brute_force_valid(parse("X (p -> q) -> (X p -> X q)"), 6).has_value());

    auto counter = brute_force_valid(parse("X p | X !p"), 3);
    REQUIRE(counter.has_value());
    CHECK(counter->length() == 1);
}

TEST_CASE("witnesses and counter-traces check out under eval") {
    std::mt19937 rng(41);
    for (int round = 0; round < 150; ++round) {
        Formula f = testgen::random_sugared(rng, 3);
        if (auto witness = brute_force_sat(f, 4)) {
            CHECK(models(*witness, f));
        }
        if (auto counter = brute_force_valid(f, 4)) {
            bool falsified = false;
            for (std::size_t i = 1; i <= counter->length(); ++i) {
                if (!eval(*counter, i, f)) falsified = true;
            }
            CHECK(falsified);
        }
    }
}

TEST_CASE("brute_force_valid absent iff true at every enumerated position") {
    std::mt19937 rng(43);
    for (int round = 0; round < 60; ++round) {
        Formula f = testgen::random_sugared(rng, 3);
        bool all_true = true;
        TraceEnumerator traces(free_vars(f), 3);
        while (auto t = traces.next()) {
            for (std::size_t i = 1; i <= t->length(); ++i) {
                if (!eval(*t, i, f)) all_true = false;
            }
        }
        CHECK(brute_force_valid(f, 3).has_value() == !all_true);
    }
}

TEST_CASE("brute_force_sat matches a filtered enumeration") {
    std::mt19937 rng(47);
    for (int round = 0; round < 60; ++round) {
        Formula f = testgen::random_sugared(rng, 3);
        std::optional<Trace> expected;
        TraceEnumerator traces(free_vars(f), 3);
        while (auto t = traces.next()) {
            if (models(*t, f)) {
                expected = *t;
                break;
            }
        }
        CHECK(brute_force_sat(f, 3) == expected);
    }
}

TEST_CASE("witness length is minimal") {
    std::mt19937 rng(53);
    for (int round = 0; round < 60; ++round) {
        Formula f = testgen::random_sugared(rng, 3);
        auto witness = brute_force_sat(f, 4);
        if (!witness) continue;
        for (std::size_t len = 1; len < witness->length(); ++len) {
            CHECK_FALSE(brute_force_sat(f, len).has_value());
        }
    }
}

TEST_CASE("entailment counterexamples") {
    std::set<std::string> vars{"p", "q"};
    Formula p = Formula::var("p");
    Formula q = Formula::var("q");

    // {p -> q, p} entails q at every position.
    Formula premises[] = {Formula::implies(p, q), p};
    CHECK_FALSE(entailment_counterexample(premises, q, vars, 4).has_value());

    // {F p} does not entail p.
    Formula fp[] = {eventually(p)};
    auto counter = entailment_counterexample(fp, p, vars, 4);
    REQUIRE(counter.has_value());
    CHECK(satisfies(*counter, eventually(p)));
    CHECK_FALSE(satisfies(*counter, p));
}

TEST_CASE("bound bookkeeping") {
    CHECK(finiteness_closure_size(Formula::bottom()) ==
          closure(conj(Formula::bottom(), diamond_end())).size());
    CHECK(sound_trace_bound(Formula::bottom()) ==
          std::size_t{1} << finiteness_closure_size(Formula::bottom()));
    CHECK(sound_trace_bound(parse("p U (q U (p U (q U p)))")) >= 1);
}
