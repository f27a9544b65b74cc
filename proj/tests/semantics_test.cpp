#include <doctest.h>

#include <random>

#include "ltlf/oracle.hpp"
#include "ltlf/semantics.hpp"
#include "support/generators.hpp"
#include "support/reference_eval.hpp"

using namespace ltlf;

namespace {

// The four-state worked example: x; x,y; (nothing); x,y,z.
Trace k4() { return trace_from_json(R"([["x"],["x","y"],[],["x","y","z"]])"); }

Trace single_empty_state() { return Trace({Valuation({})}); }

}  // namespace

TEST_CASE("eval: worked example") {
    Trace t = k4();
    Formula f = parse("y -> x");
    for (std::size_t i = 1; i <= 4; ++i) CHECK(eval(t, i, f));

    CHECK(eval(t, 1, parse("x W y")));
    CHECK(eval(t, 1, parse("z W x")));
}

TEST_CASE("eval: end of the trace") {
    Trace t = k4();
    CHECK_FALSE(eval(t, 4, parse("X true")));
    for (std::size_t i = 1; i <= 4; ++i) {
        CHECK(eval(t, i, parse("end")) == (i == 4));
    }
}

TEST_CASE("eval: position out of range") {
    Trace t = single_empty_state();
    CHECK_THROWS_AS(eval(t, 0, top()), std::out_of_range);
    CHECK_THROWS_AS(eval(t, 2, top()), std::out_of_range);
}

TEST_CASE("models") {
    CHECK(models(k4(), parse("F z")));
    CHECK(models(single_empty_state(), parse("end")));
    CHECK_FALSE(models(k4(), parse("G z")));
}

TEST_CASE("satisfies") {
    CHECK(satisfies(k4(), parse("y -> x")));
    CHECK(satisfies(k4(), parse("F z")));
    CHECK(satisfies(k4(), top()));
    CHECK_FALSE(satisfies(k4(), parse("x")));
}

TEST_CASE("trace type") {
    CHECK_THROWS_AS(Trace({}), std::invalid_argument);
    Trace t = k4();
    CHECK(t.length() == 4);
    CHECK(t.state(1).holds("x"));
    CHECK_FALSE(t.state(3).holds("x"));
    CHECK_THROWS_AS(t.state(0), std::out_of_range);
    CHECK_THROWS_AS(t.state(5), std::out_of_range);
}

TEST_CASE("evaluator agrees with the clause-by-clause reference") {
    std::mt19937 rng(23);
    std::set<std::string> vars{"p", "q"};
    for (int round = 0; round < 120; ++round) {
        Formula f = testgen::random_sugared(rng, 3);
        TraceEnumerator traces(vars, 3);
        while (auto t = traces.next()) {
            for (std::size_t i = 1; i <= t->length(); ++i) {
                if (eval(*t, i, f) != testref::ref_eval(*t, i, f)) {
                    CAPTURE(render(f));
                    CAPTURE(trace_to_json(*t));
                    CAPTURE(i);
                    REQUIRE(eval(*t, i, f) == testref::ref_eval(*t, i, f));
                }
            }
        }
    }
}

TEST_CASE("property: end holds exactly at the last position") {
    std::mt19937 rng(29);
    std::set<std::string> vars{"p", "q"};
    TraceEnumerator traces(vars, 4);
    Formula end = end_of_time();
    while (auto t = traces.next()) {
        for (std::size_t i = 1; i <= t->length(); ++i) {
            CHECK(eval(*t, i, end) == (i == t->length()));
        }
    }
}

TEST_CASE("property: weak next is vacuous at the last position") {
    std::mt19937 rng(31);
    for (int round = 0; round < 200; ++round) {
        Formula f = testgen::random_sugared(rng, 3);
        TraceEnumerator traces({"p", "q"}, 3);
        while (auto t = traces.next()) {
            CHECK(eval(*t, t->length(), weak_next(f)));
        }
    }
}

TEST_CASE("property: weak until degenerates at the last position") {
    std::mt19937 rng(37);
    for (int round = 0; round < 200; ++round) {
        Formula a = testgen::random_sugared(rng, 2);
        Formula b = testgen::random_sugared(rng, 2);
        TraceEnumerator traces({"p", "q"}, 3);
        while (auto t = traces.next()) {
            std::size_t n = t->length();
            bool wu = eval(*t, n, Formula::weak_until(a, b));
            bool degenerate = eval(*t, n, a) || eval(*t, n, b);
            CHECK(wu == degenerate);
        }
    }
}

TEST_CASE("trace json: round trip and normalization") {
    Trace t = k4();
    CHECK(trace_from_json(trace_to_json(t)) == t);
    CHECK(trace_to_json(t) == R"([["x"],["x","y"],[],["x","y","z"]])");

    // Duplicates collapse.
    CHECK(trace_from_json(R"([["x","x","y"]])") == trace_from_json(R"([["x","y"]])"));
}

TEST_CASE("trace json: malformed input") {
    CHECK_THROWS_AS(trace_from_json("not json"), TraceFormatError);
    CHECK_THROWS_AS(trace_from_json("[]"), TraceFormatError);
    CHECK_THROWS_AS(trace_from_json("{}"), TraceFormatError);
    CHECK_THROWS_AS(trace_from_json(R"([["x"],"y"])"), TraceFormatError);
    CHECK_THROWS_AS(trace_from_json(R"([[1]])"), TraceFormatError);
}
