#include <benchmark/benchmark.h>

#include "ltlf/oracle.hpp"
#include "ltlf/tableau.hpp"

namespace {

const char* kFormulaTexts[] = {
    "p W q",
    "G (p -> F q)",
    "X X X true",
    "(p U q) & G (q -> X !p)",
};

void BM_parse_render(benchmark::State& state) {
    const char* text = kFormulaTexts[state.range(0)];
    for (auto _ : state) {
        ltlf::Formula f = ltlf::parse(text);
        std::string out = ltlf::render(f);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_parse_render)->DenseRange(0, 3);

void BM_closure(benchmark::State& state) {
    ltlf::Formula f = ltlf::parse(kFormulaTexts[state.range(0)]);
    for (auto _ : state) {
        ltlf::FormulaSet cls = ltlf::closure(f);
        benchmark::DoNotOptimize(cls);
    }
}
BENCHMARK(BM_closure)->DenseRange(0, 3);

void BM_completions(benchmark::State& state) {
    ltlf::Pnp seed = ltlf::inject_finiteness(
        ltlf::Pnp({ltlf::parse(kFormulaTexts[state.range(0)])}, {}));
    for (auto _ : state) {
        auto comps = ltlf::completions(seed);
        benchmark::DoNotOptimize(comps);
    }
}
BENCHMARK(BM_completions)->DenseRange(0, 3);

void BM_decide_sat(benchmark::State& state) {
    ltlf::Formula f = ltlf::parse(kFormulaTexts[state.range(0)]);
    for (auto _ : state) {
        ltlf::SatResult result = ltlf::decide_sat(f);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_decide_sat)->DenseRange(0, 3);

void BM_decide_valid_finiteness(benchmark::State& state) {
    ltlf::Formula f = ltlf::parse("F end");
    for (auto _ : state) {
        ltlf::ValidityResult result = ltlf::decide_valid(f);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_decide_valid_finiteness);

void BM_oracle_unsat_scan(benchmark::State& state) {
    ltlf::Formula f = ltlf::parse("G p & F !p");
    for (auto _ : state) {
        auto witness = ltlf::brute_force_sat(f, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(witness);
    }
}
BENCHMARK(BM_oracle_unsat_scan)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
