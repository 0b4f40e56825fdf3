#include <benchmark/benchmark.h>

#include <random>

#include "indpoly/chordal.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"
#include "indpoly/verify.hpp"

namespace {

indpoly::Graph fixed_gnp(int n, int percent) {
    std::mt19937_64 rng(0xbe9c5ULL + static_cast<std::uint64_t>(n) * 131 + percent);
    return indpoly::verify::random_gnp(n, percent, rng);
}

void BM_EnginePath(benchmark::State& state) {
    indpoly::Graph g = indpoly::path(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(indpoly::independence_polynomial(g));
}
BENCHMARK(BM_EnginePath)->Arg(20)->Arg(40)->Arg(60);

void BM_EngineBigStar(benchmark::State& state) {
    int arms = static_cast<int>(state.range(0));
    indpoly::Graph g = indpoly::big_star({std::vector<int>(arms, 7)});
    for (auto _ : state) benchmark::DoNotOptimize(indpoly::independence_polynomial(g));
}
BENCHMARK(BM_EngineBigStar)->Arg(3)->Arg(5);

void BM_EngineGnp(benchmark::State& state) {
    indpoly::Graph g = fixed_gnp(static_cast<int>(state.range(0)), 30);
    for (auto _ : state) benchmark::DoNotOptimize(indpoly::independence_polynomial(g));
}
BENCHMARK(BM_EngineGnp)->Arg(14)->Arg(18)->Arg(22);

void BM_EvalMinusOneGnp(benchmark::State& state) {
    indpoly::Graph g = fixed_gnp(static_cast<int>(state.range(0)), 30);
    for (auto _ : state) benchmark::DoNotOptimize(indpoly::eval_minus_one(g));
}
BENCHMARK(BM_EvalMinusOneGnp)->Arg(18)->Arg(22);

void BM_BruteForce(benchmark::State& state) {
    indpoly::Graph g = fixed_gnp(static_cast<int>(state.range(0)), 30);
    for (auto _ : state) benchmark::DoNotOptimize(indpoly::brute_force_polynomial(g));
}
BENCHMARK(BM_BruteForce)->Arg(12)->Arg(16);

void BM_MaximalCliques(benchmark::State& state) {
    indpoly::Graph g = fixed_gnp(static_cast<int>(state.range(0)), 50);
    for (auto _ : state) benchmark::DoNotOptimize(indpoly::maximal_cliques(g));
}
BENCHMARK(BM_MaximalCliques)->Arg(16)->Arg(20);

void BM_IsChordal(benchmark::State& state) {
    indpoly::Graph g = fixed_gnp(static_cast<int>(state.range(0)), 50);
    for (auto _ : state) benchmark::DoNotOptimize(indpoly::is_chordal(g));
}
BENCHMARK(BM_IsChordal)->Arg(30)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
