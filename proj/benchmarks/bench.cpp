#include <random>

#include <benchmark/benchmark.h>

#include "fillings/cases.hpp"
#include "fillings/diagram.hpp"
#include "fillings/index.hpp"
#include "fillings/slope.hpp"
#include "fillings/tangle.hpp"

using namespace fl;

static void BM_TwistRoundTrip(benchmark::State& st) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<i64> num(-1000000, 1000000), den(1, 1000000);
    for (auto _ : st) {
        Slope s = slope_normalize(num(rng), den(rng));
        benchmark::DoNotOptimize(twists_to_fraction(fraction_to_twists(s)));
    }
}
BENCHMARK(BM_TwistRoundTrip);

static void BM_CoverQ(benchmark::State& st) {
    auto f = parse_q("Q(2,-5,-1/3,1/0)");
    for (auto _ : st) benchmark::DoNotOptimize(cover_Q(f));
}
BENCHMARK(BM_CoverQ);

static void BM_DiagramQ(benchmark::State& st) {
    auto f = make_q(slope(st.range(0)), slope(-5), slope(1, 3), slope(-1, 3));
    for (auto _ : st) benchmark::DoNotOptimize(diagram_Q(f));
}
BENCHMARK(BM_DiagramQ)->Arg(2)->Arg(9)->Arg(40);

static void BM_Goeritz(benchmark::State& st) {
    auto d = diagram_Q(make_q(slope(st.range(0)), slope(-5), slope(1, 3), slope(-1, 3)));
    st.counters["crossings"] = (double)d.crossings.size();
    for (auto _ : st) benchmark::DoNotOptimize(goeritz_determinant(d));
}
BENCHMARK(BM_Goeritz)->Arg(2)->Arg(9)->Arg(40);

static void BM_OracleGrid(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(oracle_grid(4999));
}
BENCHMARK(BM_OracleGrid)->Unit(benchmark::kMillisecond);

static void BM_Indices(benchmark::State& st) {
    std::mt19937_64 rng(1);
    auto g = random_plane_graph(rng, (int)st.range(0));
    orient_randomly(g, rng);
    for (auto _ : st) benchmark::DoNotOptimize(indices(g));
}
BENCHMARK(BM_Indices)->Arg(40)->Arg(400);

static void BM_InteriorTypes(benchmark::State& st) {
    auto l = standard_layout();
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_interior_types(l));
}
BENCHMARK(BM_InteriorTypes)->Unit(benchmark::kMillisecond);

static void BM_BoundaryCycles(benchmark::State& st) {
    auto l = standard_layout();
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_boundary_cycle_types(l, DualMode::omega));
}
BENCHMARK(BM_BoundaryCycles)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
