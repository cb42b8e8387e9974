#include <benchmark/benchmark.h>

#include "hopfion/dirac.hpp"
#include "hopfion/gridio.hpp"
#include "hopfion/kg.hpp"
#include "hopfion/maxwell.hpp"

using namespace hopfion;

namespace {
const SpaceTimePoint kPoint{0.4, -0.3, 0.25, 0.15};
}

static void BM_ScalarField(benchmark::State& state) {
    const PacketParams params{static_cast<int>(state.range(0)), 1.0, 1.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(scalar_field(kPoint, params));
    }
}
BENCHMARK(BM_ScalarField)->Arg(0)->Arg(2);

static void BM_Bispinor(benchmark::State& state) {
    const auto kind = static_cast<BispinorKind>(state.range(0));
    const PacketParams params{1, 1.0, 1.0, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bispinor(kind, kPoint, params));
    }
}
BENCHMARK(BM_Bispinor)->DenseRange(0, 3);

// Closed-form current vs. assembling the bilinear from gamma matrices.
static void BM_FourCurrentClosed(benchmark::State& state) {
    const PacketParams params{1, 1.0, 1.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(four_current(BispinorKind::PsiPlus, kPoint, params));
    }
}
BENCHMARK(BM_FourCurrentClosed);

static void BM_FourCurrentBilinear(benchmark::State& state) {
    const PacketParams params{1, 1.0, 1.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(four_current_bilinear(BispinorKind::PsiPlus, kPoint, params));
    }
}
BENCHMARK(BM_FourCurrentBilinear);

static void BM_RsVector(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(rs_vector(kPoint, 1, 1.0));
    }
}
BENCHMARK(BM_RsVector);

static void BM_SamplePlane(benchmark::State& state) {
    const auto grid = GridSpec::parse("x=-2:2:41,z=-2:2:41,y=0,t=0");
    const PacketParams params{1, 1.0, 1.0, 0.0};
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_table("j_mu", grid, BispinorKind::PsiPlus, params, workers));
    }
    state.SetItemsProcessed(state.iterations() * grid.total());
}
BENCHMARK(BM_SamplePlane)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
