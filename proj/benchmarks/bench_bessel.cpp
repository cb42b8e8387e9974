#include <benchmark/benchmark.h>

#include "hopfion/bessel.hpp"

using namespace hopfion;

static void BM_BesselRealModerate(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_k(2, cplx(1.3, 0.0)));
    }
}
BENCHMARK(BM_BesselRealModerate);

static void BM_BesselRealLarge(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_k(3, cplx(25.0, 0.0)));
    }
}
BENCHMARK(BM_BesselRealLarge);

static void BM_BesselComplex(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_k(2, cplx(2.0, 0.8)));
    }
}
BENCHMARK(BM_BesselComplex);

// |z| right at the series/continued-fraction handover, the slowest region.
static void BM_BesselSeam(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_k(4, cplx(1.95, 0.3)));
    }
}
BENCHMARK(BM_BesselSeam);

static void BM_BesselScaledHighOrder(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_k_scaled(10, cplx(40.0, 5.0)));
    }
}
BENCHMARK(BM_BesselScaledHighOrder);

static void BM_BesselOrderSweep(benchmark::State& state) {
    const int nu = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_k(nu, cplx(3.0, 1.0)));
    }
}
BENCHMARK(BM_BesselOrderSweep)->Arg(0)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
