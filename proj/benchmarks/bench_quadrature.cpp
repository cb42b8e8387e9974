#include <benchmark/benchmark.h>

#include <cmath>

#include "hopfion/deriv.hpp"
#include "hopfion/dirac.hpp"
#include "hopfion/quadrature.hpp"

using namespace hopfion;

static void BM_Integrate1dGaussian(benchmark::State& state) {
    const auto f = [](double x) { return std::exp(-x * x); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_1d(f, -6.0, 6.0));
    }
}
BENCHMARK(BM_Integrate1dGaussian);

static void BM_SemiInfiniteTail(benchmark::State& state) {
    const auto f = [](double p) { return p * p * std::exp(-2.0 * std::sqrt(1.0 + p * p)); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_semi_inf(f, 0.0));
    }
}
BENCHMARK(BM_SemiInfiniteTail);

// Full charge integral of a rest-frame packet; dominated by Bessel calls.
static void BM_NormIntegral3d(benchmark::State& state) {
    const PacketParams params{1, 1.0, 1.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_integral(BispinorKind::PsiPlus, params));
    }
    state.SetLabel("psi+ l=1");
}
BENCHMARK(BM_NormIntegral3d)->Unit(benchmark::kMillisecond);

static void BM_RichardsonDerivative(benchmark::State& state) {
    const auto f = [](double x) { return std::sin(3.0 * x) * std::exp(-x * x); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(richardson_derivative(f, 0.4, 1));
    }
}
BENCHMARK(BM_RichardsonDerivative);

BENCHMARK_MAIN();
