#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "hopfion/ode.hpp"
#include "hopfion/topology.hpp"

using namespace hopfion;

static void BM_OdeCircle(benchmark::State& state) {
    const auto field = [](const Vec3& p) { return Vec3{-p.y, p.x, 0.0}; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(ode_trace(field, Vec3{1.0, 0.0, 0.0}, 2.0 * pi));
    }
}
BENCHMARK(BM_OdeCircle)->Unit(benchmark::kMillisecond);

static void BM_TraceMaxwellRing(benchmark::State& state) {
    const PacketParams params{0, 1.0, 1.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            trace_line(TraceSource::VelocityMaxwell, Vec3{1.0, 0.0, 0.0}, 8.0, params));
    }
}
BENCHMARK(BM_TraceMaxwellRing)->Unit(benchmark::kMillisecond);

static void BM_ClosureMetric(benchmark::State& state) {
    const auto field = [](const Vec3& p) { return Vec3{-p.y, p.x, 0.0}; };
    const auto trace = ode_trace(field, Vec3{1.0, 0.0, 0.0}, 2.0 * pi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure_metric(trace));
    }
}
BENCHMARK(BM_ClosureMetric);

// Gauss double sum is O(n^2) in the vertex count.
static void BM_LinkingNumber(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<Vec3> c1, c2;
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * pi * i / n;
        c1.push_back(Vec3{std::cos(th), std::sin(th), 0.0});
        c2.push_back(Vec3{1.0 + std::cos(th), 0.0, std::sin(th)});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(linking_number(c1, c2));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_LinkingNumber)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();
