#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "upper_envelope/builder.hpp"
#include "upper_envelope/frame.hpp"
#include "upper_envelope/query.hpp"

namespace {

std::vector<uenv::Point2> random_centers(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(0.0, 100.0);
    std::uniform_real_distribution<double> uy(0.0, 10.0);
    std::vector<uenv::Point2> pts(n);
    for (auto& p : pts) p = {ux(rng), uy(rng)};
    return pts;
}

std::vector<double> random_queries(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-1.0, 101.0);
    std::vector<double> xs(n);
    for (auto& x : xs) x = ux(rng);
    return xs;
}

void BM_Build(benchmark::State& state) {
    const auto pts = random_centers(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(uenv::build_envelope(pts));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Build)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oNLogN);

void BM_EvaluateSerial(benchmark::State& state) {
    const auto env = uenv::build_envelope(random_centers(10000, 2));
    const auto xs = random_queries(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(uenv::evaluate_many_serial(env, xs));
    }
}
BENCHMARK(BM_EvaluateSerial)->Arg(100000)->Arg(1000000);

void BM_EvaluateParallel(benchmark::State& state) {
    const auto env = uenv::build_envelope(random_centers(10000, 2));
    const auto xs = random_queries(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(uenv::evaluate_many(env, xs));
    }
}
BENCHMARK(BM_EvaluateParallel)->Arg(100000)->Arg(1000000);

void BM_ToCanonicalSerial(benchmark::State& state) {
    const auto frame = uenv::make_frame(2.5, {0.3, 0.7});
    const auto pts = random_centers(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(uenv::to_canonical_serial(pts, frame));
    }
}
BENCHMARK(BM_ToCanonicalSerial)->Arg(1000000);

void BM_ToCanonicalParallel(benchmark::State& state) {
    const auto frame = uenv::make_frame(2.5, {0.3, 0.7});
    const auto pts = random_centers(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(uenv::to_canonical(pts, frame));
    }
}
BENCHMARK(BM_ToCanonicalParallel)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
