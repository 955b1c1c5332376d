#include <benchmark/benchmark.h>

#include "regskew/charclass.hpp"
#include "regskew/regcheck.hpp"

namespace {

void BM_certify_regular(benchmark::State& state) {
    const std::int64_t d = state.range(0), k = state.range(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(regskew::certify_regular(d, k));
}
BENCHMARK(BM_certify_regular)->Args({4, 4})->Args({5, 16})->Args({6, 20});

void BM_certify_skew(benchmark::State& state) {
    const std::int64_t d = state.range(0), l = state.range(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(regskew::certify_skew(d, l));
}
BENCHMARK(BM_certify_skew)->Args({4, 8})->Args({6, 10});

void BM_moment_rank(benchmark::State& state) {
    using namespace regskew::regcheck;
    const std::int64_t k = state.range(0);
    MapFamily f = MapFamily::real_moment(k);
    RandomSampler sampler{42, 64, 1000, 1000};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_k_regular(f, k, sampler, ExactArithmetic{}));
}
BENCHMARK(BM_moment_rank)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
