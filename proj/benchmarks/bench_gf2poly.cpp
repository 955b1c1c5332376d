#include <benchmark/benchmark.h>

#include "regskew/gf2poly.hpp"

using namespace regskew::gf2;

namespace {

void BM_invert_series(benchmark::State& state) {
    const std::size_t gens = static_cast<std::size_t>(state.range(0));
    const std::uint64_t degree = static_cast<std::uint64_t>(state.range(1));
    Gf2Poly p = Gf2Poly::one(gens) + Gf2Poly::generator_sum(gens);
    for (auto _ : state)
        benchmark::DoNotOptimize(invert_series(p, degree));
    state.SetLabel(std::to_string(invert_series(p, degree).term_count()) + " terms");
}
BENCHMARK(BM_invert_series)->Args({3, 9})->Args({7, 35})->Args({15, 60})->Args({15, 75});

void BM_complement_pow(benchmark::State& state) {
    const std::size_t gens = static_cast<std::size_t>(state.range(0));
    const std::uint64_t degree = static_cast<std::uint64_t>(state.range(1));
    Gf2Poly p = Gf2Poly::one(gens) + Gf2Poly::generator_sum(gens);
    std::uint64_t e = (std::uint64_t(1) << 7) - 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(pow_truncated(p, e, degree));
}
BENCHMARK(BM_complement_pow)->Args({7, 35})->Args({15, 75});

void BM_mul_truncated(benchmark::State& state) {
    const std::size_t gens = 15;
    Gf2Poly p = Gf2Poly::one(gens) + Gf2Poly::generator_sum(gens);
    Gf2Poly big = invert_series(p, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mul_truncated(big, p, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_mul_truncated)->Arg(40)->Arg(75);

} // namespace
