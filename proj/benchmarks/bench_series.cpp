#include <benchmark/benchmark.h>

#include <random>

#include "ajforge/ajforge.hpp"

using namespace ajforge;

namespace {

Series<Rational> random_gamma(unsigned s, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    Series<Rational> f(Truncation::finite(s), Rational(0));
    for (unsigned k = 1; k <= s; ++k)
        f.set(k, Rational(num(rng), den(rng)));
    if (f[1].is_zero())
        f.set(1, Rational(1));
    return f;
}

void BM_Compose(benchmark::State &state)
{
    const unsigned s = static_cast<unsigned>(state.range(0));
    const auto a = random_gamma(s, 1), b = random_gamma(s, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(16)->Arg(32);

void BM_ComposeMultinomial(benchmark::State &state)
{
    const unsigned s = static_cast<unsigned>(state.range(0));
    const auto a = random_gamma(s, 1), b = random_gamma(s, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(compose_via_multinomial(a, b));
}
BENCHMARK(BM_ComposeMultinomial)->Arg(8)->Arg(12);

void BM_CompositionalInverse(benchmark::State &state)
{
    const unsigned s = static_cast<unsigned>(state.range(0));
    const Gamma<Rational> a(random_gamma(s, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(compositional_inverse(a));
}
BENCHMARK(BM_CompositionalInverse)->Arg(8)->Arg(16)->Arg(32);

void BM_Enumerate(benchmark::State &state)
{
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        for (unsigned i = 1; i <= n; ++i)
            benchmark::DoNotOptimize(enumerate(n, i, {FamilyKind::Hat, 2}).size());
}
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(16);

} // namespace
