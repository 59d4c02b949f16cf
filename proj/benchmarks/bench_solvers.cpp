#include <benchmark/benchmark.h>

#include "ajforge/ajforge.hpp"

using namespace ajforge;

namespace {

Generator<Rational> generator(unsigned l, unsigned s)
{
    Series<Rational> H = Series<Rational>::monomial(Truncation::finite(s), l + 1, Rational(1));
    for (unsigned k = l + 2; k <= s; ++k)
        H.set(k, Rational(static_cast<long>(k % 5) - 2, static_cast<long>(k % 3) + 1));
    return Generator<Rational>(H);
}

void BM_NormalForm(benchmark::State &state)
{
    const auto gen = generator(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(normal_form(gen));
}
BENCHMARK(BM_NormalForm)->Args({0, 12})->Args({1, 12})->Args({2, 15})->Args({3, 20});

void BM_NormalFormByIndexSums(benchmark::State &state)
{
    const auto gen = generator(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(normal_form_by_index_sums(gen));
}
BENCHMARK(BM_NormalFormByIndexSums)->Args({0, 12})->Args({2, 15});

void BM_SolveL0(benchmark::State &state)
{
    const auto gen = generator(0, static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_l0(gen, Rational(3, 2)));
}
BENCHMARK(BM_SolveL0)->Arg(8)->Arg(12);

void BM_SolveFull(benchmark::State &state)
{
    const unsigned l = static_cast<unsigned>(state.range(0));
    const auto gen = generator(l, 15);
    const SolutionParams<Rational> p{Rational(1), Rational(2, 3), std::vector<Rational>(l, Rational(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_full(gen, p));
}
BENCHMARK(BM_SolveFull)->Arg(1)->Arg(2)->Arg(3);

void BM_QTable(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(q_poly_table(static_cast<unsigned>(state.range(0)), 7));
}
BENCHMARK(BM_QTable)->Arg(2)->Arg(3);

void BM_TranslationEquation(benchmark::State &state)
{
    const auto F = build_genex_family(static_cast<unsigned>(state.range(0)), 15);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_translation_equation(F));
}
BENCHMARK(BM_TranslationEquation)->Arg(1)->Arg(2);

} // namespace

BENCHMARK_MAIN();
