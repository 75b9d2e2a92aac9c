// Serial fold versus OpenMP reduction on the main summation kernels.
#include <benchmark/benchmark.h>

#include "jk/jfunction.hpp"
#include "jk/term_sum.hpp"

using namespace jk;

namespace {

void grassmannian_sum(benchmark::State& state, bool parallel)
{
    const int r = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1)), d = static_cast<int>(state.range(2));
    auto t = SpaceDescriptor::grassmannian(r, n).table();
    auto comps = compositions(d, r);
    std::vector<RationalExpression> terms;
    for (const auto& c : comps) terms.push_back(grassmannian_term(r, n, c));
    auto f = [&](std::size_t i) { return terms[i]; };
    for (auto _ : state) {
        auto s = parallel ? sum_terms_parallel(t, terms.size(), f) : sum_terms_serial(t, terms.size(), f);
        benchmark::DoNotOptimize(s);
    }
    state.counters["terms"] = static_cast<double>(terms.size());
}

void localization_sum(benchmark::State& state, bool parallel)
{
    const int r = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1)), k = static_cast<int>(state.range(2));
    auto gr = SpaceDescriptor::grassmannian(r, n);
    Monomial m(gr.table()->size());
    for (int j = 1; j <= r; ++j) m[gr.var(1, j)] = -k;
    KClassExpr f{gr, Polynomial::term(gr.table(), m)};
    set_parallel(parallel);
    for (auto _ : state) benchmark::DoNotOptimize(euler_characteristic(f));
    set_parallel(true);
}

void BM_GrassmannianSerial(benchmark::State& s) { grassmannian_sum(s, false); }
void BM_GrassmannianParallel(benchmark::State& s) { grassmannian_sum(s, true); }
void BM_EulerSerial(benchmark::State& s) { localization_sum(s, false); }
void BM_EulerParallel(benchmark::State& s) { localization_sum(s, true); }

} // namespace

BENCHMARK(BM_GrassmannianSerial)->Args({2, 4, 4})->Args({3, 5, 3})->Args({3, 4, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GrassmannianParallel)->Args({2, 4, 4})->Args({3, 5, 3})->Args({3, 4, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EulerSerial)->Args({2, 5, 2})->Args({3, 6, 1})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EulerParallel)->Args({2, 5, 2})->Args({3, 6, 1})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
