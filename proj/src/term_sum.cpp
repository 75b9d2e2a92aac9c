#include "jk/term_sum.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <string>

#include <omp.h>

#include "jk/errors.hpp"

namespace jk {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

void apply_thread_limit_from_env()
{
    const char* s = std::getenv("JK_THREADS");
    if (!s || !*s) return;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1) throw UsageError("JK_THREADS must be a positive integer");
    omp_set_num_threads(static_cast<int>(v));
}

RationalExpression sum_terms_serial(const TablePtr& table, std::size_t count, const TermFn& term)
{
    RationalExpression acc(table);
    for (std::size_t i = 0; i < count; ++i) acc += term(i);
    return acc;
}

namespace {

// Runs body(i) for i < count on the OpenMP team, rethrowing the first
// exception (lowest index) on the calling thread.
template <class Body>
void parallel_for(std::size_t count, Body body)
{
    std::vector<std::exception_ptr> errors(count);
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace

RationalExpression sum_terms_parallel(const TablePtr& table, std::size_t count, const TermFn& term)
{
    if (count == 0) return RationalExpression(table);
    std::vector<RationalExpression> terms(count);
    parallel_for(count, [&](std::size_t i) { terms[i] = term(i); });

    // common denominator: maximum multiplicity of each factor
    std::vector<Factor> den;
    {
        std::vector<std::pair<const Polynomial*, int>> all;
        for (const auto& t : terms)
            for (const auto& f : t.factors()) all.emplace_back(&f.poly, f.mult);
        std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return compare(*a.first, *b.first) < 0; });
        for (const auto& [p, m] : all) {
            if (!den.empty() && den.back().poly == *p) den.back().mult = std::max(den.back().mult, m);
            else den.push_back({*p, m});
        }
    }

    std::vector<Polynomial> nums(count);
    parallel_for(count, [&](std::size_t i) {
        const auto& t = terms[i];
        Polynomial co = Polynomial::constant(table, 1);
        std::size_t k = 0;
        for (const auto& f : den) {
            int have = 0;
            while (k < t.factors().size() && compare(t.factors()[k].poly, f.poly) < 0) ++k;
            if (k < t.factors().size() && t.factors()[k].poly == f.poly) have = t.factors()[k].mult;
            if (f.mult > have) co *= f.poly.pow(static_cast<unsigned>(f.mult - have));
        }
        nums[i] = t.numerator() * co;
    });

    // pairwise tree in index order
    for (std::size_t step = 1; step < count; step *= 2) {
        const std::size_t stride = step * 2;
        const std::size_t pairs = (count + stride - 1) / stride;
        parallel_for(pairs, [&](std::size_t p) {
            std::size_t a = p * stride, b = a + step;
            if (b < count) nums[a] += nums[b];
        });
    }
    if (nums[0].is_zero()) return RationalExpression(table);
    std::vector<Factor> top{{std::move(nums[0]), 1}};
    return RationalExpression::from_factors(table, 1, Monomial(), top, den);
}

RationalExpression sum_terms(const TablePtr& table, std::size_t count, const TermFn& term)
{
    if (parallel_enabled() && count > 1) return sum_terms_parallel(table, count, term);
    return sum_terms_serial(table, count, term);
}

template <class T>
std::vector<T> map_indices(std::size_t count, const std::function<T(std::size_t)>& f)
{
    std::vector<T> out(count);
    if (parallel_enabled()) parallel_for(count, [&](std::size_t i) { out[i] = f(i); });
    else
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
}

template std::vector<RationalExpression> map_indices(std::size_t, const std::function<RationalExpression(std::size_t)>&);
template std::vector<int> map_indices(std::size_t, const std::function<int(std::size_t)>&);

} // namespace jk
