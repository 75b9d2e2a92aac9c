#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include "jk/correspondence.hpp"
#include "jk/errors.hpp"
#include "jk/term_sum.hpp"
#include "support.hpp"

using namespace jk;
using namespace jk::test;

TEST_CASE("serial and parallel sums agree")
{
    std::mt19937 rng(51);
    auto t = small_table();
    // denominators drawn from a small pool, as in the J-function sums
    std::vector<Polynomial> pool;
    for (int i = 0; i < 4; ++i) pool.push_back(random_nonzero(rng, t, 2));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<RationalExpression> terms;
    for (int i = 0; i < 24; ++i)
        terms.push_back(RationalExpression::from_factors(t, 1, Monomial(), {{random_polynomial(rng, t, 3), 1}},
                                                         {{pool[pick(rng)], 1}, {pool[pick(rng)], 1}}));
    auto f = [&](std::size_t i) { return terms[i]; };
    auto s = sum_terms_serial(t, terms.size(), f);
    auto p = sum_terms_parallel(t, terms.size(), f);
    CHECK(s == p);
    CHECK(sum_terms_parallel(t, 0, f).is_zero());
    CHECK(sum_terms_parallel(t, 1, f) == terms[0]);
}

TEST_CASE("grassmannian sums agree across backends")
{
    for (auto [r, n, d] : std::vector<std::tuple<int, int, int>>{{2, 3, 2}, {3, 4, 1}, {2, 4, 3}}) {
        auto t = SpaceDescriptor::grassmannian(r, n).table();
        auto comps = compositions(d, r);
        auto f = [&](std::size_t i) { return grassmannian_term(r, n, comps[i]); };
        CHECK(sum_terms_serial(t, comps.size(), f) == sum_terms_parallel(t, comps.size(), f));
    }
}

TEST_CASE("output is byte-identical across thread counts")
{
    std::string ref;
    for (int threads : {1, 2, 3, 8}) {
        omp_set_num_threads(threads);
        std::string out = to_json(grassmannian_j(3, 5, 2)).dump() + to_json(flag_j({1, 2}, 4, {1, 1}, FlagForm::canonical)).dump() +
                          abelian_nonabelian_check(3, 4, 2, CheckMode::unit_tolerant).to_json().dump();
        if (ref.empty()) ref = out;
        CAPTURE(threads);
        CHECK(out == ref);
    }
    set_parallel(false);
    std::string serial = to_json(grassmannian_j(3, 5, 2)).dump();
    set_parallel(true);
    CHECK(nlohmann::json::parse(serial)["value"] != nlohmann::json());
    CHECK(expression_from_json(nlohmann::json::parse(serial)["value"]) ==
          expression_from_json(nlohmann::json::parse(to_json(grassmannian_j(3, 5, 2)).dump())["value"]));
}

TEST_CASE("exceptions from workers surface in index order")
{
    auto t = small_table();
    auto f = [&](std::size_t i) -> RationalExpression {
        if (i == 3 || i == 7) throw AlgebraError("term " + std::to_string(i));
        return RationalExpression::constant(t, 1);
    };
    CHECK_THROWS_WITH_AS(sum_terms_parallel(t, 10, f), "term 3", AlgebraError);
    std::function<int(std::size_t)> sq = [](std::size_t i) { return static_cast<int>(i * i); };
    auto v = map_indices<int>(6, sq);
    CHECK(v == std::vector<int>{0, 1, 4, 9, 16, 25});
}
