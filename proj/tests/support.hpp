#ifndef JK_TEST_SUPPORT_HPP
#define JK_TEST_SUPPORT_HPP

#include <map>
#include <random>
#include <vector>

#include "jk/rational_expression.hpp"
#include "jk/serialize.hpp"
#include "jk/space.hpp"

namespace jk::test {

inline TablePtr small_table() { return cached_table({"q", "u", "v", "w"}); }

inline Polynomial random_polynomial(std::mt19937& rng, const TablePtr& t, int terms, int lo = -2, int hi = 3)
{
    std::uniform_int_distribution<int> ex(lo, hi), co(-9, 9), de(1, 4);
    std::vector<std::pair<Monomial, Rational>> ts;
    for (int k = 0; k < terms; ++k) {
        Monomial m(t->size());
        for (std::size_t v = 0; v < t->size(); ++v) m[v] = ex(rng);
        ts.emplace_back(std::move(m), Rational(co(rng), de(rng)));
    }
    return Polynomial::from_terms(t, std::move(ts));
}

// nonzero, and nonzero at every point we might care about
inline Polynomial random_nonzero(std::mt19937& rng, const TablePtr& t, int terms)
{
    while (true) {
        Polynomial p = random_polynomial(rng, t, terms);
        if (!p.is_zero()) return p;
    }
}

inline RationalExpression random_expression(std::mt19937& rng, const TablePtr& t)
{
    Polynomial num = random_polynomial(rng, t, 3);
    std::vector<Factor> den{{random_nonzero(rng, t, 2), 1}, {random_nonzero(rng, t, 2), 1}};
    return RationalExpression::from_factors(t, 1, Monomial(), {{num, 1}}, den);
}

// Schoolbook product through an ordered map; independent of the heap code.
inline Polynomial naive_multiply(const Polynomial& a, const Polynomial& b)
{
    std::map<std::vector<int>, Rational> acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::vector<int> e(a.nvars());
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = a.exponents(i)[v] + b.exponents(j)[v];
            acc[e] += a.coeff(i) * b.coeff(j);
        }
    }
    std::vector<std::pair<Monomial, Rational>> ts;
    for (auto& [e, c] : acc) ts.emplace_back(Monomial(e), c);
    return Polynomial::from_terms(a.table(), std::move(ts));
}

inline RationalExpression rx(const std::string& text, const TablePtr& t) { return parse_expression(text, t); }

inline Rational binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(r));
}

} // namespace jk::test

#endif
