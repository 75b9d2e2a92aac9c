#ifndef JK_RATIONAL_EXPRESSION_HPP
#define JK_RATIONAL_EXPRESSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "jk/permutation.hpp"
#include "jk/polynomial.hpp"

namespace jk {

// One denominator factor raised to a positive power.
struct Factor {
    Polynomial poly;
    int mult = 1;
};

// Image of one variable under substitution: coeff * monomial over the target table.
struct Binding {
    std::string var;
    Rational coeff = 1;
    Monomial image;
};

// Quotient num / den of Laurent polynomials.
//
// The denominator is kept as a sorted list of distinct normalized factors:
// each factor is primitive (integer coefficients, content 1), has no monomial
// content, has a positive leading coefficient and is not a monomial. Scalars
// and monomials always live in the numerator. There is no polynomial gcd, so
// the representation is not unique; equality is by cross-multiplication.
class RationalExpression {
public:
    RationalExpression() = default;
    explicit RationalExpression(TablePtr table);
    RationalExpression(Polynomial num);  // NOLINT(implicit)

    static RationalExpression constant(TablePtr table, Rational c);
    // (num_factors product) / (den_factors product), with equal factors on
    // both sides cancelled before anything is expanded.
    static RationalExpression from_factors(TablePtr table, Rational scalar, const Monomial& mono,
                                           const std::vector<Factor>& num_factors,
                                           const std::vector<Factor>& den_factors);

    const TablePtr& table() const { return num_.table(); }
    const Polynomial& numerator() const { return num_; }
    const std::vector<Factor>& factors() const { return den_; }
    Polynomial denominator() const;  // expanded product
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    RationalExpression operator-() const;
    friend RationalExpression operator+(const RationalExpression& a, const RationalExpression& b);
    friend RationalExpression operator-(const RationalExpression& a, const RationalExpression& b);
    friend RationalExpression operator*(const RationalExpression& a, const RationalExpression& b);
    friend RationalExpression operator/(const RationalExpression& a, const RationalExpression& b);
    RationalExpression& operator+=(const RationalExpression& b) { return *this = *this + b; }
    RationalExpression& operator-=(const RationalExpression& b) { return *this = *this - b; }
    RationalExpression& operator*=(const RationalExpression& b) { return *this = *this * b; }
    RationalExpression& operator/=(const RationalExpression& b) { return *this = *this / b; }
    RationalExpression inverse() const;
    RationalExpression pow(int k) const;

    // Semantic equality: a.num * b.den == b.num * a.den.
    friend bool equals(const RationalExpression& a, const RationalExpression& b);
    friend bool operator==(const RationalExpression& a, const RationalExpression& b) { return equals(a, b); }

    // Cancel denominator factors that divide the numerator exactly.
    RationalExpression reduced() const;

    // If the value is c * monomial (after reduction), return it.
    std::optional<std::pair<Rational, Monomial>> as_monomial_unit() const;

    // Variables without a binding keep their name and must exist in `target`.
    RationalExpression substitute(const std::vector<Binding>& bindings, const TablePtr& target) const;
    RationalExpression substitute(const std::vector<Binding>& bindings) const { return substitute(bindings, table()); }

    // Variable group[k] becomes group[w(k)].
    RationalExpression permuted(const std::vector<std::size_t>& group, const Permutation& w) const;
    RationalExpression reindexed(std::span<const std::size_t> map) const;

    bool depends_on(std::size_t var) const;

    // Order of vanishing at q = 0 (nullopt for zero).
    std::optional<int> q_valuation() const;
    // Power series in q through q^order; throws AlgebraError on a pole at q = 0
    // or when the coefficients are not Laurent polynomials.
    Polynomial q_series(int order) const;

private:
    Polynomial num_;
    std::vector<Factor> den_;
};

// Splits p = c * m * f with f normalized as a denominator factor (f = 1 when p
// is a monomial).
struct NormalizedFactor {
    Rational scalar;
    Monomial mono;
    Polynomial poly;
};
NormalizedFactor normalize_factor(const Polynomial& p);

} // namespace jk

#endif
