#ifndef JK_POLYNOMIAL_HPP
#define JK_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jk/rational.hpp"
#include "jk/variables.hpp"

namespace jk {

// Laurent polynomial with rational coefficients over a VariableTable.
//
// Terms are stored in strictly decreasing lexicographic order of their
// exponent vectors (q is the most significant variable), with no zero
// coefficients. The first term is the leading term. Exponents live in one
// flat buffer, `nvars` entries per term.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(TablePtr table);

    static Polynomial constant(TablePtr table, Rational c);
    static Polynomial term(TablePtr table, const Monomial& m, Rational c = 1);
    static Polynomial variable(TablePtr table, std::string_view name, int power = 1);
    // Build from unsorted (monomial, coefficient) pairs; like terms combine.
    static Polynomial from_terms(TablePtr table, std::vector<std::pair<Monomial, Rational>> terms);

    const TablePtr& table() const { return table_; }
    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;          // zero, or one term with the unit monomial
    bool is_monomial() const { return size() == 1; }
    Rational constant_value() const;   // requires is_constant()

    std::span<const int> exponents(std::size_t i) const { return {exps_.data() + i * nvars_, nvars_}; }
    const Rational& coeff(std::size_t i) const { return coeffs_[i]; }
    Monomial monomial(std::size_t i) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    Polynomial scaled(const Rational& c) const;
    Polynomial shifted(const Monomial& m) const;  // multiply by a monomial
    Polynomial pow(unsigned k) const;

    // Quotient if `divisor` divides exactly in the Laurent ring, else nullopt.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    int min_exponent(std::size_t var) const;
    int max_exponent(std::size_t var) const;
    Monomial min_monomial() const;  // componentwise minimum (monomial content)
    bool depends_on(std::size_t var) const;

    // Sum of terms whose exponent of `var` equals k, with that exponent zeroed.
    Polynomial coefficient_of(std::size_t var, int k) const;

    // Rename variables: old index i becomes new index map[i] (a bijection on
    // the table); the result is resorted.
    Polynomial reindexed(std::span<const std::size_t> map) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Three-way compare of canonical forms over the same table, lexicographic
    // over the (exponents, coefficient) term sequence.
    friend int compare(const Polynomial& a, const Polynomial& b);

private:
    friend class PolynomialBuilder;

    TablePtr table_;
    std::size_t nvars_ = 0;
    std::vector<int> exps_;
    std::vector<Rational> coeffs_;
};

// Appends terms in strictly decreasing order; used by algorithms that
// generate output already sorted.
class PolynomialBuilder {
public:
    explicit PolynomialBuilder(TablePtr table);
    void reserve(std::size_t n);
    void push(std::span<const int> exps, Rational c);  // c must be nonzero
    Polynomial finish() &&;

private:
    Polynomial p_;
};

// Lexicographic comparison of exponent vectors.
int compare_exponents(std::span<const int> a, std::span<const int> b);

} // namespace jk

#endif
