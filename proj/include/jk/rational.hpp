#ifndef JK_RATIONAL_HPP
#define JK_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace jk {

// Exact rational number. Values whose reduced numerator and denominator fit
// in 64 bits are stored inline; anything larger spills to a GMP rational.
// The representation is always canonical: gcd(|num|, den) = 1, den >= 1,
// and a value is "big" only if it does not fit the inline form.
class Rational {
public:
    Rational() = default;
    Rational(long long value);  // NOLINT(implicit)
    Rational(int value) : Rational(static_cast<long long>(value)) {}  // NOLINT(implicit)
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& value);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    // Accepts "a" or "a/b" with optional leading sign.
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    void assign_big(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

// Greatest common divisor of two nonnegative integers given as rationals
// with denominator 1; used for primitive-part extraction.
mpz_class gcd(const mpz_class& a, const mpz_class& b);

} // namespace jk

#endif
