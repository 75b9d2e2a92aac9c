#include "jk/rational.hpp"

#include <limits>
#include <numeric>

#include "jk/errors.hpp"

namespace jk {

namespace {

using i128 = __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v > kMin64 && v <= kMax64; }

i128 gcd128(i128 a, i128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v)
{
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpq_class make_mpq(i128 num, i128 den)
{
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    return q;
}

} // namespace

Rational::Rational(long long value)
{
    if (value == std::numeric_limits<long long>::min())
        assign_big(make_mpq(value, 1));
    else
        num_ = value;
}

Rational::Rational(long long num, long long den)
{
    if (den == 0) throw AlgebraError("rational with zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    } else {
        assign_big(make_mpq(n, d));
    }
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr)
{
}

Rational& Rational::operator=(const Rational& other)
{
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::assign_big(mpq_class value)
{
    value.canonicalize();
    const mpz_class& n = value.get_num();
    const mpz_class& d = value.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(value));
    }
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw UsageError("empty rational literal");
    auto valid = [](const std::string& part) {
        std::size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    if (!valid(n) || !valid(d) || d[0] == '-' || d[0] == '+')
        throw UsageError("malformed rational literal '" + s + "'");
    mpz_class zn(n), zd(d);
    if (zd == 0) throw AlgebraError("rational literal with zero denominator");
    Rational r;
    r.assign_big(mpq_class(zn, zd));
    return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const
{
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const
{
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

std::string Rational::to_string() const
{
    if (!big_) {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

Rational Rational::operator-() const
{
    Rational r;
    if (big_) {
        r.assign_big(-*big_);
    } else {
        r.num_ = -num_;  // num_ is never INT64_MIN by construction
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            i128 s = static_cast<i128>(num_) + rhs.num_;
            if (fits(s)) {
                num_ = static_cast<std::int64_t>(s);
                return *this;
            }
            assign_big(make_mpq(s, 1));
            return *this;
        }
        i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
        i128 d = static_cast<i128>(den_) * rhs.den_;
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
        } else {
            assign_big(make_mpq(n, d));
        }
        return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs)
{
    if (!big_ && !rhs.big_) {
        if (num_ == 0 || rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        i128 g1 = gcd128(num_, rhs.den_);
        i128 g2 = gcd128(rhs.num_, den_);
        i128 n = (static_cast<i128>(num_) / g1) * (static_cast<i128>(rhs.num_) / g2);
        i128 d = (static_cast<i128>(den_) / g2) * (static_cast<i128>(rhs.den_) / g1);
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
        } else {
            assign_big(make_mpq(n, d));
        }
        return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational Rational::inverse() const
{
    if (is_zero()) throw AlgebraError("division by zero rational");
    if (!big_) return Rational(den_, num_);
    Rational r;
    r.assign_big(1 / *big_);
    return r;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never equals an inline one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b)
{
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace jk
