#include "jk/rational_expression.hpp"

#include <algorithm>
#include <map>

#include "jk/errors.hpp"

namespace jk {

namespace {

Rational rational_pow(Rational base, int k)
{
    if (k < 0) {
        if (base.is_zero()) throw AlgebraError("zero raised to a negative power");
        base = base.inverse();
        k = -k;
    }
    Rational r = 1;
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return r;
}

Monomial monomial_pow(const Monomial& m, int k)
{
    Monomial r(m.size());
    for (std::size_t v = 0; v < m.size(); ++v) r[v] = m[v] * k;
    return r;
}

bool factor_less(const Factor& a, const Factor& b) { return compare(a.poly, b.poly) < 0; }

// Sort and combine equal factors.
void canonicalize(std::vector<Factor>& fs)
{
    std::sort(fs.begin(), fs.end(), factor_less);
    std::vector<Factor> out;
    for (auto& f : fs) {
        if (!out.empty() && out.back().poly == f.poly) out.back().mult += f.mult;
        else out.push_back(std::move(f));
    }
    std::erase_if(out, [](const Factor& f) { return f.mult == 0; });
    fs = std::move(out);
}

int mult_of(const std::vector<Factor>& fs, const Polynomial& p)
{
    auto it = std::lower_bound(fs.begin(), fs.end(), p, [](const Factor& f, const Polynomial& x) { return compare(f.poly, x) < 0; });
    if (it != fs.end() && it->poly == p) return it->mult;
    return 0;
}

// Least common multiple of two sorted factor lists.
std::vector<Factor> lcd(const std::vector<Factor>& a, const std::vector<Factor>& b)
{
    std::vector<Factor> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c = i == a.size() ? 1 : j == b.size() ? -1 : compare(a[i].poly, b[j].poly);
        if (c < 0) out.push_back(a[i++]);
        else if (c > 0) out.push_back(b[j++]);
        else {
            out.push_back({a[i].poly, std::max(a[i].mult, b[j].mult)});
            ++i;
            ++j;
        }
    }
    return out;
}

// Product of the factors of `full` divided by those of `part` (part | full).
Polynomial cofactor(const TablePtr& table, const std::vector<Factor>& full, const std::vector<Factor>& part)
{
    Polynomial r = Polynomial::constant(table, 1);
    for (const auto& f : full) {
        int k = f.mult - mult_of(part, f.poly);
        if (k > 0) r *= f.poly.pow(static_cast<unsigned>(k));
    }
    return r;
}

} // namespace

NormalizedFactor normalize_factor(const Polynomial& p)
{
    if (p.is_zero()) throw AlgebraError("cannot normalize the zero polynomial");
    NormalizedFactor out;
    out.mono = p.min_monomial();
    Polynomial f = p.shifted(out.mono.inverse());
    mpz_class g = 0, l = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        g = gcd(g, f.coeff(i).numerator());
        mpz_class d = f.coeff(i).denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rational content{mpq_class(g, l)};
    if (f.coeff(0).sign() < 0) content = -content;
    out.scalar = content;
    out.poly = f.scaled(content.inverse());
    return out;
}

RationalExpression::RationalExpression(TablePtr table) : num_(std::move(table)) {}

RationalExpression::RationalExpression(Polynomial num) : num_(std::move(num)) {}

RationalExpression RationalExpression::constant(TablePtr table, Rational c)
{
    return RationalExpression(Polynomial::constant(std::move(table), std::move(c)));
}

RationalExpression RationalExpression::from_factors(TablePtr table, Rational scalar, const Monomial& mono,
                                                    const std::vector<Factor>& num_factors,
                                                    const std::vector<Factor>& den_factors)
{
    const std::size_t nv = table->size();
    Monomial m = mono.size() == 0 ? Monomial(nv) : mono;
    std::vector<Factor> top, bottom;
    for (const auto& f : den_factors) {
        require_same_table(table, f.poly.table(), "rational expression");
        if (f.mult == 0) continue;
        if (f.poly.is_zero()) throw AlgebraError("division by zero expression");
        auto n = normalize_factor(f.poly);
        scalar /= rational_pow(n.scalar, f.mult);
        m *= monomial_pow(n.mono, -f.mult);
        if (!n.poly.is_constant()) bottom.push_back({std::move(n.poly), f.mult});
    }
    for (const auto& f : num_factors) {
        require_same_table(table, f.poly.table(), "rational expression");
        if (f.mult == 0) continue;
        if (f.poly.is_zero()) return RationalExpression(table);
        auto n = normalize_factor(f.poly);
        scalar *= rational_pow(n.scalar, f.mult);
        m *= monomial_pow(n.mono, f.mult);
        if (!n.poly.is_constant()) top.push_back({std::move(n.poly), f.mult});
    }
    if (scalar.is_zero()) return RationalExpression(table);
    canonicalize(top);
    canonicalize(bottom);
    // cancel common factors
    for (auto& t : top) {
        auto it = std::lower_bound(bottom.begin(), bottom.end(), t, factor_less);
        if (it == bottom.end() || !(it->poly == t.poly)) continue;
        int c = std::min(t.mult, it->mult);
        t.mult -= c;
        it->mult -= c;
    }
    std::erase_if(bottom, [](const Factor& f) { return f.mult == 0; });
    Polynomial num = Polynomial::term(table, m, scalar);
    for (const auto& t : top)
        if (t.mult > 0) num *= t.poly.pow(static_cast<unsigned>(t.mult));
    RationalExpression r(std::move(num));
    r.den_ = std::move(bottom);
    return r;
}

Polynomial RationalExpression::denominator() const
{
    Polynomial d = Polynomial::constant(table(), 1);
    for (const auto& f : den_) d *= f.poly.pow(static_cast<unsigned>(f.mult));
    return d;
}

RationalExpression RationalExpression::operator-() const
{
    RationalExpression r(*this);
    r.num_ = -r.num_;
    return r;
}

namespace {

RationalExpression add_impl(const RationalExpression& a, const RationalExpression& b, bool subtract)
{
    require_same_table(a.table(), b.table(), "rational expression add");
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    auto den = lcd(a.factors(), b.factors());
    Polynomial na = a.numerator() * cofactor(a.table(), den, a.factors());
    Polynomial nb = b.numerator() * cofactor(a.table(), den, b.factors());
    Polynomial num = subtract ? na - nb : na + nb;
    if (num.is_zero()) return RationalExpression(a.table());
    std::vector<Factor> top{{std::move(num), 1}};
    return RationalExpression::from_factors(a.table(), 1, Monomial(), top, den);
}

} // namespace

RationalExpression operator+(const RationalExpression& a, const RationalExpression& b) { return add_impl(a, b, false); }
RationalExpression operator-(const RationalExpression& a, const RationalExpression& b) { return add_impl(a, b, true); }

RationalExpression operator*(const RationalExpression& a, const RationalExpression& b)
{
    require_same_table(a.table(), b.table(), "rational expression multiply");
    if (a.is_zero() || b.is_zero()) return RationalExpression(a.table());
    if (a.is_polynomial() && b.is_polynomial()) return RationalExpression(a.num_ * b.num_);
    std::vector<Factor> top{{a.num_, 1}, {b.num_, 1}};
    std::vector<Factor> bottom = a.den_;
    bottom.insert(bottom.end(), b.den_.begin(), b.den_.end());
    return RationalExpression::from_factors(a.table(), 1, Monomial(), top, bottom);
}

RationalExpression operator/(const RationalExpression& a, const RationalExpression& b)
{
    require_same_table(a.table(), b.table(), "rational expression divide");
    if (b.is_zero()) throw AlgebraError("division by zero expression");
    if (a.is_zero()) return RationalExpression(a.table());
    std::vector<Factor> top{{a.num_, 1}};
    top.insert(top.end(), b.den_.begin(), b.den_.end());
    std::vector<Factor> bottom = a.den_;
    bottom.push_back({b.num_, 1});
    return RationalExpression::from_factors(a.table(), 1, Monomial(), top, bottom);
}

RationalExpression RationalExpression::inverse() const
{
    return RationalExpression::constant(table(), 1) / *this;
}

RationalExpression RationalExpression::pow(int k) const
{
    if (k < 0) return inverse().pow(-k);
    if (is_zero()) return k == 0 ? constant(table(), 1) : *this;
    std::vector<Factor> top{{num_, k}};
    std::vector<Factor> bottom = den_;
    for (auto& f : bottom) f.mult *= k;
    return from_factors(table(), 1, Monomial(), top, bottom);
}

bool equals(const RationalExpression& a, const RationalExpression& b)
{
    require_same_table(a.table(), b.table(), "rational expression compare");
    if (a.den_.size() == b.den_.size()) {
        bool same = true;
        for (std::size_t i = 0; i < a.den_.size() && same; ++i)
            same = a.den_[i].mult == b.den_[i].mult && a.den_[i].poly == b.den_[i].poly;
        if (same) return a.num_ == b.num_;
    }
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto den = lcd(a.den_, b.den_);
    return a.num_ * cofactor(a.table(), den, a.den_) == b.num_ * cofactor(a.table(), den, b.den_);
}

RationalExpression RationalExpression::reduced() const
{
    RationalExpression r(*this);
    for (auto& f : r.den_) {
        while (f.mult > 0) {
            auto q = r.num_.divide_exact(f.poly);
            if (!q) break;
            r.num_ = std::move(*q);
            --f.mult;
        }
    }
    std::erase_if(r.den_, [](const Factor& f) { return f.mult == 0; });
    return r;
}

std::optional<std::pair<Rational, Monomial>> RationalExpression::as_monomial_unit() const
{
    RationalExpression r = reduced();
    if (!r.den_.empty() || r.num_.size() != 1) return std::nullopt;
    return std::make_pair(r.num_.coeff(0), r.num_.monomial(0));
}

namespace {

struct CompiledBindings {
    std::vector<Rational> coeff;
    std::vector<Monomial> image;
    std::vector<std::string> text;  // for error messages
};

CompiledBindings compile(const VariableTable& src, const std::vector<Binding>& bindings, const TablePtr& target)
{
    CompiledBindings cb;
    const std::size_t nt = target->size();
    cb.coeff.assign(src.size(), Rational(1));
    cb.image.assign(src.size(), Monomial());
    cb.text.assign(src.size(), std::string());
    std::vector<bool> bound(src.size(), false);
    for (const auto& b : bindings) {
        std::size_t v = src.index(b.var);
        if (bound[v]) throw UsageError("variable '" + b.var + "' bound twice");
        if (b.image.size() != nt) throw UsageError("binding image for '" + b.var + "' does not match target table");
        bound[v] = true;
        cb.coeff[v] = b.coeff;
        cb.image[v] = b.image;
        std::string t = b.var + " -> " + b.coeff.to_string();
        for (std::size_t k = 0; k < nt; ++k)
            if (b.image[k] != 0) t += "*" + target->name(k) + "^" + std::to_string(b.image[k]);
        cb.text[v] = t;
    }
    for (std::size_t v = 0; v < src.size(); ++v) {
        if (bound[v]) continue;
        auto k = target->find(src.name(v));
        if (!k) throw UsageError("variable '" + src.name(v) + "' has no binding and is absent from the target table");
        Monomial m(nt);
        m[*k] = 1;
        cb.image[v] = std::move(m);
    }
    return cb;
}

Polynomial apply(const Polynomial& p, const CompiledBindings& cb, const TablePtr& target)
{
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(p.size());
    const std::size_t nt = target->size();
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto e = p.exponents(i);
        Rational c = p.coeff(i);
        Monomial m(nt);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!cb.coeff[v].is_one()) c *= rational_pow(cb.coeff[v], e[v]);
            for (std::size_t k = 0; k < nt; ++k) m[k] += cb.image[v][k] * e[v];
        }
        terms.emplace_back(std::move(m), std::move(c));
    }
    return Polynomial::from_terms(target, std::move(terms));
}

} // namespace

RationalExpression RationalExpression::substitute(const std::vector<Binding>& bindings, const TablePtr& target) const
{
    auto cb = compile(*table(), bindings, target);
    std::vector<Factor> top;
    try {
        top.push_back({apply(num_, cb, target), 1});
    } catch (const AlgebraError&) {
        throw AlgebraError("numerator has a pole under substitution");
    }
    std::vector<Factor> bottom;
    for (const auto& f : den_) {
        Polynomial s = apply(f.poly, cb, target);
        if (s.is_zero()) {
            std::string names;
            for (std::size_t v = 0; v < table()->size(); ++v) {
                if (f.poly.depends_on(v) && !cb.text[v].empty()) {
                    if (!names.empty()) names += ", ";
                    names += cb.text[v];
                }
            }
            throw AlgebraError("denominator vanishes under substitution {" + names + "}");
        }
        bottom.push_back({std::move(s), f.mult});
    }
    return from_factors(target, 1, Monomial(), top, bottom);
}

RationalExpression RationalExpression::reindexed(std::span<const std::size_t> map) const
{
    std::vector<Factor> top{{num_.reindexed(map), 1}};
    std::vector<Factor> bottom;
    for (const auto& f : den_) bottom.push_back({f.poly.reindexed(map), f.mult});
    return from_factors(table(), 1, Monomial(), top, bottom);
}

RationalExpression RationalExpression::permuted(const std::vector<std::size_t>& group, const Permutation& w) const
{
    if (w.size() != group.size()) throw UsageError("permutation size does not match variable group");
    std::vector<std::size_t> map(table()->size());
    for (std::size_t v = 0; v < map.size(); ++v) map[v] = v;
    for (std::size_t k = 0; k < group.size(); ++k) {
        if (group[k] >= map.size()) throw UsageError("variable group index out of range");
        map[group[k]] = group[w(k)];
    }
    return reindexed(map);
}

bool RationalExpression::depends_on(std::size_t var) const
{
    if (num_.depends_on(var)) return true;
    for (const auto& f : den_)
        if (f.poly.depends_on(var)) return true;
    return false;
}

std::optional<int> RationalExpression::q_valuation() const
{
    // denominator factors carry no monomial content, so their q^0 part is nonzero
    if (is_zero()) return std::nullopt;
    return num_.min_exponent(0);
}

Polynomial RationalExpression::q_series(int order) const
{
    if (order < 0) throw UsageError("q-series order must be nonnegative");
    if (is_zero()) return num_;
    int val = *q_valuation();
    if (val < 0) throw AlgebraError("pole at q = 0: q-valuation is " + std::to_string(val));
    Polynomial den = denominator();
    const int dmax = den.max_exponent(0);
    std::vector<Polynomial> dk;
    for (int i = 0; i <= std::min(order, dmax); ++i) dk.push_back(den.coefficient_of(0, i));
    const Polynomial& d0 = dk[0];
    std::vector<Polynomial> c;
    Polynomial result(table());
    Monomial qk(table()->size());
    for (int k = 0; k <= order; ++k) {
        Polynomial rhs = num_.coefficient_of(0, k);
        for (int i = 1; i <= std::min(k, dmax); ++i) rhs -= dk[i] * c[k - i];
        auto ck = rhs.divide_exact(d0);
        if (!ck) throw AlgebraError("q-series coefficient of q^" + std::to_string(k) + " is not a Laurent polynomial");
        qk[0] = k;
        result += ck->shifted(qk);
        c.push_back(std::move(*ck));
    }
    return result;
}

} // namespace jk
