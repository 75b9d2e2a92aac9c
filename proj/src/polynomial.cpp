#include "jk/polynomial.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "jk/errors.hpp"

namespace jk {

int compare_exponents(std::span<const int> a, std::span<const int> b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

PolynomialBuilder::PolynomialBuilder(TablePtr table) : p_(std::move(table)) {}

void PolynomialBuilder::reserve(std::size_t n)
{
    p_.exps_.reserve(n * p_.nvars_);
    p_.coeffs_.reserve(n);
}

void PolynomialBuilder::push(std::span<const int> exps, Rational c)
{
    p_.exps_.insert(p_.exps_.end(), exps.begin(), exps.end());
    p_.coeffs_.push_back(std::move(c));
}

Polynomial PolynomialBuilder::finish() && { return std::move(p_); }

Polynomial::Polynomial(TablePtr table) : table_(std::move(table)), nvars_(table_ ? table_->size() : 0) {}

Polynomial Polynomial::constant(TablePtr table, Rational c)
{
    Polynomial p(std::move(table));
    if (!c.is_zero()) {
        p.exps_.assign(p.nvars_, 0);
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

Polynomial Polynomial::term(TablePtr table, const Monomial& m, Rational c)
{
    Polynomial p(std::move(table));
    if (m.size() != p.nvars_) throw UsageError("monomial does not match table size");
    if (!c.is_zero()) {
        p.exps_ = m.exponents();
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

Polynomial Polynomial::variable(TablePtr table, std::string_view name, int power)
{
    Monomial m(table->size());
    m[table->index(name)] = power;
    return term(std::move(table), m, 1);
}

Polynomial Polynomial::from_terms(TablePtr table, std::vector<std::pair<Monomial, Rational>> terms)
{
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    PolynomialBuilder b(table);
    std::size_t nv = table->size();
    for (std::size_t i = 0; i < terms.size();) {
        if (terms[i].first.size() != nv) throw UsageError("monomial does not match table size");
        Rational c = terms[i].second;
        std::size_t j = i + 1;
        for (; j < terms.size() && terms[j].first == terms[i].first; ++j) c += terms[j].second;
        if (!c.is_zero()) b.push(terms[i].first.exponents(), std::move(c));
        i = j;
    }
    return std::move(b).finish();
}

bool Polynomial::is_constant() const
{
    if (coeffs_.empty()) return true;
    if (coeffs_.size() != 1) return false;
    for (int e : exps_)
        if (e != 0) return false;
    return true;
}

Rational Polynomial::constant_value() const
{
    if (!is_constant()) throw UsageError("polynomial is not constant");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Monomial Polynomial::monomial(std::size_t i) const
{
    auto e = exponents(i);
    return Monomial(std::vector<int>(e.begin(), e.end()));
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {

// Merge a and sign*b into a fresh polynomial.
Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract)
{
    PolynomialBuilder out(a.table());
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = -1;
        else if (j == b.size()) c = 1;
        else c = compare_exponents(a.exponents(i), b.exponents(j));
        if (c > 0) {
            out.push(a.exponents(i), a.coeff(i));
            ++i;
        } else if (c < 0) {
            out.push(b.exponents(j), subtract ? -b.coeff(j) : b.coeff(j));
            ++j;
        } else {
            Rational s = subtract ? a.coeff(i) - b.coeff(j) : a.coeff(i) + b.coeff(j);
            if (!s.is_zero()) out.push(a.exponents(i), std::move(s));
            ++i;
            ++j;
        }
    }
    return std::move(out).finish();
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    require_same_table(table_, rhs.table_, "polynomial add");
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    return *this = merge(*this, rhs, false);
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    require_same_table(table_, rhs.table_, "polynomial subtract");
    if (rhs.is_zero()) return *this;
    return *this = merge(*this, rhs, true);
}

Polynomial operator*(const Polynomial& x, const Polynomial& y)
{
    require_same_table(x.table_, y.table_, "polynomial multiply");
    if (x.is_zero() || y.is_zero()) return Polynomial(x.table_);
    if (x.size() == 1) return y.shifted(x.monomial(0)).scaled(x.coeff(0));
    if (y.size() == 1) return x.shifted(y.monomial(0)).scaled(y.coeff(0));

    // Heap multiplication: one stream per term of the shorter factor, each
    // walking the longer factor in order; streams are merged by a max-heap.
    const Polynomial& a = x.size() >= y.size() ? x : y;
    const Polynomial& b = x.size() >= y.size() ? y : x;
    const std::size_t nv = a.nvars_;
    const std::size_t nb = b.size();

    std::vector<std::size_t> pos(nb, 0);
    std::vector<int> keys(nb * nv);
    auto key = [&](std::size_t j) { return std::span<const int>(keys.data() + j * nv, nv); };
    auto load = [&](std::size_t j) {
        auto ae = a.exponents(pos[j]);
        auto be = b.exponents(j);
        int* k = keys.data() + j * nv;
        for (std::size_t v = 0; v < nv; ++v) k[v] = ae[v] + be[v];
    };
    auto less = [&](std::size_t l, std::size_t r) { return compare_exponents(key(l), key(r)) < 0; };

    std::vector<std::size_t> heap;
    heap.reserve(nb);
    for (std::size_t j = 0; j < nb; ++j) {
        load(j);
        heap.push_back(j);
    }
    std::make_heap(heap.begin(), heap.end(), less);

    PolynomialBuilder out(a.table_);
    out.reserve(a.size() + b.size());
    std::vector<int> current(nv);
    std::vector<std::size_t> popped;
    while (!heap.empty()) {
        std::size_t top = heap.front();
        auto tk = key(top);
        std::copy(tk.begin(), tk.end(), current.begin());
        Rational acc;
        popped.clear();
        while (!heap.empty() && compare_exponents(key(heap.front()), current) == 0) {
            std::size_t j = heap.front();
            std::pop_heap(heap.begin(), heap.end(), less);
            heap.pop_back();
            acc += a.coeff(pos[j]) * b.coeff(j);
            popped.push_back(j);
        }
        if (!acc.is_zero()) out.push(current, std::move(acc));
        for (std::size_t j : popped) {
            if (++pos[j] < a.size()) {
                load(j);
                heap.push_back(j);
                std::push_heap(heap.begin(), heap.end(), less);
            }
        }
    }
    return std::move(out).finish();
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    if (c.is_zero()) return Polynomial(table_);
    if (c.is_one()) return *this;
    Polynomial r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Polynomial Polynomial::shifted(const Monomial& m) const
{
    if (m.size() != nvars_) throw UsageError("monomial does not match table size");
    Polynomial r(*this);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        for (std::size_t v = 0; v < nvars_; ++v) r.exps_[i * nvars_ + v] += m[v];
    return r;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial result = constant(table_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const
{
    require_same_table(table_, divisor.table_, "polynomial divide");
    if (divisor.is_zero()) throw AlgebraError("polynomial division by zero");
    if (is_zero()) return Polynomial(table_);
    if (divisor.size() == 1) {
        return shifted(divisor.monomial(0).inverse()).scaled(divisor.coeff(0).inverse());
    }

    const std::size_t nv = nvars_;
    // Any exact quotient has its exponents inside this box, variable by variable.
    std::vector<int> lo(nv), hi(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        lo[v] = min_exponent(v) - divisor.min_exponent(v);
        hi[v] = max_exponent(v) - divisor.max_exponent(v);
        if (lo[v] > hi[v]) return std::nullopt;
    }
    if (size() < divisor.size()) return std::nullopt;

    const Rational lead_inv = divisor.coeff(0).inverse();
    auto lead = divisor.exponents(0);
    const std::size_t nt = divisor.size();

    // Stream t (t >= 1) walks the quotient computed so far, producing
    // quot[pos[t]] * divisor[t]; waiting streams have caught up with quot.
    PolynomialBuilder quot(table_);
    std::vector<std::size_t> pos(nt, 0);
    std::vector<int> keys(nt * nv);
    std::vector<std::size_t> waiting;
    for (std::size_t t = 1; t < nt; ++t) waiting.push_back(t);
    auto key = [&](std::size_t t) { return std::span<const int>(keys.data() + t * nv, nv); };
    auto less = [&](std::size_t l, std::size_t r) { return compare_exponents(key(l), key(r)) < 0; };
    std::vector<std::size_t> heap;

    // Quotient terms, read back while streams advance.
    std::vector<int> qexps;
    std::vector<Rational> qcoeffs;
    auto load = [&](std::size_t t) {
        int* k = keys.data() + t * nv;
        auto de = divisor.exponents(t);
        for (std::size_t v = 0; v < nv; ++v) k[v] = qexps[pos[t] * nv + v] + de[v];
    };

    std::size_t ai = 0;
    std::vector<int> current(nv);
    std::vector<int> qm(nv);
    while (ai < size() || !heap.empty()) {
        // The largest outstanding monomial.
        if (heap.empty()) {
            auto e = exponents(ai);
            std::copy(e.begin(), e.end(), current.begin());
        } else if (ai == size()) {
            auto e = key(heap.front());
            std::copy(e.begin(), e.end(), current.begin());
        } else {
            auto e1 = exponents(ai);
            auto e2 = key(heap.front());
            auto& e = compare_exponents(e1, e2) >= 0 ? e1 : e2;
            std::copy(e.begin(), e.end(), current.begin());
        }
        Rational c;
        if (ai < size() && compare_exponents(exponents(ai), current) == 0) {
            c += coeff(ai);
            ++ai;
        }
        while (!heap.empty() && compare_exponents(key(heap.front()), current) == 0) {
            std::size_t t = heap.front();
            std::pop_heap(heap.begin(), heap.end(), less);
            heap.pop_back();
            c -= qcoeffs[pos[t]] * divisor.coeff(t);
            if (++pos[t] < qcoeffs.size()) {
                load(t);
                heap.push_back(t);
                std::push_heap(heap.begin(), heap.end(), less);
            } else {
                waiting.push_back(t);
            }
        }
        if (c.is_zero()) continue;
        for (std::size_t v = 0; v < nv; ++v) {
            qm[v] = current[v] - lead[v];
            if (qm[v] < lo[v] || qm[v] > hi[v]) return std::nullopt;
        }
        qexps.insert(qexps.end(), qm.begin(), qm.end());
        qcoeffs.push_back(c * lead_inv);
        for (std::size_t t : waiting) {
            pos[t] = qcoeffs.size() - 1;
            load(t);
            heap.push_back(t);
            std::push_heap(heap.begin(), heap.end(), less);
        }
        waiting.clear();
    }
    quot.reserve(qcoeffs.size());
    for (std::size_t i = 0; i < qcoeffs.size(); ++i)
        quot.push(std::span<const int>(qexps.data() + i * nv, nv), std::move(qcoeffs[i]));
    return std::move(quot).finish();
}

int Polynomial::min_exponent(std::size_t var) const
{
    if (is_zero()) return 0;
    int m = INT_MAX;
    for (std::size_t i = 0; i < size(); ++i) m = std::min(m, exps_[i * nvars_ + var]);
    return m;
}

int Polynomial::max_exponent(std::size_t var) const
{
    if (is_zero()) return 0;
    int m = INT_MIN;
    for (std::size_t i = 0; i < size(); ++i) m = std::max(m, exps_[i * nvars_ + var]);
    return m;
}

Monomial Polynomial::min_monomial() const
{
    Monomial m(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) m[v] = min_exponent(v);
    return m;
}

bool Polynomial::depends_on(std::size_t var) const
{
    for (std::size_t i = 0; i < size(); ++i)
        if (exps_[i * nvars_ + var] != 0) return true;
    return false;
}

Polynomial Polynomial::coefficient_of(std::size_t var, int k) const
{
    PolynomialBuilder out(table_);
    std::vector<int> e(nvars_);
    for (std::size_t i = 0; i < size(); ++i) {
        if (exps_[i * nvars_ + var] != k) continue;
        auto s = exponents(i);
        std::copy(s.begin(), s.end(), e.begin());
        e[var] = 0;
        out.push(e, coeffs_[i]);
    }
    // Zeroing one coordinate keeps the relative order of the selected terms.
    return std::move(out).finish();
}

Polynomial Polynomial::reindexed(std::span<const std::size_t> map) const
{
    if (map.size() != nvars_) throw UsageError("reindex map does not match table size");
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        Monomial m(nvars_);
        for (std::size_t v = 0; v < nvars_; ++v) m[map[v]] = exps_[i * nvars_ + v];
        terms.emplace_back(std::move(m), coeffs_[i]);
    }
    return from_terms(table_, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (!same_table(a.table_, b.table_)) return false;
    return a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
}

int compare(const Polynomial& a, const Polynomial& b)
{
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = compare_exponents(a.exponents(i), b.exponents(i));
        if (c != 0) return c;
        auto o = a.coeff(i) <=> b.coeff(i);
        if (o != 0) return o < 0 ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

} // namespace jk
