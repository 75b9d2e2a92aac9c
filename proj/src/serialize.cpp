#include "jk/serialize.hpp"

#include <cctype>

#include "jk/errors.hpp"

namespace jk {

std::string to_text(const Monomial& m, const VariableTable& table)
{
    std::string out;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += table.name(v);
        if (m[v] != 1) out += '^' + std::to_string(m[v]);
    }
    return out;
}

std::string to_text(const Polynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out += " + ";
        std::string mono = to_text(p.monomial(i), *p.table());
        const Rational& c = p.coeff(i);
        if (mono.empty()) out += c.to_string();
        else if (c.is_one()) out += mono;
        else if (c == Rational(-1)) out += "-" + mono;
        else out += c.to_string() + "*" + mono;
    }
    return out;
}

std::string to_text(const RationalExpression& e)
{
    if (e.is_polynomial()) return to_text(e.numerator());
    std::string out = "(" + to_text(e.numerator()) + ") / ";
    bool first = true;
    for (const auto& f : e.factors()) {
        if (!first) out += '*';
        first = false;
        out += "(" + to_text(f.poly) + ")";
        if (f.mult != 1) out += "^" + std::to_string(f.mult);
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view s, const TablePtr& table) : s_(s), table_(table) {}

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    void skip_space()
    {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c)
    {
        skip_space();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw UsageError("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    long long integer()
    {
        skip_space();
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("expected integer");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    Rational rational()
    {
        skip_space();
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (!done() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        return Rational::parse(s_.substr(start, pos_ - start));
    }

    std::string name()
    {
        skip_space();
        std::size_t start = pos_;
        int depth = 0;
        while (!done()) {
            char c = s_[pos_];
            if (c == '[') ++depth;
            else if (c == ']') --depth;
            else if (depth == 0 && !std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
            ++pos_;
        }
        if (start == pos_) fail("expected variable name");
        return std::string(s_.substr(start, pos_ - start));
    }

    // factor ('*' factor)*, factor = name ['^' int]
    void monomial_into(Monomial& m)
    {
        do {
            std::size_t v = table_->index(name());
            int e = 1;
            if (accept('^')) e = static_cast<int>(integer());
            m[v] += e;
        } while (accept('*'));
    }

    std::pair<Monomial, Rational> term()
    {
        skip_space();
        Monomial m(table_->size());
        Rational c = 1;
        bool negative = false;
        if (peek() == '-') {
            std::size_t save = pos_;
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) negative = true;
            else pos_ = save;
        }
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') {
            c = rational();
            if (accept('*')) monomial_into(m);
        } else {
            monomial_into(m);
        }
        if (negative) c = -c;
        return {std::move(m), std::move(c)};
    }

    Polynomial polynomial()
    {
        std::vector<std::pair<Monomial, Rational>> terms;
        terms.push_back(term());
        while (accept('+')) terms.push_back(term());
        return Polynomial::from_terms(table_, std::move(terms));
    }

    std::size_t pos_ = 0;

private:
    std::string_view s_;
    const TablePtr& table_;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const TablePtr& table)
{
    Parser p(text, table);
    Polynomial r = p.polynomial();
    p.skip_space();
    if (!p.done()) p.fail("trailing input");
    return r;
}

RationalExpression parse_expression(std::string_view text, const TablePtr& table)
{
    Parser p(text, table);
    p.skip_space();
    if (p.peek() != '(') {
        Polynomial r = p.polynomial();
        p.skip_space();
        if (!p.done()) p.fail("trailing input");
        return RationalExpression(std::move(r));
    }
    p.expect('(');
    Polynomial num = p.polynomial();
    p.expect(')');
    std::vector<Factor> den;
    if (p.accept('/')) {
        do {
            p.expect('(');
            Polynomial f = p.polynomial();
            p.expect(')');
            int k = 1;
            if (p.accept('^')) k = static_cast<int>(p.integer());
            if (k <= 0) p.fail("factor multiplicity must be positive");
            den.push_back({std::move(f), k});
        } while (p.accept('*'));
    }
    p.skip_space();
    if (!p.done()) p.fail("trailing input");
    std::vector<Factor> top{{std::move(num), 1}};
    return RationalExpression::from_factors(table, 1, Monomial(), top, den);
}

namespace {

nlohmann::json terms_json(const Polynomial& p)
{
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto t = nlohmann::json::array();
        for (int e : p.exponents(i)) t.push_back(e);
        t.push_back(p.coeff(i).to_string());
        arr.push_back(std::move(t));
    }
    return arr;
}

} // namespace

nlohmann::json to_json(const Polynomial& p)
{
    nlohmann::json j;
    j["vars"] = p.table()->names();
    j["num"] = terms_json(p);
    j["den"] = terms_json(Polynomial::constant(p.table(), 1));
    return j;
}

nlohmann::json to_json(const RationalExpression& e)
{
    nlohmann::json j;
    j["vars"] = e.table()->names();
    j["num"] = terms_json(e.numerator());
    j["den"] = terms_json(e.denominator());
    return j;
}

TablePtr table_from_json(const nlohmann::json& j)
{
    if (!j.contains("vars") || !j["vars"].is_array()) throw UsageError("JSON expression lacks \"vars\"");
    return make_table(j["vars"].get<std::vector<std::string>>());
}

Polynomial polynomial_from_json(const nlohmann::json& j, const TablePtr& table)
{
    if (!j.is_array()) throw UsageError("JSON term list must be an array");
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != table->size() + 1) throw UsageError("JSON term has the wrong length");
        Monomial m(table->size());
        for (std::size_t v = 0; v < table->size(); ++v) m[v] = t[v].get<int>();
        terms.emplace_back(std::move(m), Rational::parse(t.back().get<std::string>()));
    }
    return Polynomial::from_terms(table, std::move(terms));
}

RationalExpression expression_from_json(const nlohmann::json& j)
{
    TablePtr table = table_from_json(j);
    Polynomial num = polynomial_from_json(j.at("num"), table);
    Polynomial den = polynomial_from_json(j.at("den"), table);
    if (den.is_zero()) throw UsageError("JSON expression has a zero denominator");
    std::vector<Factor> top{{std::move(num), 1}};
    std::vector<Factor> bottom{{std::move(den), 1}};
    return RationalExpression::from_factors(table, 1, Monomial(), top, bottom);
}

} // namespace jk
