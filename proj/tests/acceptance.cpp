// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jk/correspondence.hpp"
#include "jk/errors.hpp"
#include "jk/serialize.hpp"
#include "jk/term_sum.hpp"

using namespace jk;

namespace {

// exact comparisons everywhere; only wall time has a bound
constexpr double route_seconds = 60.0;
constexpr double reduction_seconds = 60.0;
constexpr double abelian_seconds = 300.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why)
    {
        pass = false;
        if (notes.size() < 6) notes.push_back(why);
    }
};

std::vector<JCoefficient> corpus;

RationalExpression one(const TablePtr& t) { return RationalExpression::constant(t, 1); }

mpz_class binom(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string tuple_text(std::initializer_list<int> v)
{
    std::string s = "(";
    for (int x : v) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + ")";
}

Outcome route()
{
    Outcome o;
    auto t0 = Clock::now();
    for (auto [r, n, d] : std::vector<std::array<int, 3>>{{2, 3, 1}, {2, 3, 2}, {2, 4, 1}, {2, 4, 2}, {3, 4, 1}}) {
        auto closed = grassmannian_j(r, n, d);
        corpus.push_back(closed);
        JCoefficient structured;
        try {
            structured = grassmannian_j_structured(r, n, d);
        } catch (const std::exception& e) {
            o.fail(tuple_text({r, n, d}) + " structured route threw: " + e.what());
            continue;
        }
        corpus.push_back(structured);
        if (!equals(closed.value, structured.value)) {
            std::string vc = closed.value.q_valuation() ? std::to_string(*closed.value.q_valuation()) : "none";
            std::string vs = structured.value.q_valuation() ? std::to_string(*structured.value.q_valuation()) : "none";
            o.fail(tuple_text({r, n, d}) + " closed != structured (q-valuations " + vc + " vs " + vs + ")");
        }
    }
    double s = seconds_since(t0);
    if (s >= route_seconds) o.fail("runtime " + std::to_string(s) + " s");
    return o;
}

Outcome reduction()
{
    Outcome o;
    auto t0 = Clock::now();
    for (int r = 1; r <= 3; ++r)
        for (int n = r + 1; n <= 4; ++n)
            for (int d = 0; d <= 2; ++d) {
                auto g = grassmannian_j(r, n, d);
                auto f = flag_j({r}, n, {d}, FlagForm::canonical);
                corpus.push_back(f);
                if (!equals(f.value, g.value.substitute({}, f.value.table()))) o.fail(tuple_text({r, n, d}) + " flag != grassmannian");
            }
    double s = seconds_since(t0);
    if (s >= reduction_seconds) o.fail("runtime " + std::to_string(s) + " s");
    return o;
}

Outcome rank_one()
{
    Outcome o;
    for (int n = 2; n <= 5; ++n)
        for (int d = 0; d <= 4; ++d) {
            auto g = grassmannian_j(1, n, d);
            corpus.push_back(g);
            auto t = g.value.table();
            RationalExpression expect = one(t);
            for (int l = 1; l <= d; ++l)
                expect /= parse_expression("1 + -L[1,1]^-1*q^" + std::to_string(l), t).pow(n);
            if (!equals(g.value, expect)) o.fail(tuple_text({1, n, d}) + " differs from the product formula");
        }
    return o;
}

Outcome abelian()
{
    Outcome o;
    auto t0 = Clock::now();
    int strict_pass = 0, strict_total = 0;
    for (int r = 2; r <= 3; ++r)
        for (int n = r + 1; n <= 4; ++n)
            for (int d = 0; d <= 3; ++d) {
                auto rep = abelian_nonabelian_check(r, n, d, CheckMode::unit_tolerant);
                corpus.push_back(grassmannian_j(r, n, d));
                if (!rep.pass) o.fail(tuple_text({r, n, d}) + " unit-tolerant report fails");
                auto comps = compositions(d, r);
                auto t = SpaceDescriptor::grassmannian(r, n).table();
                std::optional<Rational> sign;
                for (std::size_t i = 0; i < comps.size(); ++i) {
                    const auto& term = rep.terms.at(i);
                    if (term.composition != composition_text(comps[i])) o.fail("term order differs from composition order");
                    if (term.residual.empty()) {
                        o.fail(tuple_text({r, n, d}) + " " + term.composition + " has no unit residual");
                        continue;
                    }
                    Polynomial unit = parse_polynomial(term.residual, t);
                    int e = 0;
                    for (int j = 1; j <= r; ++j) e += (r - j) * comps[i][static_cast<std::size_t>(j - 1)];
                    Monomial qe(t->size());
                    qe[0] = e;
                    if (!unit.is_monomial() || unit.monomial(0) != qe) {
                        o.fail(tuple_text({r, n, d}) + " " + term.composition + " residual " + term.residual + " is not q^" + std::to_string(e));
                        continue;
                    }
                    if (!sign) sign = unit.coeff(0);
                    if (unit.coeff(0) != *sign) o.fail(tuple_text({r, n, d}) + " residual sign varies across compositions");
                }
                auto strict = abelian_nonabelian_check(r, n, d, CheckMode::strict);
                ++strict_total;
                strict_pass += strict.pass ? 1 : 0;
            }
    double s = seconds_since(t0);
    if (s >= abelian_seconds) o.fail("runtime " + std::to_string(s) + " s");
    o.notes.push_back("strict mode passes " + std::to_string(strict_pass) + "/" + std::to_string(strict_total) + " (recorded)");
    return o;
}

Outcome multiplicativity()
{
    Outcome o;
    for (int n = 2; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            for (int cap = 0; cap <= 2; ++cap) {
                auto rep = multiplicativity_check(n, r, cap);
                if (!rep.pass) o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " cap=" + std::to_string(cap));
            }
    // and directly: each product coefficient against the projective factors
    auto p = SpaceDescriptor::projective(3);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            auto prod = product_j({p, p}, {{a}, {b}});
            corpus.push_back(prod);
            auto t = prod.value.table();
            RationalExpression expect = one(t);
            for (int l = 1; l <= a; ++l) expect /= parse_expression("1 + -L[1,1]^-1*q^" + std::to_string(l), t).pow(3);
            for (int l = 1; l <= b; ++l) expect /= parse_expression("1 + -L[2,1]^-1*q^" + std::to_string(l), t).pow(3);
            if (!equals(prod.value, expect)) o.fail("(P^2)^2 d=" + tuple_text({a, b}));
        }
    return o;
}

Outcome localization()
{
    Outcome o;
    auto qt = q_table();
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= std::min(3, n); ++r) {
            auto gr = SpaceDescriptor::grassmannian(r, n);
            if (!equals(euler_characteristic({gr, one(gr.table())}), one(qt))) o.fail("chi(O) on Gr" + tuple_text({r, n}));
        }
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k) {
            auto p = SpaceDescriptor::projective(n);
            Monomial m(p.table()->size());
            m[1] = -k;
            auto chi = euler_characteristic({p, Polynomial::term(p.table(), m)});
            if (!equals(chi, RationalExpression::constant(qt, Rational(mpq_class(binom(n - 1 + k, k))))))
                o.fail("chi(O(" + std::to_string(k) + ")) on P^" + std::to_string(n - 1));
        }
    auto g24 = SpaceDescriptor::grassmannian(2, 4);
    if (!equals(euler_characteristic({g24, parse_expression("L[1,1]^-1*L[1,2]^-1", g24.table())}), RationalExpression::constant(qt, 6)))
        o.fail("chi(det S^dual) on Gr(2,4)");
    for (int n = 3; n <= 5; ++n) {
        auto gr = SpaceDescriptor::grassmannian(2, n);
        auto fl = SpaceDescriptor::flag({1, 2}, n);
        auto t = gr.table();
        if (!equals(weyl_pushforward(KClassExpr{fl, one(t)}, gr).value, one(t))) o.fail("push(1) on Fl(1,2)");
        if (!equals(weyl_pushforward(KClassExpr{fl, parse_expression("L[1,1]^-1", t)}, gr).value,
                    parse_expression("L[1,1]^-1 + L[1,2]^-1", t)))
            o.fail("push(L1^dual) on Fl(1,2)");
    }
    return o;
}

std::string degree_text(const MultiDegree& d)
{
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

Outcome regularity()
{
    Outcome o;
    for (int n = 2; n <= 3; ++n)
        for (int d = 0; d <= 2; ++d) {
            corpus.push_back(lagrangian_flag_j_conjecture(n, d));
            corpus.push_back(bd_flag_j_conjecture(n, d));
        }
    int bad_val = 0, bad_zero = 0;
    for (const auto& c : corpus) {
        std::string label = c.space.kind_name() + degree_text(c.space.dims()) + "/" + std::to_string(c.space.n()) + " d=" + degree_text(c.degree);
        bool zero_degree = true;
        for (int x : c.degree) zero_degree = zero_degree && x == 0;
        if (zero_degree && !equals(c.value, one(c.value.table()))) {
            ++bad_zero;
            o.fail(label + " degree-0 value is not 1");
        }
        if (c.value.is_zero()) continue;
        int v = *c.value.q_valuation();
        if (v < 0) {
            ++bad_val;
            o.fail(label + " q-valuation " + std::to_string(v));
        }
    }
    // Weyl invariance of the Grassmannian coefficients in the corpus, and per block for flags
    int bad_weyl = 0;
    for (const auto& c : corpus) {
        if (c.space.kind() != SpaceDescriptor::Kind::grassmannian || c.space.dims()[0] < 2) continue;
        if (!is_symmetric(c.value, c.space.level_vars(1))) {
            ++bad_weyl;
            o.fail("Gr" + degree_text(c.space.dims()) + "/" + std::to_string(c.space.n()) + " d=" + degree_text(c.degree) + " not S_r-invariant");
        }
    }
    for (auto [dims, n, d] : std::vector<std::tuple<std::vector<int>, int, MultiDegree>>{{{1, 2}, 3, {1, 0}}, {{1, 2}, 3, {1, 1}}}) {
        auto rep = flag_weyl_check(dims, n, d);
        if (!rep.pass) {
            ++bad_weyl;
            o.fail("flag" + degree_text(dims) + "/" + std::to_string(n) + " d=" + degree_text(d) + " not block-invariant");
        }
    }
    o.notes.push_back(std::to_string(corpus.size()) + " coefficients; " + std::to_string(bad_val) + " with a pole at q=0, " +
                      std::to_string(bad_zero) + " bad degree-0 values, " + std::to_string(bad_weyl) + " invariance failures");
    return o;
}

struct Run {
    std::string out;
    int status = 0;
};

Run run(const std::string& cmd)
{
    Run r;
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p) throw std::runtime_error("cannot run " + cmd);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    r.status = pclose(p);
    return r;
}

Outcome determinism()
{
    Outcome o;
    const std::string jk = JK_BINARY;
    const std::vector<std::string> cmds{
        "grassmannian --r 2 --n 4 --d 1 --format json",
        "grassmannian --r 2 --n 3 --max-d 2",
        "grassmannian --r 2 --n 3 --d 1 --form structured",
        "projective --n 3 --d 0",
        "projective --n 3 --max-d 2 --format json",
        "flag --dims 1,2 --n 3 --d 1,0 --form canonical",
        "flag --dims 1,2 --n 3 --d 1,1 --form theorem_ratio --format json",
        "product --space proj:2 --space proj:3 --d 1,1",
        "conjecture-c --n 2 --d 1",
        "conjecture-bd --n 2 --d 1 --format json",
        "chi --space gr:1,2 --d 0 --order 3",
        "chi --space gr:1,2 --d 1 --order 2",
        "chi --space gr:2,4 --d 0 --gamma detSdual --order 0",
        "verify abelian-nonabelian --r 2 --n 3 --max-d 2 --mode unit-tolerant --format json",
        "verify abelian-nonabelian --r 2 --n 3 --d 1 --mode strict",
        "verify multiplicativity --n 2 --r 2 --cap 2 --format json",
        "verify reduction --r 2 --n 3 --max-d 2",
        "verify route --r 2 --n 3 --d 1 --format json",
        "verify weyl --r 2 --n 3 --d 1",
        "verify qregular --r 2 --n 3 --max-d 2 --format json",
        "verify flag-forms --dims 1,2 --n 3 --d 1,0",
    };
    for (const auto& c : cmds) {
        std::vector<std::string> outs;
        for (const char* threads : {"1", "4"}) {
            for (int k = 0; k < 2; ++k) {
                Run a = run("JK_THREADS=" + std::string(threads) + " " + jk + " " + c);
                outs.push_back(a.out + "\nstatus " + std::to_string(a.status));
            }
        }
        for (const auto& x : outs)
            if (x != outs[0]) {
                o.fail("jk " + c);
                break;
            }
        if (outs[0].find("status 512") != std::string::npos) o.fail("jk " + c + " was rejected as a usage error");
    }
    o.notes.push_back(std::to_string(cmds.size()) + " commands, 4 runs each (1 and 4 threads)");
    return o;
}

} // namespace

int main()
{
    apply_thread_limit_from_env();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 structured route equals closed form", route},
        {"2 single-level flag reduces to the Grassmannian", reduction},
        {"3 rank one equals the projective formula", rank_one},
        {"4 abelian/nonabelian correspondence up to q-units", abelian},
        {"5 multiplicativity for products of projective spaces", multiplicativity},
        {"6 localization oracles", localization},
        {"7 q-regularity, normalization and Weyl invariance", regularity},
        {"8 CLI output is byte-identical across runs", determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("threw: ") + e.what());
        }
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", seconds_since(t0));
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << secs << " s]\n";
        for (const auto& n : o.notes) std::cout << "      " << n << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
