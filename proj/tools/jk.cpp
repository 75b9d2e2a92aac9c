// jk: exact K-theoretic J-function evaluator and identity checker.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jk/correspondence.hpp"
#include "jk/errors.hpp"
#include "jk/serialize.hpp"
#include "jk/term_sum.hpp"

using namespace jk;

namespace {

enum Exit { ok = 0, verify_failed = 1, usage = 2, invariant = 3 };

struct RunConfig {
    int r = 0, n = 0, d = -1, max_d = -1, cap = -1, order = 0;
    std::vector<int> dims, degree;
    std::vector<std::string> spaces;
    std::string space, gamma = "1", form = "canonical", mode = "unit-tolerant", format = "text", output;
    std::string reading = "ratio", conjecture;
    bool timing = false;
};

std::vector<int> parse_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad integer list '" + s + "'");
        }
    }
    return out;
}

// gr:r,n  proj:n  flag:m1,m2/n
SpaceDescriptor parse_space(const std::string& s)
{
    auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("space must look like gr:r,n, proj:n or flag:m1,m2/n");
    std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
    if (kind == "gr") {
        auto v = parse_list(rest);
        if (v.size() != 2) throw UsageError("gr:r,n takes two integers");
        return SpaceDescriptor::grassmannian(v[0], v[1]);
    }
    if (kind == "proj") {
        auto v = parse_list(rest);
        if (v.size() != 1) throw UsageError("proj:n takes one integer");
        return SpaceDescriptor::projective(v[0]);
    }
    if (kind == "flag") {
        auto slash = rest.find('/');
        if (slash == std::string::npos) throw UsageError("flag:m1,m2/n needs /n");
        auto n = parse_list(rest.substr(slash + 1));
        if (n.size() != 1) throw UsageError("flag:m1,m2/n needs one n");
        return SpaceDescriptor::flag(parse_list(rest.substr(0, slash)), n[0]);
    }
    throw UsageError("unknown space kind '" + kind + "'");
}

void require(bool cond, const std::string& what)
{
    if (!cond) throw UsageError(what);
}

std::vector<int> degree_range(const RunConfig& c)
{
    require(c.d >= 0 || c.max_d >= 0, "give --d or --max-d");
    if (c.d >= 0) return {c.d};
    std::vector<int> out;
    for (int k = 0; k <= c.max_d; ++k) out.push_back(k);
    return out;
}

std::string render_coefficient(const JCoefficient& j, const std::string& format)
{
    if (format == "json") return to_json(j).dump(2) + "\n";
    std::string s = j.conjectural ? "CONJECTURAL\n" : "";
    return s + to_text(j) + "\n";
}

std::string render_series(const JSeries& s, const std::string& format)
{
    if (format == "json") return to_json(s).dump(2) + "\n";
    std::string out = !s.coefficients.empty() && s.coefficients.front().conjectural ? "CONJECTURAL\n" : "";
    for (const auto& c : s.coefficients) {
        std::string d;
        for (std::size_t i = 0; i < c.degree.size(); ++i) d += (i ? "," : "") + std::to_string(c.degree[i]);
        out += "d=(" + d + "): " + to_text(c.value) + "\n";
    }
    return out;
}

// One report from several, terms prefixed by their own parameters.
IdentityReport merge(const std::string& name, nlohmann::json params, CheckMode mode, const std::vector<IdentityReport>& parts)
{
    IdentityReport out;
    out.identity = name;
    out.params = std::move(params);
    out.mode = mode;
    out.extra = nlohmann::json::array();
    for (const auto& p : parts) {
        std::string prefix;
        for (auto it = p.params.begin(); it != p.params.end(); ++it) prefix += it.key() + "=" + it.value().dump() + " ";
        for (auto t : p.terms) {
            t.composition = prefix + t.composition;
            out.add(std::move(t));
        }
        out.pass = out.pass && p.pass;
        out.millis += p.millis;
        if (!p.extra.empty()) out.extra.push_back({{"params", p.params}, {"extra", p.extra}});
    }
    if (out.extra.empty()) out.extra = nlohmann::json::object();
    return out;
}

std::string render_report(const IdentityReport& r, const RunConfig& c)
{
    if (c.format == "json") return r.to_json(c.timing).dump(2) + "\n";
    std::string out = r.identity + " [" + mode_name(r.mode) + "] " + r.params.dump() + "\n";
    for (const auto& t : r.terms) out += "  " + t.composition + ": " + t.verdict + (t.residual.empty() ? "" : " " + t.residual) + "\n";
    if (!r.extra.empty()) out += "  extra: " + r.extra.dump() + "\n";
    out += "verdict: " + std::string(r.pass ? "pass" : "fail") + "\n";
    if (c.timing) out += "millis: " + std::to_string(r.millis) + "\n";
    return out;
}

CheckMode parse_mode(const std::string& m)
{
    if (m == "strict") return CheckMode::strict;
    if (m == "unit-tolerant" || m == "unit_tolerant") return CheckMode::unit_tolerant;
    throw UsageError("mode must be strict or unit-tolerant");
}

IdentityReport run_verify(const std::string& which, const RunConfig& c)
{
    std::vector<IdentityReport> parts;
    if (which == "abelian-nonabelian") {
        require(c.r > 0 && c.n > 0, "--r and --n are required");
        auto mode = parse_mode(c.mode);
        for (int d : degree_range(c)) parts.push_back(abelian_nonabelian_check(c.r, c.n, d, mode));
        return merge(which, {{"r", c.r}, {"n", c.n}, {"degrees", degree_range(c)}}, mode, parts);
    }
    if (which == "multiplicativity") {
        require(c.r > 0 && c.n > 0 && c.cap >= 0, "--r, --n and --cap are required");
        return multiplicativity_check(c.n, c.r, c.cap);
    }
    if (which == "reduction") {
        require(c.r > 0 && c.n > 0, "--r and --n are required");
        for (int d : degree_range(c)) parts.push_back(reduction_check(c.r, c.n, d));
        return merge(which, {{"r", c.r}, {"n", c.n}, {"degrees", degree_range(c)}}, CheckMode::strict, parts);
    }
    if (which == "route") {
        require(c.r > 0 && c.n > 0, "--r and --n are required");
        for (int d : degree_range(c)) parts.push_back(route_check(c.r, c.n, d));
        return merge(which, {{"r", c.r}, {"n", c.n}, {"degrees", degree_range(c)}}, CheckMode::strict, parts);
    }
    if (which == "weyl") {
        require(c.n > 0, "--n is required");
        if (!c.dims.empty()) {
            require(c.degree.size() == c.dims.size(), "--d needs one entry per level");
            return flag_weyl_check(c.dims, c.n, c.degree);
        }
        require(c.r > 0, "--r or --dims is required");
        for (int d : degree_range(c)) parts.push_back(weyl_check(c.r, c.n, d));
        return merge(which, {{"r", c.r}, {"n", c.n}, {"degrees", degree_range(c)}}, CheckMode::strict, parts);
    }
    if (which == "qregular") {
        std::vector<JCoefficient> coeffs;
        std::string label;
        if (!c.conjecture.empty()) {
            require(c.n > 0, "--n is required");
            auto reading = c.reading == "skip-diagonal" ? CrossReading::skip_diagonal : CrossReading::ratio;
            for (int d : degree_range(c))
                coeffs.push_back(c.conjecture == "c" ? lagrangian_flag_j_conjecture(c.n, d, reading)
                                                     : bd_flag_j_conjecture(c.n, d, reading));
            label = "conjecture-" + c.conjecture;
        } else if (!c.dims.empty()) {
            require(c.n > 0 && c.max_d >= 0, "--n and --max-d are required");
            for (const auto& d : degrees_below(MultiDegree(c.dims.size(), c.max_d)))
                coeffs.push_back(flag_j(c.dims, c.n, d, FlagForm::canonical));
            label = "flag";
        } else {
            require(c.r > 0 && c.n > 0, "--r and --n are required");
            for (int d : degree_range(c)) coeffs.push_back(grassmannian_j(c.r, c.n, d));
            label = "grassmannian";
        }
        return qregular_check(coeffs, label);
    }
    if (which == "flag-forms") {
        require(!c.dims.empty() && c.n > 0 && c.degree.size() == c.dims.size(), "--dims, --n and --d are required");
        return flag_form_comparison(c.dims, c.n, c.degree);
    }
    throw UsageError("unknown identity '" + which + "'");
}

RationalExpression parse_gamma(const std::string& g, const SpaceDescriptor& space)
{
    TablePtr t = space.table();
    if (g == "1") return RationalExpression::constant(t, 1);
    if (g == "detSdual") {
        Monomial m(t->size());
        for (auto v : space.level_vars(1)) m[v] = -1;
        return RationalExpression(Polynomial::term(t, m));
    }
    return parse_expression(g, t);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact K-theoretic J-functions of Grassmannians and flag varieties"};
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App* s) {
        s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        s->add_option("-o,--output", c.output, "write to this file instead of stdout");
    };
    auto* gr = app.add_subcommand("grassmannian", "J-coefficient of Gr(r,n)");
    gr->add_option("--r", c.r)->required();
    gr->add_option("--n", c.n)->required();
    gr->add_option("--d", c.d);
    gr->add_option("--max-d", c.max_d);
    gr->add_option("--form", c.form, "closed or structured")->check(CLI::IsMember({"closed", "structured", "canonical"}));
    add_common(gr);

    auto* pr = app.add_subcommand("projective", "J-coefficient of P^{n-1}");
    pr->add_option("--n", c.n)->required();
    pr->add_option("--d", c.d);
    pr->add_option("--max-d", c.max_d);
    add_common(pr);

    std::string dims_s, d_s;
    auto* fl = app.add_subcommand("flag", "J-coefficient of a type A flag variety");
    fl->add_option("--dims", dims_s)->required();
    fl->add_option("--n", c.n)->required();
    fl->add_option("--d", d_s);
    fl->add_option("--max-d", c.max_d, "all multidegrees with entries <= max-d");
    fl->add_option("--form", c.form)->check(CLI::IsMember({"canonical", "theorem_ratio", "theorem-ratio"}));
    add_common(fl);

    auto* pd = app.add_subcommand("product", "J-coefficient of a product");
    pd->add_option("--space", c.spaces, "component, e.g. gr:1,3 (repeat)")->required();
    pd->add_option("--d", d_s, "one degree per level")->required();
    add_common(pd);

    auto* cc = app.add_subcommand("conjecture-c", "conjectural J-coefficient, Lagrangian complete flags");
    auto* cb = app.add_subcommand("conjecture-bd", "conjectural J-coefficient, complete flags of types B and D");
    for (auto* s : {cc, cb}) {
        s->add_option("--n", c.n)->required();
        s->add_option("--d", c.d);
        s->add_option("--max-d", c.max_d);
        s->add_option("--reading", c.reading, "cross factor: ratio or skip-diagonal")
            ->check(CLI::IsMember({"ratio", "skip-diagonal"}));
        add_common(s);
    }

    auto* ch = app.add_subcommand("chi", "q-series of chi(J_d * gamma)");
    ch->add_option("--space", c.space, "gr:r,n or proj:n")->required();
    ch->add_option("--d", c.d)->required();
    ch->add_option("--gamma", c.gamma, "1, detSdual, or an expression in L[1,j]");
    ch->add_option("--order", c.order)->required();
    add_common(ch);

    std::string identity;
    auto* vf = app.add_subcommand("verify", "check an identity");
    vf->add_option("identity", identity)
        ->required()
        ->check(CLI::IsMember({"abelian-nonabelian", "multiplicativity", "reduction", "route", "weyl", "qregular", "flag-forms"}));
    vf->add_option("--r", c.r);
    vf->add_option("--n", c.n);
    vf->add_option("--d", d_s);
    vf->add_option("--max-d", c.max_d);
    vf->add_option("--cap", c.cap);
    vf->add_option("--dims", dims_s);
    vf->add_option("--mode", c.mode)->check(CLI::IsMember({"strict", "unit-tolerant"}));
    vf->add_option("--conjecture", c.conjecture)->check(CLI::IsMember({"c", "bd"}));
    vf->add_option("--reading", c.reading)->check(CLI::IsMember({"ratio", "skip-diagonal"}));
    vf->add_flag("--timing", c.timing, "include wall time");
    add_common(vf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    std::string out;
    int status = ok;
    try {
        apply_thread_limit_from_env();
        if (!dims_s.empty()) c.dims = parse_list(dims_s);
        if (!d_s.empty()) c.degree = parse_list(d_s);
        if (c.degree.size() == 1 && c.d < 0) c.d = c.degree[0];

        if (gr->parsed()) {
            if (c.form == "structured") {
                std::vector<JCoefficient> cs;
                for (int d : degree_range(c)) cs.push_back(grassmannian_j_structured(c.r, c.n, d));
                out = cs.size() == 1 ? render_coefficient(cs[0], c.format)
                                     : render_series({cs[0].space, {c.max_d}, cs}, c.format);
            } else if (c.d >= 0) {
                out = render_coefficient(grassmannian_j(c.r, c.n, c.d), c.format);
            } else {
                require(c.max_d >= 0, "give --d or --max-d");
                out = render_series(compute_series(SpaceDescriptor::grassmannian(c.r, c.n), {c.max_d}), c.format);
            }
        } else if (pr->parsed()) {
            if (c.d >= 0) out = render_coefficient(projective_j(c.n, c.d), c.format);
            else {
                require(c.max_d >= 0, "give --d or --max-d");
                out = render_series(compute_series(SpaceDescriptor::projective(c.n), {c.max_d}), c.format);
            }
        } else if (fl->parsed()) {
            FlagForm form = c.form == "canonical" ? FlagForm::canonical : FlagForm::theorem_ratio;
            if (!c.degree.empty()) {
                out = render_coefficient(flag_j(c.dims, c.n, c.degree, form), c.format);
            } else {
                require(c.max_d >= 0, "give --d or --max-d");
                JSeries s{SpaceDescriptor::flag(c.dims, c.n), MultiDegree(c.dims.size(), c.max_d), {}};
                for (const auto& d : degrees_below(s.cap)) s.coefficients.push_back(flag_j(c.dims, c.n, d, form));
                out = render_series(s, c.format);
            }
        } else if (pd->parsed()) {
            std::vector<SpaceDescriptor> parts;
            for (const auto& s : c.spaces) parts.push_back(parse_space(s));
            out = render_coefficient(compute_coefficient(SpaceDescriptor::product(parts), c.degree), c.format);
        } else if (cc->parsed() || cb->parsed()) {
            auto reading = c.reading == "skip-diagonal" ? CrossReading::skip_diagonal : CrossReading::ratio;
            std::vector<JCoefficient> cs;
            for (int d : degree_range(c))
                cs.push_back(cc->parsed() ? lagrangian_flag_j_conjecture(c.n, d, reading) : bd_flag_j_conjecture(c.n, d, reading));
            out = cs.size() == 1 ? render_coefficient(cs[0], c.format)
                                 : render_series({cs[0].space, {c.max_d}, cs}, c.format);
        } else if (ch->parsed()) {
            auto space = parse_space(c.space);
            require(c.order >= 0, "--order must be nonnegative");
            Polynomial s = descendant_series(space, c.d, parse_gamma(c.gamma, space), c.order);
            out = c.format == "json" ? to_json(s).dump(2) + "\n" : to_text(s) + "\n";
        } else if (vf->parsed()) {
            IdentityReport r = run_verify(identity, c);
            out = render_report(r, c);
            status = r.pass ? ok : verify_failed;
        }
    } catch (const UsageError& e) {
        std::cerr << "jk: " << e.what() << "\n";
        return usage;
    } catch (const InvariantViolation& e) {
        std::cerr << "jk: invariant violation: " << e.what() << "\n";
        return invariant;
    } catch (const AlgebraError& e) {
        std::cerr << "jk: " << e.what() << "\n";
        return invariant;
    } catch (const std::exception& e) {
        std::cerr << "jk: internal error: " << e.what() << "\n";
        return invariant;
    }

    if (c.output.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(c.output, std::ios::binary);
        if (!f) {
            std::cerr << "jk: cannot write " << c.output << "\n";
            return usage;
        }
        f << out;
    }
    return status;
}
