#include "jk/jfunction.hpp"

#include <algorithm>

#include "jk/errors.hpp"
#include "jk/serialize.hpp"
#include "jk/term_sum.hpp"

namespace jk {

TermBuilder::TermBuilder(TablePtr table) : table_(std::move(table)), mono_(table_->size()) {}

TermBuilder& TermBuilder::scale(const Rational& c)
{
    scalar_ *= c;
    return *this;
}

TermBuilder& TermBuilder::times(const Monomial& m)
{
    mono_ *= m;
    return *this;
}

namespace {
Polynomial one_minus(const TablePtr& t, const Monomial& m)
{
    return Polynomial::constant(t, 1) - Polynomial::term(t, m);
}
} // namespace

TermBuilder& TermBuilder::times_one_minus(const Monomial& m, int mult)
{
    if (mult > 0) num_.push_back({one_minus(table_, m), mult});
    return *this;
}

TermBuilder& TermBuilder::over_one_minus(const Monomial& m, int mult)
{
    if (mult > 0) den_.push_back({one_minus(table_, m), mult});
    return *this;
}

TermBuilder& TermBuilder::times_ratio(int a, const Monomial& u, bool invert)
{
    Monomial m = u;
    if (a >= 0) {
        for (int k = 1; k <= a; ++k) {
            m[0] = u[0] + k;
            invert ? over_one_minus(m) : times_one_minus(m);
        }
    } else {
        for (int k = a + 1; k <= 0; ++k) {
            m[0] = u[0] + k;
            invert ? times_one_minus(m) : over_one_minus(m);
        }
    }
    return *this;
}

RationalExpression TermBuilder::build() const
{
    return RationalExpression::from_factors(table_, scalar_, mono_, num_, den_);
}

std::vector<std::vector<int>> compositions(int d, int k)
{
    std::vector<std::vector<int>> out;
    if (k <= 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur(k, 0);
    // lexicographic: first part runs 0..d
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == k - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            cur[pos] = a;
            rec(pos + 1, left - a);
        }
    };
    rec(0, d);
    return out;
}

std::vector<MultiDegree> degrees_below(const MultiDegree& cap)
{
    std::vector<MultiDegree> out;
    MultiDegree cur(cap.size(), 0);
    for (int c : cap)
        if (c < 0) throw UsageError("degree cap must be nonnegative");
    while (true) {
        out.push_back(cur);
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            if (cur[i] < cap[i]) {
                ++cur[i];
                for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = 0;
                break;
            }
            if (i == 0) return out;
        }
        if (cur.empty()) return out;
    }
}

RationalExpression ratio_R(const TablePtr& table, int a, const Monomial& u)
{
    return TermBuilder(table).times_ratio(a, u).build();
}

Monomial character(const TablePtr& table, const std::vector<std::pair<std::size_t, int>>& powers, int qpow)
{
    Monomial m(table->size());
    m[0] = qpow;
    for (const auto& [v, e] : powers) m[v] += e;
    return m;
}

namespace {

Rational sign_of(long long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

void require_degree(int d)
{
    if (d < 0) throw UsageError("degree must be nonnegative");
}

} // namespace

JCoefficient projective_j(int n, int d)
{
    require_degree(d);
    auto space = SpaceDescriptor::projective(n);
    TablePtr t = space.table();
    TermBuilder b(t);
    for (int l = 1; l <= d; ++l) b.over_one_minus(character(t, {{1, -1}}, l), n);
    return {space, {d}, b.build()};
}

RationalExpression grassmannian_term(int r, int n, const std::vector<int>& c)
{
    auto space = SpaceDescriptor::grassmannian(r, n);
    TablePtr t = space.table();
    if (static_cast<int>(c.size()) != r) throw UsageError("composition length must equal r");
    int d = 0;
    for (int x : c) d += x;
    TermBuilder b(t);
    b.scale(sign_of(static_cast<long long>(r - 1) * d));
    // L[1,i] sits at table index i
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j < i; ++j) {
            b.times_one_minus(character(t, {{i, -1}, {j, 1}}, c[i - 1] - c[j - 1]));
            b.over_one_minus(character(t, {{i, -1}, {j, 1}}));
        }
        for (int l = 1; l <= c[i - 1]; ++l) b.over_one_minus(character(t, {{i, -1}}, l), n);
    }
    return b.build();
}

JCoefficient grassmannian_j(int r, int n, int d)
{
    require_degree(d);
    auto space = SpaceDescriptor::grassmannian(r, n);
    auto comps = compositions(d, r);
    auto value = sum_terms(space.table(), comps.size(), [&](std::size_t i) { return grassmannian_term(r, n, comps[i]); });
    return {space, {d}, value};
}

JumpProfile JumpProfile::from_degrees(std::vector<int> sorted)
{
    if (sorted.empty()) throw UsageError("jump profile needs r >= 1");
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0) throw UsageError("jump profile degrees must be nonnegative");
        if (i && sorted[i] < sorted[i - 1]) throw UsageError("jump profile degrees must be nondecreasing");
    }
    JumpProfile p;
    p.degrees = std::move(sorted);
    for (std::size_t i = 1; i < p.degrees.size(); ++i)
        if (p.degrees[i] != p.degrees[i - 1]) p.ends.push_back(static_cast<int>(i));
    p.ends.push_back(static_cast<int>(p.degrees.size()));
    return p;
}

std::vector<int> JumpProfile::multiplicities() const
{
    std::vector<int> out;
    int prev = 0;
    for (int e : ends) {
        out.push_back(e - prev);
        prev = e;
    }
    return out;
}

int JumpProfile::block_degree(std::size_t block) const { return degrees[static_cast<std::size_t>(ends[block] - 1)]; }

int JumpProfile::total() const
{
    int s = 0;
    for (int x : degrees) s += x;
    return s;
}

std::vector<JumpProfile> jump_profiles(int r, int d)
{
    std::vector<JumpProfile> out;
    for (auto& c : compositions(d, r))
        if (std::is_sorted(c.begin(), c.end())) out.push_back(JumpProfile::from_degrees(c));
    return out;
}

RationalExpression quot_profile_tangent_euler(const JumpProfile& p, int n)
{
    const int r = static_cast<int>(p.degrees.size());
    auto space = SpaceDescriptor::grassmannian(r, n);
    TablePtr t = space.table();
    TermBuilder b(t);
    for (int s = 1; s <= r; ++s)
        for (int l = 1; l <= p.degrees[s - 1]; ++l) b.times_one_minus(character(t, {{s, -1}}, l), n);
    auto mult = p.multiplicities();
    for (std::size_t i = 0; i < p.ends.size(); ++i) {
        int si = i ? p.ends[i - 1] : 0;
        for (std::size_t j = 0; j < i; ++j) {
            int sj = j ? p.ends[j - 1] : 0;
            int dij = p.block_degree(i) - p.block_degree(j);
            b.scale(sign_of(static_cast<long long>(mult[i]) * mult[j] * (dij - 1)));
            for (int s = si + 1; s <= p.ends[i]; ++s)
                for (int u = sj + 1; u <= p.ends[j]; ++u) b.over_one_minus(character(t, {{s, -1}, {u, 1}}, dij));
        }
    }
    return b.build();
}

JCoefficient grassmannian_j_structured(int r, int n, int d, const PushOptions& opts)
{
    require_degree(d);
    auto space = SpaceDescriptor::grassmannian(r, n);
    TablePtr t = space.table();
    auto vars = space.level_vars(1);
    RationalExpression total(t);
    for (const auto& p : jump_profiles(r, d)) {
        RationalExpression f = quot_profile_tangent_euler(p, n).inverse();
        total += weyl_pushforward(f, vars, BlockMerge{p.ends, {r}}, opts);
    }
    return {space, {d}, total};
}

RationalExpression flag_obstruction_euler(const std::vector<int>& dims, int n)
{
    auto space = SpaceDescriptor::flag(dims, n);
    TablePtr t = space.table();
    TermBuilder b(t);
    const int l = static_cast<int>(dims.size());
    for (int i = 1; i < l; ++i) {
        for (int j = 1; j <= dims[i - 1]; ++j) {
            b.times_one_minus(character(t, {{space.var(i, j), -1}}), n);
            for (int k = 1; k <= dims[i]; ++k)
                b.over_one_minus(character(t, {{space.var(i, j), -1}, {space.var(i + 1, k), 1}}));
        }
    }
    return b.build();
}

namespace {

void check_composition(const std::vector<int>& dims, const std::vector<std::vector<int>>& comp)
{
    if (comp.size() != dims.size()) throw UsageError("composition needs one row per level");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (static_cast<int>(comp[i].size()) != dims[i]) throw UsageError("composition row has the wrong length");
        for (int x : comp[i])
            if (x < 0) throw UsageError("composition entries must be nonnegative");
    }
}

} // namespace

RationalExpression flag_fixed_contribution(const std::vector<int>& dims, int n,
                                           const std::vector<std::vector<int>>& comp)
{
    auto space = SpaceDescriptor::flag(dims, n);
    check_composition(dims, comp);
    TablePtr t = space.table();
    TermBuilder b(t);
    const int l = static_cast<int>(dims.size());
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= dims[i - 1]; ++j) {
            const std::size_t v = space.var(i, j);
            const int dij = comp[i - 1][j - 1];
            for (int m = 1; m <= dij; ++m) b.times_one_minus(character(t, {{v, -1}}, m), n);
            if (i == l) continue;
            for (int k = 1; k <= dims[i]; ++k)
                b.over_one_minus(character(t, {{v, -1}, {space.var(i + 1, k), 1}}, dij - comp[i][k - 1]));
        }
    }
    return b.build();
}

RationalExpression flag_term(const std::vector<int>& dims, int n, const std::vector<std::vector<int>>& comp,
                             FlagForm form)
{
    auto space = SpaceDescriptor::flag(dims, n);
    check_composition(dims, comp);
    TablePtr t = space.table();
    TermBuilder b(t);
    const int l = static_cast<int>(dims.size());
    for (int i = 1; i <= l; ++i) {
        const int mi = dims[i - 1];
        int di = 0;
        for (int x : comp[i - 1]) di += x;
        b.scale(sign_of(static_cast<long long>(mi - 1) * di));
        if (form == FlagForm::canonical) {
            for (int j = 1; j <= mi; ++j) {
                for (int k = 1; k < j; ++k) {
                    auto u = character(t, {{space.var(i, j), -1}, {space.var(i, k), 1}});
                    b.times_one_minus(character(t, {{space.var(i, j), -1}, {space.var(i, k), 1}},
                                                comp[i - 1][j - 1] - comp[i - 1][k - 1]));
                    b.over_one_minus(u);
                }
            }
        } else {
            for (int j = 1; j <= mi; ++j) {
                for (int k = 1; k <= mi; ++k) {
                    if (k == j) continue;
                    auto u = character(t, {{space.var(i, j), -1}, {space.var(i, k), 1}});
                    b.times_ratio(comp[i - 1][k - 1] - comp[i - 1][j - 1], u);
                }
            }
        }
        // cross factor to the next level; above the top level sit n trivial
        // bundles of degree zero
        const int next = i < l ? dims[i] : n;
        for (int j = 1; j <= mi; ++j) {
            for (int k = 1; k <= next; ++k) {
                std::vector<std::pair<std::size_t, int>> pw{{space.var(i, j), -1}};
                int dk = 0;
                if (i < l) {
                    pw.emplace_back(space.var(i + 1, k), 1);
                    dk = comp[i][k - 1];
                }
                b.times_ratio(comp[i - 1][j - 1] - dk, character(t, pw), true);
            }
        }
    }
    return b.build();
}

std::vector<std::vector<std::vector<int>>> flag_compositions(const std::vector<int>& dims, const MultiDegree& d)
{
    if (d.size() != dims.size()) throw UsageError("multidegree needs one entry per level");
    std::vector<std::vector<std::vector<int>>> out{{}};
    for (std::size_t i = 0; i < dims.size(); ++i) {
        require_degree(d[i]);
        auto level = compositions(d[i], dims[i]);
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& prefix : out) {
            for (const auto& c : level) {
                auto x = prefix;
                x.push_back(c);
                next.push_back(std::move(x));
            }
        }
        out = std::move(next);
    }
    return out;
}

JCoefficient flag_j(const std::vector<int>& dims, int n, const MultiDegree& d, FlagForm form)
{
    auto space = SpaceDescriptor::flag(dims, n);
    auto comps = flag_compositions(dims, d);
    auto value = sum_terms(space.table(), comps.size(), [&](std::size_t i) { return flag_term(dims, n, comps[i], form); });
    return {space, d, value};
}

namespace {

// Rename L[a,j] of a component table to L[a+offset,j] of the product table.
RationalExpression embed(const RationalExpression& e, const SpaceDescriptor& part, int offset, const TablePtr& target)
{
    std::vector<Binding> bindings;
    auto sizes = part.level_sizes();
    for (std::size_t a = 0; a < sizes.size(); ++a) {
        for (int j = 1; j <= sizes[a]; ++j) {
            Monomial m(target->size());
            m[target->index(line_bundle_name(static_cast<int>(a) + 1 + offset, j))] = 1;
            bindings.push_back({line_bundle_name(static_cast<int>(a) + 1, j), 1, std::move(m)});
        }
    }
    return e.substitute(bindings, target);
}

} // namespace

JCoefficient product_j(const std::vector<SpaceDescriptor>& spaces, const std::vector<MultiDegree>& degrees)
{
    if (spaces.size() != degrees.size()) throw UsageError("product needs one multidegree per component");
    auto space = SpaceDescriptor::product(spaces);
    TablePtr t = space.table();
    RationalExpression value = RationalExpression::constant(t, 1);
    MultiDegree all;
    int offset = 0;
    for (std::size_t c = 0; c < spaces.size(); ++c) {
        JCoefficient part = compute_coefficient(spaces[c], degrees[c]);
        value *= embed(part.value, spaces[c], offset, t);
        all.insert(all.end(), degrees[c].begin(), degrees[c].end());
        offset += static_cast<int>(spaces[c].levels());
    }
    return {space, all, value};
}

namespace {

JCoefficient isotropic_conjecture(int n, int d, bool include_diagonal, CrossReading reading, SpaceDescriptor space)
{
    require_degree(d);
    TablePtr t = space.table();
    auto comps = compositions(d, n);
    auto value = sum_terms(t, comps.size(), [&](std::size_t ci) {
        const auto& c = comps[ci];
        TermBuilder b(t);
        for (int i = 1; i <= n; ++i) {
            b.scale(sign_of(static_cast<long long>(i - 1) * d));
            for (int j = 1; j <= i; ++j) {
                for (int k = include_diagonal ? j : j + 1; k <= i; ++k) {
                    for (int m = 0; m <= c[j - 1] + c[k - 1]; ++m) b.times_one_minus(character(t, {{j, -1}, {k, -1}}, m));
                    b.over_one_minus(character(t, {{j, -1}, {k, -1}}));
                }
            }
            for (int j = 1; j <= i; ++j) {
                for (int k = j + 1; k <= i; ++k) {
                    b.times_one_minus(character(t, {{k, -1}, {j, 1}}, c[k - 1] - c[j - 1]));
                    b.over_one_minus(character(t, {{k, -1}, {j, 1}}));
                }
            }
        }
        for (int i = 1; i <= n - 1; ++i) {
            for (int j = 1; j <= i; ++j) {
                for (int k = 1; k <= i + 1; ++k) {
                    int a = c[j - 1] - c[k - 1];
                    if (reading == CrossReading::ratio) {
                        b.times_ratio(a, character(t, {{j, -1}, {k, 1}}), true);
                    } else if (k != j) {
                        auto u = character(t, {{j, -1}, {k, 1}});
                        b.times_one_minus(u);
                        b.over_one_minus(character(t, {{j, -1}, {k, 1}}, a));
                    }
                }
            }
        }
        return b.build();
    });
    return {space, {d}, value, true};
}

} // namespace

JCoefficient lagrangian_flag_j_conjecture(int n, int d, CrossReading reading)
{
    return isotropic_conjecture(n, d, false, reading, SpaceDescriptor::lagrangian_flag(n));
}

JCoefficient bd_flag_j_conjecture(int n, int d, CrossReading reading)
{
    return isotropic_conjecture(n, d, true, reading, SpaceDescriptor::orthogonal_flag(n, 2 * n));
}

JCoefficient compute_coefficient(const SpaceDescriptor& space, const MultiDegree& d)
{
    using K = SpaceDescriptor::Kind;
    auto single = [&]() {
        if (d.size() != 1) throw UsageError("this space takes a single degree");
        return d[0];
    };
    switch (space.kind()) {
    case K::point:
        for (int x : d)
            if (x != 0) throw UsageError("a point has only degree zero");
        return {space, d, RationalExpression::constant(space.table(), 1)};
    case K::projective: return projective_j(space.n(), single());
    case K::grassmannian: return grassmannian_j(space.dims()[0], space.n(), single());
    case K::flag: return flag_j(space.dims(), space.n(), d, FlagForm::canonical);
    case K::lagrangian_flag: return lagrangian_flag_j_conjecture(space.dims()[0], single());
    case K::orthogonal_flag: return bd_flag_j_conjecture(space.dims()[0], single());
    case K::product: {
        std::vector<MultiDegree> parts;
        std::size_t pos = 0;
        for (const auto& c : space.components()) {
            std::size_t k = c.levels();
            if (pos + k > d.size()) throw UsageError("multidegree too short for product");
            parts.emplace_back(d.begin() + pos, d.begin() + pos + k);
            pos += k;
        }
        if (pos != d.size()) throw UsageError("multidegree too long for product");
        return product_j(space.components(), parts);
    }
    }
    throw UsageError("unsupported space");
}

JSeries compute_series(const SpaceDescriptor& space, const MultiDegree& cap)
{
    JSeries s{space, cap, {}};
    for (const auto& d : degrees_below(cap)) s.coefficients.push_back(compute_coefficient(space, d));
    return s;
}

Polynomial descendant_series(const SpaceDescriptor& space, int d, const RationalExpression& gamma, int order)
{
    JCoefficient j = compute_coefficient(space, {d});
    KClassExpr f{space, j.value * gamma};
    return euler_characteristic(f).q_series(order);
}

nlohmann::json to_json(const JCoefficient& c)
{
    nlohmann::json j;
    j["space"] = c.space.to_json();
    j["degree"] = c.degree;
    j["value"] = to_json(c.value);
    if (c.conjectural) j["conjectural"] = true;
    return j;
}

nlohmann::json to_json(const JSeries& s)
{
    nlohmann::json j;
    j["space"] = s.space.to_json();
    j["cap"] = s.cap;
    j["coefficients"] = nlohmann::json::array();
    for (const auto& c : s.coefficients) {
        nlohmann::json e;
        e["degree"] = c.degree;
        e["value"] = to_json(c.value);
        j["coefficients"].push_back(std::move(e));
    }
    if (!s.coefficients.empty() && s.coefficients.front().conjectural) j["conjectural"] = true;
    return j;
}

std::string to_text(const JCoefficient& c) { return to_text(c.value); }

} // namespace jk
