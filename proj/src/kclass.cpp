#include "jk/kclass.hpp"

#include <algorithm>

#include "jk/errors.hpp"
#include "jk/term_sum.hpp"

namespace jk {

RationalExpression lambda_minus1_dual(const TablePtr& table, const std::vector<Monomial>& chars)
{
    std::vector<Factor> top;
    for (const auto& c : chars) {
        top.push_back({Polynomial::constant(table, 1) - Polynomial::term(table, c.inverse()), 1});
    }
    return RationalExpression::from_factors(table, 1, Monomial(), top, {});
}

namespace {

void validate(const BlockMerge& m)
{
    if (m.fine.empty() || m.coarse.empty()) throw UsageError("block merge needs nonempty dimension lists");
    for (std::size_t i = 0; i < m.fine.size(); ++i)
        if (m.fine[i] <= (i ? m.fine[i - 1] : 0)) throw UsageError("fine dimensions must increase");
    for (std::size_t i = 0; i < m.coarse.size(); ++i) {
        if (m.coarse[i] <= (i ? m.coarse[i - 1] : 0)) throw UsageError("coarse dimensions must increase");
        if (std::find(m.fine.begin(), m.fine.end(), m.coarse[i]) == m.fine.end())
            throw UsageError("coarse dimensions must be a subset of the fine ones");
    }
    if (m.coarse.back() != m.fine.back()) throw UsageError("fine and coarse flags must have the same top dimension");
}

// [start, end) ranges of fine blocks inside each coarse block
struct Layout {
    struct Coarse {
        int start, end;
        std::vector<std::pair<int, int>> blocks;
    };
    std::vector<Coarse> coarse;
};

Layout layout(const BlockMerge& m)
{
    validate(m);
    Layout out;
    int prev = 0;
    std::size_t fi = 0;
    for (int c : m.coarse) {
        Layout::Coarse cb{prev, c, {}};
        int s = prev;
        while (fi < m.fine.size() && m.fine[fi] <= c) {
            cb.blocks.emplace_back(s, m.fine[fi]);
            s = m.fine[fi];
            ++fi;
        }
        out.coarse.push_back(std::move(cb));
        prev = c;
    }
    return out;
}

Monomial unit_ratio(std::size_t nv, std::size_t dual, std::size_t plain)
{
    Monomial m(nv);
    m[dual] -= 1;
    m[plain] += 1;
    return m;
}

int inversions(const Permutation& w)
{
    int c = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w(a) > w(b)) ++c;
    return c;
}

} // namespace

std::vector<Factor> relative_tangent_factors(const TablePtr& table, const std::vector<std::size_t>& vars,
                                             const BlockMerge& merge)
{
    auto lay = layout(merge);
    if (static_cast<int>(vars.size()) != merge.fine.back()) throw UsageError("variable count does not match flag rank");
    const std::size_t nv = table->size();
    std::vector<Factor> out;
    for (const auto& cb : lay.coarse) {
        for (std::size_t bi = 0; bi < cb.blocks.size(); ++bi) {
            for (std::size_t bj = 0; bj < bi; ++bj) {
                for (int s = cb.blocks[bi].first; s < cb.blocks[bi].second; ++s) {
                    for (int t = cb.blocks[bj].first; t < cb.blocks[bj].second; ++t) {
                        Monomial m = unit_ratio(nv, vars[s], vars[t]);
                        out.push_back({Polynomial::constant(table, 1) - Polynomial::term(table, m), 1});
                    }
                }
            }
        }
    }
    return out;
}

RationalExpression relative_tangent_euler(const SpaceDescriptor& flag, const SpaceDescriptor& target)
{
    if (target.kind() != SpaceDescriptor::Kind::grassmannian && target.kind() != SpaceDescriptor::Kind::projective)
        throw UsageError("pushforward target must be a Grassmannian");
    if (flag.kind() == SpaceDescriptor::Kind::product || flag.kind() == SpaceDescriptor::Kind::point)
        throw UsageError("pushforward source must be a flag");
    const int r = target.dims()[0];
    if (flag.dims().back() != r) throw UsageError("flag top dimension does not match the Grassmannian rank");
    TablePtr t = target.table();
    auto top = relative_tangent_factors(t, target.level_vars(1), BlockMerge{flag.dims(), {r}});
    return RationalExpression::from_factors(t, 1, Monomial(), top, {});
}

std::vector<Permutation> coset_representatives(const BlockMerge& merge)
{
    auto lay = layout(merge);
    const std::size_t r = static_cast<std::size_t>(merge.fine.back());
    // per coarse block, all labellings
    std::vector<std::vector<std::vector<std::size_t>>> per_block;
    for (const auto& cb : lay.coarse) {
        std::vector<int> labels;
        for (std::size_t b = 0; b < cb.blocks.size(); ++b)
            for (int k = cb.blocks[b].first; k < cb.blocks[b].second; ++k) labels.push_back(static_cast<int>(b));
        std::vector<std::vector<std::size_t>> maps;
        do {
            // k-th variable of block b goes to the k-th position labelled b
            std::vector<std::size_t> img(labels.size());
            std::vector<int> next(cb.blocks.size(), 0);
            for (std::size_t pos = 0; pos < labels.size(); ++pos) {
                int b = labels[pos];
                int src = cb.blocks[b].first - cb.start + next[b]++;
                img[src] = pos;
            }
            maps.push_back(std::move(img));
        } while (std::next_permutation(labels.begin(), labels.end()));
        per_block.push_back(std::move(maps));
    }
    std::vector<Permutation> out;
    std::vector<std::size_t> idx(per_block.size(), 0);
    while (true) {
        std::vector<std::size_t> img(r);
        for (std::size_t c = 0; c < per_block.size(); ++c) {
            const auto& m = per_block[c][idx[c]];
            std::size_t off = static_cast<std::size_t>(lay.coarse[c].start);
            for (std::size_t k = 0; k < m.size(); ++k) img[off + k] = off + m[k];
        }
        out.emplace_back(std::move(img));
        std::size_t c = per_block.size();
        while (c > 0) {
            --c;
            if (++idx[c] < per_block[c].size()) break;
            idx[c] = 0;
            if (c == 0) return out;
        }
        if (per_block.empty()) return out;
    }
}

bool is_symmetric(const RationalExpression& f, const std::vector<std::size_t>& vars)
{
    for (const auto& t : adjacent_transpositions(vars.size()))
        if (!equals(f.permuted(vars, t), f)) return false;
    return true;
}

RationalExpression weyl_pushforward(const RationalExpression& f, const std::vector<std::size_t>& vars,
                                    const BlockMerge& merge, const PushOptions& opts)
{
    const TablePtr& table = f.table();
    auto tangent = relative_tangent_factors(table, vars, merge);
    auto reps = coset_representatives(merge);
    RationalExpression result(table);
    if (!opts.signed_lemma) {
        RationalExpression quotient = f / RationalExpression::from_factors(table, 1, Monomial(), tangent, {});
        result = sum_terms(table, reps.size(), [&](std::size_t i) { return quotient.permuted(vars, reps[i]); });
    } else {
        RationalExpression e = RationalExpression::from_factors(table, 1, Monomial(), tangent, {});
        result = sum_terms(table, reps.size(), [&](std::size_t i) {
            RationalExpression t = f.permuted(vars, reps[i]) / e;
            return inversions(reps[i]) % 2 ? -t : t;
        });
    }
    result = result.reduced();
    if (opts.check_invariance) {
        auto lay = layout(merge);
        for (const auto& cb : lay.coarse) {
            std::vector<std::size_t> group(vars.begin() + cb.start, vars.begin() + cb.end);
            if (!is_symmetric(result, group))
                throw InvariantViolation("pushforward result is not symmetric in its coarse block");
        }
    }
    return result;
}

KClassExpr weyl_pushforward(const KClassExpr& f, const SpaceDescriptor& target, const PushOptions& opts)
{
    if (target.kind() != SpaceDescriptor::Kind::grassmannian && target.kind() != SpaceDescriptor::Kind::projective)
        throw UsageError("pushforward target must be a Grassmannian");
    const int r = target.dims()[0];
    if (f.space.dims().empty() || f.space.dims().back() != r)
        throw UsageError("flag top dimension does not match the Grassmannian rank");
    require_same_table(f.value.table(), target.table(), "pushforward");
    return {target, weyl_pushforward(f.value, target.level_vars(1), BlockMerge{f.space.dims(), {r}}, opts)};
}

std::vector<std::vector<int>> subsets(int n, int r)
{
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur(r);
    for (int k = 0; k < r; ++k) cur[k] = k + 1;
    while (true) {
        out.push_back(cur);
        int k = r - 1;
        while (k >= 0 && cur[k] == n - r + k + 1) --k;
        if (k < 0) return out;
        ++cur[k];
        for (int j = k + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
}

namespace {

void require_grassmannian(const SpaceDescriptor& s)
{
    if (s.kind() != SpaceDescriptor::Kind::grassmannian && s.kind() != SpaceDescriptor::Kind::projective)
        throw UsageError("operation needs a Grassmannian or projective space");
}

} // namespace

RationalExpression fixed_point_restrict(const KClassExpr& f, const std::vector<int>& subset)
{
    require_grassmannian(f.space);
    const int r = f.space.dims()[0], n = f.space.n();
    if (static_cast<int>(subset.size()) != r) throw UsageError("fixed point subset has the wrong size");
    for (std::size_t j = 0; j < subset.size(); ++j)
        if (subset[j] < 1 || subset[j] > n || (j && subset[j] <= subset[j - 1]))
            throw UsageError("fixed point subset must be increasing within 1..n");
    TablePtr target = equivariant_table(n);
    std::vector<Binding> bindings;
    for (int j = 1; j <= r; ++j) {
        Monomial m(target->size());
        m[static_cast<std::size_t>(subset[j - 1])] = -1;
        bindings.push_back({line_bundle_name(1, j), 1, std::move(m)});
    }
    return f.value.substitute(bindings, target);
}

RationalExpression euler_characteristic_equivariant(const KClassExpr& f)
{
    require_grassmannian(f.space);
    require_same_table(f.value.table(), f.space.table(), "euler characteristic");
    if (!is_symmetric(f.value, f.space.level_vars(1)))
        throw InvariantViolation("class is not symmetric in the tautological line bundles");
    const int r = f.space.dims()[0], n = f.space.n();
    TablePtr t = equivariant_table(n);
    auto points = subsets(n, r);
    RationalExpression total = sum_terms(t, points.size(), [&](std::size_t p) {
        const auto& I = points[p];
        std::vector<Factor> den;
        for (int i : I) {
            for (int j = 1; j <= n; ++j) {
                if (std::find(I.begin(), I.end(), j) != I.end()) continue;
                Monomial m(t->size());
                m[static_cast<std::size_t>(j)] = 1;
                m[static_cast<std::size_t>(i)] = -1;
                den.push_back({Polynomial::constant(t, 1) - Polynomial::term(t, m), 1});
            }
        }
        RationalExpression normal = RationalExpression::from_factors(t, 1, Monomial(), {}, den);
        return fixed_point_restrict(f, I) * normal;
    });
    total = total.reduced();
    // tangent weights are differences x[i] - x[j]; none may survive
    for (const auto& fac : total.factors()) {
        const auto& p = fac.poly;
        if (p.size() == 2 && !p.depends_on(0) && p.coeff(0) == Rational(1) && p.coeff(1) == Rational(-1)) {
            bool pure = true;
            for (std::size_t i = 0; i < 2 && pure; ++i) {
                int nonzero = 0;
                for (int e : p.exponents(i)) {
                    if (e == 1) ++nonzero;
                    else if (e != 0) pure = false;
                }
                pure = pure && nonzero == 1;
            }
            if (pure) throw InvariantViolation("localization sum keeps a tangent-weight pole");
        }
    }
    return total;
}

RationalExpression euler_characteristic(const KClassExpr& f)
{
    RationalExpression eq = euler_characteristic_equivariant(f);
    const int n = f.space.n();
    TablePtr qt = q_table();
    std::vector<Binding> bindings;
    for (int k = 1; k <= n; ++k) bindings.push_back({equivariant_name(k), 1, Monomial(qt->size())});
    return eq.substitute(bindings, qt);
}

} // namespace jk
