#ifndef JK_KCLASS_HPP
#define JK_KCLASS_HPP

#include <vector>

#include "jk/space.hpp"

namespace jk {

// prod_k (1 - chars[k]^{-1})
RationalExpression lambda_minus1_dual(const TablePtr& table, const std::vector<Monomial>& chars);

// Block boundaries of a partial flag inside one rank-r level: dims are the
// cumulative ends m_1 < ... < m_l = r.
struct BlockMerge {
    std::vector<int> fine;    // e.g. {1, 2, 3}
    std::vector<int> coarse;  // subset of fine ends containing r, e.g. {3} or {2, 3}
};

// Factors (1 - L_a^{-1} L_b) for a in a higher fine block than b, both in the
// same coarse block; `vars` are the table indices of L_1..L_r.
std::vector<Factor> relative_tangent_factors(const TablePtr& table, const std::vector<std::size_t>& vars,
                                             const BlockMerge& merge);

// Over the target Grassmannian's table.
RationalExpression relative_tangent_euler(const SpaceDescriptor& flag, const SpaceDescriptor& target);

struct PushOptions {
    // sum_w (-1)^{inv(w)} w(f) / E with E unpermuted, instead of sum_w w(f / E)
    bool signed_lemma = false;
    // require invariance of the result under each coarse block's symmetric group
    bool check_invariance = true;
};

// Coset representatives of prod S_{coarse} / prod S_{fine}, as permutations
// of positions 0..r-1, in lexicographic order of the block labelling.
std::vector<Permutation> coset_representatives(const BlockMerge& merge);

RationalExpression weyl_pushforward(const RationalExpression& f, const std::vector<std::size_t>& vars,
                                    const BlockMerge& merge, const PushOptions& opts = {});
// f.space is the flag (m_1 < ... < m_l = r, n); f.value lives on target's table.
KClassExpr weyl_pushforward(const KClassExpr& f, const SpaceDescriptor& target, const PushOptions& opts = {});

// Whether f is fixed by the symmetric group on `vars`.
bool is_symmetric(const RationalExpression& f, const std::vector<std::size_t>& vars);

// L[1,j]^{-1} -> x[subset[j]] (1-based subset, increasing); result over [q, x[1..n]].
RationalExpression fixed_point_restrict(const KClassExpr& f, const std::vector<int>& subset);

// All r-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r);

// Localization sum over fixed points, over [q, x[1..n]], after checking the
// tangent denominators cancel.
RationalExpression euler_characteristic_equivariant(const KClassExpr& f);
// The same with every x[k] set to 1; over [q].
RationalExpression euler_characteristic(const KClassExpr& f);

} // namespace jk

#endif
