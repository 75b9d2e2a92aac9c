#ifndef JK_SPACE_HPP
#define JK_SPACE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "jk/rational_expression.hpp"

namespace jk {

using MultiDegree = std::vector<int>;

// Combinatorial target space. A Grassmannian is a single-level flag and
// projective(n) is Gr(1, n), i.e. P^{n-1}. Products concatenate the levels of
// their components, so (P^{n-1})^r has one line bundle L[i,1] per factor.
class SpaceDescriptor {
public:
    enum class Kind { point, projective, grassmannian, flag, product, lagrangian_flag, orthogonal_flag };

    static SpaceDescriptor point();
    static SpaceDescriptor projective(int n);
    static SpaceDescriptor grassmannian(int r, int n);
    static SpaceDescriptor flag(std::vector<int> dims, int n);
    static SpaceDescriptor product(std::vector<SpaceDescriptor> parts);
    // Complete isotropic flags with one line bundle L[1,j] per step,
    // j = 1..n; n() is the ambient dimension (2n, or 2n+1 for type B).
    static SpaceDescriptor lagrangian_flag(int n);
    static SpaceDescriptor orthogonal_flag(int n, int ambient);

    Kind kind() const { return kind_; }
    const std::vector<int>& dims() const { return dims_; }
    int n() const { return n_; }
    const std::vector<SpaceDescriptor>& components() const { return parts_; }

    // Rank of each level, in table order.
    std::vector<int> level_sizes() const;
    std::size_t levels() const { return level_sizes().size(); }

    // [q, L[1,1], ..., L[1,m_1], L[2,1], ...]
    TablePtr table() const;
    // Table index of L[level, index], both 1-based.
    std::size_t var(int level, int index) const;
    // Table indices of one level's line bundles.
    std::vector<std::size_t> level_vars(int level) const;

    std::string kind_name() const;
    nlohmann::json to_json() const;
    static SpaceDescriptor from_json(const nlohmann::json& j);
    friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;

private:
    Kind kind_ = Kind::point;
    std::vector<int> dims_;
    int n_ = 0;
    std::vector<SpaceDescriptor> parts_;
};

// [q, x[1], ..., x[n]]
TablePtr equivariant_table(int n);
// [q]
TablePtr q_table();
// Shared table instance for a list of names.
TablePtr cached_table(const std::vector<std::string>& names);

// A class on a space: value over the space's table.
struct KClassExpr {
    SpaceDescriptor space;
    RationalExpression value;
};

} // namespace jk

#endif
