#ifndef JK_JFUNCTION_HPP
#define JK_JFUNCTION_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "jk/kclass.hpp"

namespace jk {

struct JCoefficient {
    SpaceDescriptor space;
    MultiDegree degree;
    RationalExpression value;
    bool conjectural = false;
};

struct JSeries {
    SpaceDescriptor space;
    MultiDegree cap;
    std::vector<JCoefficient> coefficients;  // every d <= cap, lexicographic
};

// Accumulates scalar * monomial * prod (1 - m)^{+-k} without expanding.
class TermBuilder {
public:
    explicit TermBuilder(TablePtr table);
    TermBuilder& scale(const Rational& c);
    TermBuilder& times(const Monomial& m);
    TermBuilder& times_one_minus(const Monomial& m, int mult = 1);
    TermBuilder& over_one_minus(const Monomial& m, int mult = 1);
    // multiply by R(a; u), or divide when `invert`
    TermBuilder& times_ratio(int a, const Monomial& u, bool invert = false);
    RationalExpression build() const;
    const TablePtr& table() const { return table_; }

private:
    TablePtr table_;
    Rational scalar_ = 1;
    Monomial mono_;
    std::vector<Factor> num_, den_;
};

// Weak compositions of d into k parts, lexicographic.
std::vector<std::vector<int>> compositions(int d, int k);
// All multidegrees 0 <= d <= cap, lexicographic.
std::vector<MultiDegree> degrees_below(const MultiDegree& cap);

// R(a; u): prod_{m=1}^a (1 - u q^m) for a >= 0, 1 / prod_{m=a+1}^0 (1 - u q^m) for a < 0.
RationalExpression ratio_R(const TablePtr& table, int a, const Monomial& u);

// Monomial helpers over a table: product of L^{e}, q^{k}.
Monomial character(const TablePtr& table, const std::vector<std::pair<std::size_t, int>>& powers, int qpow = 0);

JCoefficient projective_j(int n, int d);

RationalExpression grassmannian_term(int r, int n, const std::vector<int>& composition);
JCoefficient grassmannian_j(int r, int n, int d);

struct JumpProfile {
    std::vector<int> degrees;  // d_1 <= ... <= d_r
    std::vector<int> ends;     // m_1 < ... < m_k = r, block ends
    static JumpProfile from_degrees(std::vector<int> sorted);
    std::vector<int> multiplicities() const;
    int block_degree(std::size_t block) const;
    int total() const;
};
std::vector<JumpProfile> jump_profiles(int r, int d);

RationalExpression quot_profile_tangent_euler(const JumpProfile& profile, int n);
JCoefficient grassmannian_j_structured(int r, int n, int d, const PushOptions& opts = {});

RationalExpression flag_obstruction_euler(const std::vector<int>& dims, int n);
// composition[i][j] = d_{i+1,j+1}
RationalExpression flag_fixed_contribution(const std::vector<int>& dims, int n,
                                           const std::vector<std::vector<int>>& composition);

enum class FlagForm { canonical, theorem_ratio };
RationalExpression flag_term(const std::vector<int>& dims, int n, const std::vector<std::vector<int>>& composition,
                             FlagForm form);
std::vector<std::vector<std::vector<int>>> flag_compositions(const std::vector<int>& dims, const MultiDegree& d);
JCoefficient flag_j(const std::vector<int>& dims, int n, const MultiDegree& d, FlagForm form);

JCoefficient product_j(const std::vector<SpaceDescriptor>& spaces, const std::vector<MultiDegree>& degrees);

// Reading of the cross factor 1/(1 - L_j^{-1} L_k q^{d_j - d_k}) of the
// isotropic conjectures, whose j = k case is 1/0 as displayed.
enum class CrossReading { ratio, skip_diagonal };
JCoefficient lagrangian_flag_j_conjecture(int n, int d, CrossReading reading = CrossReading::ratio);
JCoefficient bd_flag_j_conjecture(int n, int d, CrossReading reading = CrossReading::ratio);

JCoefficient compute_coefficient(const SpaceDescriptor& space, const MultiDegree& d);
JSeries compute_series(const SpaceDescriptor& space, const MultiDegree& cap);

// Truncated q-series of chi(J_d * gamma) on a Grassmannian.
Polynomial descendant_series(const SpaceDescriptor& space, int d, const RationalExpression& gamma, int order);

nlohmann::json to_json(const JCoefficient& c);
nlohmann::json to_json(const JSeries& s);
std::string to_text(const JCoefficient& c);

} // namespace jk

#endif
