#ifndef JK_CORRESPONDENCE_HPP
#define JK_CORRESPONDENCE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "jk/jfunction.hpp"

namespace jk {

enum class CheckMode { strict, unit_tolerant };
std::string mode_name(CheckMode m);

struct TermOutcome {
    std::string composition;  // e.g. "(1,0)"
    std::string verdict;      // pass | residual | mismatch
    std::string residual;     // text of LHS/RHS when it is a unit, else ""
    bool ok = false;          // counted as passing in the report's mode
};

struct IdentityReport {
    std::string identity;
    nlohmann::json params;
    CheckMode mode = CheckMode::strict;
    std::vector<TermOutcome> terms;
    nlohmann::json extra = nlohmann::json::object();
    bool pass = true;
    long long millis = 0;

    // Timing is left out unless asked for, so reports are reproducible.
    nlohmann::json to_json(bool with_timing = false) const;
    void add(TermOutcome t);
};

std::string composition_text(const std::vector<int>& c);

// Compare lhs with rhs: equal -> pass; lhs/rhs a unit c*q^k -> residual.
TermOutcome compare_terms(const std::string& label, const RationalExpression& lhs, const RationalExpression& rhs,
                          CheckMode mode);

// value * L[i,1]^{-1} q^{d_i}, for coefficients of products of projective spaces
JCoefficient shift_op_apply(int level, const JCoefficient& coeff);
// coeff * prod_{i>j} (L_i^{-1} q^{d_i} - L_j^{-1} q^{d_j}) / prod_{i>j} (L_i^{-1} - L_j^{-1}), first r levels
RationalExpression dd_delta_apply(const JCoefficient& coeff, int r);

// Left side of the correspondence for one composition, over the Gr(r,n) table.
RationalExpression abelian_side(int r, int n, const std::vector<int>& composition);
// q^{sum_j (r-j) d_j}
Monomial predicted_residual(int r, const std::vector<int>& composition);

IdentityReport abelian_nonabelian_check(int r, int n, int d, CheckMode mode);
IdentityReport multiplicativity_check(int n, int r, int cap);
IdentityReport route_check(int r, int n, int d);
IdentityReport reduction_check(int r, int n, int d);
IdentityReport weyl_check(int r, int n, int d);
IdentityReport flag_weyl_check(const std::vector<int>& dims, int n, const MultiDegree& d);
IdentityReport qregular_check(const std::vector<JCoefficient>& coeffs, const std::string& label);
// doubly-infinite ratio flag form against the canonical one, per composition
IdentityReport flag_form_comparison(const std::vector<int>& dims, int n, const MultiDegree& d);

// Whether a coefficient has q-valuation >= 0 and is 1 when d = 0.
bool q_regular(const JCoefficient& c);

} // namespace jk

#endif
