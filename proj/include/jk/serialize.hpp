#ifndef JK_SERIALIZE_HPP
#define JK_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "jk/rational_expression.hpp"

namespace jk {

// Text: "q^2*L[1,1]^-1" monomials with "a/b" coefficients joined by " + ";
// "0" for zero. Expressions print as "(num) / (f1)^k*(f2)" with the
// denominator left factored.
std::string to_text(const Monomial& m, const VariableTable& table);
std::string to_text(const Polynomial& p);
std::string to_text(const RationalExpression& e);

Polynomial parse_polynomial(std::string_view text, const TablePtr& table);
RationalExpression parse_expression(std::string_view text, const TablePtr& table);

// JSON: {"vars": [...], "num": [[e_0, ..., e_k, "a/b"], ...], "den": [...]},
// denominator expanded.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const RationalExpression& e);
Polynomial polynomial_from_json(const nlohmann::json& j, const TablePtr& table);
RationalExpression expression_from_json(const nlohmann::json& j);
TablePtr table_from_json(const nlohmann::json& j);

} // namespace jk

#endif
