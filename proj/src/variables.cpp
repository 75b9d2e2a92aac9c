#include "jk/variables.hpp"

#include "jk/errors.hpp"

namespace jk {

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.empty() || names_.front() != "q")
        throw UsageError("variable table must start with \"q\"");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw UsageError("empty variable name");
        if (!lookup_.emplace(names_[i], i).second)
            throw UsageError("duplicate variable name '" + names_[i] + "'");
    }
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const
{
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::size_t VariableTable::index(std::string_view name) const
{
    if (auto i = find(name)) return *i;
    throw UsageError("unknown variable '" + std::string(name) + "'");
}

TablePtr make_table(std::vector<std::string> names)
{
    return std::make_shared<const VariableTable>(std::move(names));
}

bool same_table(const TablePtr& a, const TablePtr& b)
{
    return a == b || (a && b && *a == *b);
}

void require_same_table(const TablePtr& a, const TablePtr& b, std::string_view op)
{
    if (!same_table(a, b)) throw UsageError(std::string(op) + ": variable table mismatch");
}

std::string line_bundle_name(int level, int index)
{
    return "L[" + std::to_string(level) + "," + std::to_string(index) + "]";
}

std::string equivariant_name(int k) { return "x[" + std::to_string(k) + "]"; }

bool Monomial::is_unit() const
{
    for (int e : exps_)
        if (e != 0) return false;
    return true;
}

Monomial Monomial::inverse() const
{
    Monomial r(*this);
    for (int& e : r.exps_) e = -e;
    return r;
}

Monomial& Monomial::operator*=(const Monomial& other)
{
    if (other.exps_.size() != exps_.size()) throw UsageError("monomial length mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
    return *this;
}

} // namespace jk
