#ifndef JK_VARIABLES_HPP
#define JK_VARIABLES_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jk {

// Ordered list of variable names. Index 0 is always "q"; the order is the
// lexicographic monomial order used by every expression built over the table.
class VariableTable {
public:
    explicit VariableTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const;  // throws UsageError

    friend bool operator==(const VariableTable& a, const VariableTable& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

TablePtr make_table(std::vector<std::string> names);
bool same_table(const TablePtr& a, const TablePtr& b);
void require_same_table(const TablePtr& a, const TablePtr& b, std::string_view op);

// "L[i,j]" and "x[k]" symbol spellings.
std::string line_bundle_name(int level, int index);
std::string equivariant_name(int k);

// Exponent vector over a table, one entry per variable; negative entries are
// allowed (Laurent monomials).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    int& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool is_unit() const;
    Monomial inverse() const;
    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

private:
    std::vector<int> exps_;
};

} // namespace jk

#endif
