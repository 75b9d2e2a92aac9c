#ifndef JK_TERM_SUM_HPP
#define JK_TERM_SUM_HPP

#include <cstddef>
#include <functional>

#include "jk/rational_expression.hpp"

namespace jk {

using TermFn = std::function<RationalExpression(std::size_t)>;

// Sum of term(0) + ... + term(count-1) over `table`.
// The serial version folds left to right. The parallel version evaluates
// terms with OpenMP, brings them over one common denominator and adds the
// numerators in index order, so its result does not depend on the thread
// count. Both give equal values (see equals()).
RationalExpression sum_terms_serial(const TablePtr& table, std::size_t count, const TermFn& term);
RationalExpression sum_terms_parallel(const TablePtr& table, std::size_t count, const TermFn& term);
RationalExpression sum_terms(const TablePtr& table, std::size_t count, const TermFn& term);

// Evaluate f(0..count-1) into a vector, in parallel when enabled.
template <class T>
std::vector<T> map_indices(std::size_t count, const std::function<T(std::size_t)>& f);

// Global switch, default on; JK_THREADS caps the OpenMP thread count.
void set_parallel(bool on);
bool parallel_enabled();
void apply_thread_limit_from_env();

} // namespace jk

#endif
