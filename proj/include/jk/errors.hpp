#ifndef JK_ERRORS_HPP
#define JK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jk {

// Bad input to an operation: precondition violated, malformed text, etc.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Arithmetic that has no exact answer: division by zero, a pole under
// substitution, a negative q-valuation where a power series was requested.
class AlgebraError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A mathematical invariant the library checks did not hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace jk

#endif
