#pragma once

#include <stdexcept>
#include <string>

namespace gogmagog {

// A caller asked for something outside an operation's stated domain.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A formula was asked for a case its statement excludes; another route applies.
struct NotApplicable : PreconditionError {
    using PreconditionError::PreconditionError;
};

// A configured budget (variables, box volume, object count, factorial size) was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic outside the ring, e.g. inverting a non-unit.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constant-term expression whose series factors are not power series.
struct MalformedExpression : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division left a remainder; always an internal bug.
struct InexactDivision : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gogmagog
