#pragma once

#include <stdexcept>
#include <string>

namespace netalg {

// Structurally invalid input: ring/order mismatch, zero divisor, bad file.
struct MalformedInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented operation precondition was violated by the caller.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

// P is identically singular: the closed loop is not well-posed.
struct WellPosednessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A step budget ran out; the message names the partial state.
struct ResourceExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Random substitution kept hitting denominator zeros.
struct DegenerateStructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two methods that must agree did not.
struct InternalInconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace netalg
