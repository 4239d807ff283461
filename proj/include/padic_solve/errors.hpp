#pragma once

#include <stdexcept>

namespace padic_solve {

// Argument outside the mathematical domain of an operation (non-prime
// modulus, non-unit base, value outside a convergence region, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The instance falls into one of the cases the theory leaves open
// (p | k with k != p, k = p with n > 1, p = 2).
struct UnsupportedCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-check that can only fail on a bug, never on bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// A scan window or instance size exceeded the configured ceiling.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace padic_solve
