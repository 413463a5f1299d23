#pragma once

#include <stdexcept>
#include <string>

namespace teleclone {

// Protocol misuse: consumed modes, identical operands, axis mismatches,
// wrong protocol shape.
struct UsageError : std::logic_error {
    explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

// A form refers to a primitive that does not exist in the network.
struct IntegrityError : std::logic_error {
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

// The state is outside the regime a formula supports (e.g. correlated
// X/Y quadratures in the coherent-fidelity formula).
struct UnsupportedStateError : std::runtime_error {
    explicit UnsupportedStateError(const std::string& what) : std::runtime_error(what) {}
};

// A covariance matrix that violates the uncertainty bound.
struct InvalidStateError : std::runtime_error {
    explicit InvalidStateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace teleclone
