#pragma once

#include <stdexcept>
#include <string>

namespace rydgrav {

/// Quantum numbers that cannot label a physical state.
struct invalid_state : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A state pair that violates a quadrupole selection rule; the message
/// names the rule.
struct invalid_transition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request outside what the implementation can deliver (e.g. exact
/// quadrature above the supported principal quantum number).
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rydgrav
