#pragma once

#include <stdexcept>

namespace koszul {

/// Malformed input or violated precondition.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured combinatorial bound.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace koszul
