#pragma once

#include <stdexcept>

namespace fstefan {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An iterative scheme hit its iteration budget before meeting tolerance.
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Node index outside the valid range of a mesh-based operation.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

} // namespace fstefan
