#pragma once

#include <stdexcept>
#include <string>

namespace ske {

// Bad input data or configuration (CLI exit code 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure, e.g. eigensolver non-convergence (CLI exit code 3).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ske
