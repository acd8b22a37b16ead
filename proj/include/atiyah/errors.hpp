#pragma once

#include <stdexcept>
#include <string>

namespace atiyah {

// Bad input data (malformed files, duplicate points, non-increasing axis
// coordinates). CLI maps this to exit code 3.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// API misuse (i == j, wrong inequality kind for the given parameters).
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A consistency check inside the library failed. Indicates a bug, not a
// property of the input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace atiyah
